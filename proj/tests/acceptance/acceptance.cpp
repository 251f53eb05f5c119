// One PASS/FAIL line per acceptance criterion; exits 1 when any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blocksieve/analyzer.hpp"
#include "blocksieve/block_json.hpp"
#include "blocksieve/oracle.hpp"
#include "blocksieve/rules.hpp"
#include "blocksieve/solver.hpp"

using namespace blocksieve;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Coalgebra corpus(const std::string& name) {
  std::ifstream in(std::string(BLOCKSIEVE_CORPUS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coalgebra(ss.str());
}

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::vector<int> seq(int a, int b, std::initializer_list<int> more = {}) {
  std::vector<int> out;
  for (int t = a; t <= b; ++t) out.push_back(t);
  out.insert(out.end(), more);
  return out;
}

// Excluded t, after checking that every feasible row carries a passing witness.
std::vector<int> scan_excluded(Dim r, int t_max, Outcome& o) {
  SolverOptions opts;
  opts.jobs = 4;
  std::vector<int> out;
  for (const auto& row : scan(r, t_max, ModeFlags::nsp(), opts)) {
    if (!row.certificate.feasible()) {
      out.push_back(row.t);
      continue;
    }
    const auto& w = *row.certificate.witness;
    if (total_dim(w) != row.target_dim || !check(w, ModeFlags::nsp()).empty()) {
      o.ok = false;
      o.detail += " bad witness at t=" + std::to_string(row.t) + ";";
    }
  }
  return out;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome c1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto lb3 = lower_bound(3);
  const double elapsed = seconds_since(t0);
  o.ok = lb3.n_min == 42 && lb3.argmin == std::vector<int>{2, 3} && lower_bound(2).n_min == 20 &&
         lower_bound(5).n_min == 70 && lower_bound(7).n_min == 98 && elapsed < 1e-3;
  o.detail = "lower_bound(3) = " + std::to_string(lb3.n_min) + " at d in " + join(lb3.argmin) +
             ", r=2,5,7 -> " + std::to_string(lower_bound(2).n_min) + "," +
             std::to_string(lower_bound(5).n_min) + "," + std::to_string(lower_bound(7).n_min);
  return o;
}

Outcome scan_criterion(Dim r, int t_max, const std::vector<int>& expected, double limit) {
  Outcome o;
  const auto t0 = Clock::now();
  const auto got = scan_excluded(r, t_max, o);
  const double elapsed = seconds_since(t0);
  if (got != expected) o.ok = false;
  if (elapsed >= limit) o.ok = false;
  o.detail = "r=" + std::to_string(r) + " excluded " + join(got) + o.detail;
  return o;
}

Outcome c4() {
  Outcome o = scan_criterion(5, 21, seq(1, 13, {15, 16, 17, 20, 21}), 600);
  const auto t0 = Clock::now();
  const auto c = solve({147, 7, ModeFlags::nsp(), std::nullopt});
  const bool seven = c.feasible() && check(*c.witness, ModeFlags::nsp()).empty();
  if (!seven || seconds_since(t0) >= 600) o.ok = false;
  o.detail += std::string("; r=7 t=21 ") + (seven ? "feasible" : "infeasible");
  return o;
}

Outcome c5() {
  Outcome o;
  for (auto [n, r] : {std::pair<Dim, Dim>{36, 3}, {45, 3}, {75, 5}, {100, 5}}) {
    const auto t0 = Clock::now();
    const auto c = solve({n, r, ModeFlags::nsp(), std::nullopt});
    const double elapsed = seconds_since(t0);
    if (c.feasible() || elapsed >= 60) o.ok = false;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += "(" + std::to_string(n) + "," + std::to_string(r) + ") " +
                std::string(to_string(c.verdict));
  }
  return o;
}

Outcome c6() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto survey = survey_group_orders(30, ModeFlags::nsp());
  const double elapsed = seconds_since(t0);
  std::vector<int> admissible;
  for (const auto& [r, cert] : survey) {
    if (cert.feasible()) {
      admissible.push_back(static_cast<int>(r));
      o.detail += " r=" + std::to_string(r) + " witness " +
                  block_system_to_json(*cert.witness).dump();
    }
  }
  o.ok = admissible.empty() && elapsed < 60;
  o.detail = "admissible r " + join(admissible) + (o.detail.empty() ? "" : ";" + o.detail);
  return o;
}

Outcome c7() {
  Outcome o;
  const auto t0 = Clock::now();
  int cases = 0;
  int mismatches = 0;
  for (Dim r = 1; r <= 6; ++r) {
    for (Dim n = r; n <= 60; n += r) {
      for (const auto& flags : {ModeFlags::nsp(), ModeFlags::skew_allowed()}) {
        ++cases;
        const bool a = solve({n, r, flags, std::nullopt}).feasible();
        const bool b = oracle_solve(n, r, flags).feasible();
        if (a != b) {
          ++mismatches;
          o.detail += " mismatch N=" + std::to_string(n) + " r=" + std::to_string(r) + ";";
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  o.ok = mismatches == 0 && elapsed < 1800;
  o.detail = std::to_string(cases - mismatches) + "/" + std::to_string(cases) + " agree" + o.detail;
  return o;
}

Outcome c8() {
  Outcome o;
  int checked = 0;
  for (Dim r = 1; r <= 8; ++r) {
    for (int d = 2; d <= 5; ++d) {
      const auto s = minimal_form(r, d);
      const Dim expect = (2 * d + 2) * r + 2 * std::lcm(Dim{d} * d, r);
      ++checked;
      if (!check(s, ModeFlags::nsp()).empty() || total_dim(s) != expect) {
        o.ok = false;
        o.detail += " L(" + std::to_string(r) + "," + std::to_string(d) + ") fails;";
      }
    }
  }
  o.detail = std::to_string(checked) + " minimal forms" + o.detail;
  return o;
}

Outcome c9() {
  Outcome o;
  auto timed = [&](const std::string& name, const ModeFlags& flags) {
    const auto t0 = Clock::now();
    auto res = analyze(corpus(name), flags);
    if (seconds_since(t0) >= 5) {
      o.ok = false;
      o.detail += " " + name + " too slow;";
    }
    return res;
  };
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      o.ok = false;
      o.detail += " " + what + ";";
    }
  };
  const auto s = timed("sweedler4.json", ModeFlags::skew_allowed());
  expect(s.filtration.dims() == std::vector<std::size_t>{2, 4}, "sweedler filtration");
  expect(s.block_system == BlockSystem(2, {{{0, 1, 1}, 2}, {{1, 1, 1}, 2}}), "sweedler blocks");
  for (int n : {2, 3, 5}) {
    const auto g = timed("grouplike_c" + std::to_string(n) + ".json", ModeFlags{});
    expect(g.block_system == BlockSystem(n, {{{0, 1, 1}, n}}), "grouplike " + std::to_string(n));
  }
  const auto s3 = timed("dual_group_algebra_s3.json", ModeFlags{});
  expect(s3.block_system == BlockSystem(2, {{{0, 1, 1}, 2}, {{0, 2, 2}, 4}}), "dual of kS3");
  const auto sq = timed("sweedler4_squared.json", ModeFlags::skew_allowed());
  expect(sq.filtration.dims() == std::vector<std::size_t>{4, 12, 16}, "sweedler square filtration");
  expect(total_dim(sq.block_system) == 16, "sweedler square total");
  if (o.detail.empty()) o.detail = "6 corpus coalgebras match";
  return o;
}

BlockSystem random_system(std::mt19937& rng) {
  std::uniform_int_distribution<int> level(0, 4);
  std::uniform_int_distribution<int> d(1, 3);
  std::uniform_int_distribution<int> dim(1, 24);
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_int_distribution<int> order(1, 5);
  BlockSystem::Map blocks;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    BlockIndex idx{level(rng), d(rng), d(rng)};
    if (idx.level == 0) idx.d2 = idx.d1;
    blocks[idx] = dim(rng);
  }
  return BlockSystem(order(rng), std::move(blocks));
}

Outcome c10() {
  Outcome o;
  auto fail = [&](const std::string& what) {
    o.ok = false;
    o.detail += " " + what + ";";
  };
  std::mt19937 rng(2024);
  int involution = 0;
  int invariance = 0;
  int round_trips = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_system(rng);
    if (transpose(transpose(s)) != s) ++involution;
    for (const auto& flags : {ModeFlags{}, ModeFlags::skew_allowed(), ModeFlags::nsp()}) {
      if (check(s, flags).empty() != check(transpose(s), flags).empty()) ++invariance;
    }
    if (parse_block_system(block_system_to_json(s).dump()) != s) ++round_trips;
  }
  if (involution) fail("transpose involution");
  if (invariance) fail("transpose invariance");
  if (round_trips) fail("round trip");

  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  int changes = 0;
  for (const char* name : {"grouplike_c2.json", "grouplike_c3.json", "grouplike_c5.json",
                           "sweedler4.json", "sweedler4_squared.json", "matrix2.json",
                           "dual_group_algebra_s3.json"}) {
    const auto c = corpus(name);
    const auto base = analyze(c, ModeFlags{});
    auto shape = [](const AnalysisResult& r) {
      std::multiset<std::tuple<int, int, int, Dim>> out;
      for (const auto& [key, value] : r.q_table) {
        const auto [n, tau, mu] = key;
        out.insert({n, r.components[tau].d, r.components[mu].d, value});
      }
      return out;
    };
    for (int i = 0; i < 20; ++i) {
      Mat p;
      do {
        p.assign(c.dim(), Vec(c.dim()));
        for (auto& row : p) {
          for (auto& x : row) {
            x = Q(num(rng), den(rng));
            x.canonicalize();
          }
        }
      } while (!inverse(p));
      const auto moved = analyze(change_basis(c, p), ModeFlags{});
      ++changes;
      if (moved.block_system != base.block_system || shape(moved) != shape(base)) {
        fail(std::string("basis change on ") + name);
        break;
      }
    }
  }

  for (Dim r = 1; r <= 7; ++r) {
    for (Dim n = r; n < lower_bound(r).n_min; n += r) {
      if (solve({n, r, ModeFlags::nsp(), std::nullopt}).feasible()) {
        fail("N=" + std::to_string(n) + " r=" + std::to_string(r) + " below the bound is feasible");
      }
    }
  }
  if (o.detail.empty()) {
    o.detail = "1000 random systems, " + std::to_string(changes) +
               " basis changes, bound sweep r<=7";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lower bound", c1},
      {2, "scan r=2", [] { return scan_criterion(2, 16, seq(1, 9, {11, 13, 15}), 60); }},
      {3, "scan r=3", [] { return scan_criterion(3, 20, seq(1, 13, {15, 16, 19}), 300); }},
      {4, "scan r=5 and r=7", c4},
      {5, "exclusions 36/45/75/100", c5},
      {6, "dimension 30", c6},
      {7, "oracle equivalence", c7},
      {8, "minimal forms", c8},
      {9, "analyzer corpus", c9},
      {10, "property suites", c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(t0);
    if (!o.ok) ++failed;
    std::printf("%s %2d %-24s %9.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                elapsed, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
