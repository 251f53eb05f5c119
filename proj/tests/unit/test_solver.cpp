#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "blocksieve/block_json.hpp"
#include "blocksieve/errors.hpp"
#include "blocksieve/rules.hpp"
#include "blocksieve/solver.hpp"

using namespace blocksieve;

namespace {

std::vector<int> excluded(Dim r, int t_max, unsigned jobs = 1) {
  SolverOptions opts;
  opts.jobs = jobs;
  std::vector<int> out;
  for (const auto& row : scan(r, t_max, ModeFlags::nsp(), opts)) {
    if (!row.certificate.feasible()) out.push_back(row.t);
  }
  return out;
}

std::vector<int> range(int a, int b) {
  std::vector<int> out(b - a + 1);
  std::iota(out.begin(), out.end(), a);
  return out;
}

std::vector<int> concat(std::vector<int> a, std::initializer_list<int> b) {
  a.insert(a.end(), b);
  return a;
}

}  // namespace

TEST_CASE("basic_block_dim") {
  CHECK(basic_block_dim(3, 1, 1) == 3);
  CHECK(basic_block_dim(3, 2, 1) == 12);
  CHECK(basic_block_dim(3, 1, 2) == 12);
  CHECK(basic_block_dim(3, 2, 2) == 12);
  CHECK(basic_block_dim(2, 2, 3) == 6);
  CHECK(BasicBlock::make(5, 2, 2).dim == 20);
  CHECK_THROWS_AS(basic_block_dim(0, 1, 1), InvalidArgument);
}

TEST_CASE("lower_bound") {
  auto lb = lower_bound(3);
  CHECK(lb.n_min == 42);
  CHECK(lb.argmin == std::vector<int>{2, 3});
  CHECK(lower_bound(2).n_min == 20);
  CHECK(lower_bound(2).argmin == std::vector<int>{2});
  CHECK(lower_bound(1).n_min == 14);
  CHECK(lower_bound(5).n_min == 70);
  CHECK(lower_bound(7).n_min == 98);
}

TEST_CASE("minimal_form") {
  const BlockSystem l32 = minimal_form(3, 2);
  const BlockSystem expected(3, {{{0, 1, 1}, 3}, {{0, 2, 2}, 12}, {{1, 2, 1}, 6},
                                 {{1, 1, 2}, 6}, {{2, 1, 1}, 3}, {{2, 2, 2}, 12}});
  CHECK(l32 == expected);
  CHECK(total_dim(minimal_form(2, 2)) == 20);
  CHECK(total_dim(minimal_form(3, 4)) == 126);
  CHECK_THROWS_AS(minimal_form(3, 1), InvalidArgument);
}

TEST_CASE("grid bounds") {
  auto b = GridBounds::defaults(42, 3);
  CHECK(b.max_level == 13);
  CHECK(b.max_d == 6);
  // lcm(d^2, 7) is not monotone: d = 7 fits N = 147 although d = 5 and 6 do not
  b = GridBounds::defaults(147, 7);
  CHECK(b.max_d == 7);
}

TEST_CASE("solve examples") {
  auto c = solve({42, 3, ModeFlags::nsp(), std::nullopt});
  REQUIRE(c.feasible());
  CHECK(total_dim(*c.witness) == 42);
  CHECK(check(*c.witness, ModeFlags::nsp()).empty());

  c = solve({45, 3, ModeFlags::nsp(), std::nullopt});
  CHECK_FALSE(c.feasible());
  CHECK_FALSE(c.refutation.empty());

  c = solve({4, 2, ModeFlags::skew_allowed(), std::nullopt});
  REQUIRE(c.feasible());
  CHECK(*c.witness == BlockSystem(2, {{{0, 1, 1}, 2}, {{1, 1, 1}, 2}}));

  c = solve({30, 6, ModeFlags::nsp(), std::nullopt});
  CHECK_FALSE(c.feasible());

  c = solve({3, 3, ModeFlags{}, std::nullopt});
  REQUIRE(c.feasible());
  CHECK(*c.witness == BlockSystem(3, {{{0, 1, 1}, 3}}));
}

TEST_CASE("r must divide N") {
  const auto c = solve({43, 3, ModeFlags::nsp(), std::nullopt});
  CHECK_FALSE(c.feasible());
  CHECK(c.reason == "R1 forces r | N");
}

TEST_CASE("scans") {
  CHECK(excluded(2, 16) == concat(range(1, 9), {11, 13, 15}));
  CHECK(excluded(3, 20) == concat(range(1, 13), {15, 16, 19}));
  CHECK(excluded(5, 21) == concat(range(1, 13), {15, 16, 17, 20, 21}));
}

TEST_CASE("t = 19 for r = 5 uses a 5x5 coradical block") {
  const auto c = solve({95, 5, ModeFlags::nsp(), std::nullopt});
  REQUIRE(c.feasible());
  CHECK(c.witness->contains({0, 5, 5}));
}

TEST_CASE("admissible group orders") {
  const auto orders42 = admissible_group_orders(42, ModeFlags::nsp());
  CHECK(std::find(orders42.begin(), orders42.end(), 3) != orders42.end());
  const auto orders4 = admissible_group_orders(4, ModeFlags::skew_allowed());
  CHECK(std::find(orders4.begin(), orders4.end(), 2) != orders4.end());
  const auto orders30 = admissible_group_orders(30, ModeFlags::nsp());
  for (Dim r : {2, 3, 5, 6, 10, 15}) {
    CHECK(std::find(orders30.begin(), orders30.end(), r) == orders30.end());
  }
}

TEST_CASE("auto-nsp") {
  ModeFlags flags;
  flags.auto_nsp = true;
  auto c = solve({45, 3, flags, std::nullopt});
  CHECK(c.regime.find("derived") == std::string::npos);  // gcd(3,15) = 3
  CHECK(c.regime.find("auto-nsp not applicable") != std::string::npos);
  c = solve({42, 3, flags, std::nullopt});
  CHECK(c.regime.find("derived: gcd(3,14)=1") != std::string::npos);
  CHECK(c.feasible());
  c = solve({42, 3, ModeFlags::nsp(), std::nullopt});
  CHECK(c.regime.find("conditional") != std::string::npos);
}

TEST_CASE("determinism across thread counts") {
  SolverOptions one;
  SolverOptions many;
  many.jobs = 4;
  for (auto [n, r] : {std::pair<Dim, Dim>{147, 7}, {95, 5}, {100, 5}, {60, 1}, {57, 3}}) {
    const auto a = solve({n, r, ModeFlags::nsp(), std::nullopt}, one);
    const auto b = solve({n, r, ModeFlags::nsp(), std::nullopt}, many);
    CHECK(certificate_to_json(a).dump() == certificate_to_json(b).dump());
  }
  CHECK(excluded(3, 20, 4) == excluded(3, 20, 1));
}

TEST_CASE("limits") {
  SolverOptions opts;
  opts.level_cap = 10;
  CHECK_THROWS_AS(solve({66, 3, ModeFlags::nsp(), std::nullopt}, opts), SearchLimitError);
  opts = {};
  opts.node_cap = 1;
  CHECK_THROWS_AS(solve({147, 7, ModeFlags::nsp(), std::nullopt}, opts), SearchLimitError);
  CHECK_THROWS_AS(solve({0, 3, ModeFlags::nsp(), std::nullopt}), InvalidArgument);

  setenv("BLOCKSIEVE_NODE_CAP", "123", 1);
  CHECK(SolverOptions::from_env().node_cap == 123);
  setenv("BLOCKSIEVE_NODE_CAP", "abc", 1);
  CHECK_THROWS_AS(SolverOptions::from_env(), InvalidArgument);
  unsetenv("BLOCKSIEVE_NODE_CAP");
  CHECK(SolverOptions::from_env().node_cap == SolverOptions{}.node_cap);
}

TEST_CASE("explicit bounds") {
  // with d capped at 1 no edge block exists, so nsp cannot be met
  const auto c = solve({42, 3, ModeFlags::nsp(), GridBounds{13, 1}});
  CHECK_FALSE(c.feasible());
  // two levels are not enough for the minimal form
  CHECK_FALSE(solve({42, 3, ModeFlags::nsp(), GridBounds{1, 6}}).feasible());
  CHECK(solve({42, 3, ModeFlags::nsp(), GridBounds{2, 2}}).feasible());
}

TEST_CASE("certificate json") {
  const auto j = certificate_to_json(solve({45, 3, ModeFlags::nsp(), std::nullopt}));
  CHECK(j["verdict"] == "infeasible");
  CHECK(j.contains("stats"));
  CHECK(j.contains("refutation"));
  CHECK_FALSE(j.contains("witness"));
  const auto k = certificate_to_json(solve({42, 3, ModeFlags::nsp(), std::nullopt}));
  CHECK(k["verdict"] == "feasible");
  CHECK(k.contains("witness"));
  CHECK(parse_block_system(k["witness"].dump()).group_order() == 3);
}
