#include "blocksieve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "blocksieve/errors.hpp"

// Deliberately naive. Nothing here calls into the rule engine or the solver:
// the dense checker below is a second, separate reading of the conditions.

namespace blocksieve {
namespace {

struct Dense {
  int width = 0;  // dims 1..width-1 are addressable
  Dim r = 0;
  std::vector<std::vector<Dim>> levels;  // levels[n][d1 * width + d2]

  Dim get(int n, int a, int b) const {
    if (n < 0 || n >= static_cast<int>(levels.size())) return 0;
    if (a >= width || b >= width) return 0;
    return levels[n][a * width + b];
  }
  int top() const { return static_cast<int>(levels.size()) - 1; }
};

/// True iff every rule switched on by the flags holds.
bool dense_passes(const Dense& s, bool nsp, bool ncs) {
  const int w = s.width;
  const int top = s.top();
  const Dim r = s.r;
  auto present = [&](int n, int a, int b) { return s.get(n, a, b) != 0; };

  // level 0
  for (int a = 1; a < w; ++a) {
    for (int b = 1; b < w; ++b) {
      const Dim v = s.get(0, a, b);
      if (a != b && v != 0) return false;
      if (a == b && v % (Dim{a} * a) != 0) return false;
    }
  }
  if (s.get(0, 1, 1) != r) return false;

  for (int n = 0; n <= top; ++n) {
    bool any = false;
    for (int a = 1; a < w; ++a) {
      for (int b = 1; b < w; ++b) {
        const Dim v = s.get(n, a, b);
        if (v == 0) continue;
        any = true;
        if (v < 0 || v % r != 0) return false;
        if (n == 0) continue;
        if (v % (Dim{a} * b) != 0) return false;
        if ((a == 1 || b == 1) && v % (Dim{a} * b * r) != 0) return false;
        if (s.get(n, b, a) != v) return false;
        if (s.get(0, a, a) == 0 || s.get(0, b, b) == 0) return false;
      }
    }
    if (!any) return false;  // contiguity: every level up to the top is used
  }

  // chains
  for (int n = 2; n <= top; ++n) {
    for (int a = 1; a < w; ++a) {
      for (int b = 1; b < w; ++b) {
        if (!present(n, a, b)) continue;
        for (int i = 1; i < n; ++i) {
          bool ok = false;
          for (int c = 1; c < w && !ok; ++c) ok = present(i, a, c) && present(n - i, c, b);
          if (!ok) return false;
        }
      }
    }
  }

  // off-diagonal entries must be followed by something higher in their row
  for (int n = 1; n <= top; ++n) {
    for (int a = 1; a < w; ++a) {
      for (int b = 1; b < w; ++b) {
        if (a == b || !present(n, a, b)) continue;
        bool ok = false;
        for (int n2 = n + 1; n2 <= top && !ok; ++n2) {
          for (int c = 1; c < w && !ok; ++c) ok = present(n2, a, c);
        }
        if (!ok) return false;
      }
    }
  }

  int m = 0;
  int l = 0;
  for (int n = 1; n <= top; ++n) {
    if (present(n, 1, 1)) {
      m = n;
      if (l == 0) l = n;
    }
  }
  if (s.get(m, 1, 1) != r) return false;

  if (ncs && top < 1) return false;

  if (nsp) {
    if (present(1, 1, 1)) return false;
    bool necessary = false;
    for (int d = 2; d < w && !necessary; ++d) {
      if (!present(1, d, 1) || !present(1, 1, d)) continue;
      for (int k = 2; k <= top && !necessary; ++k) necessary = present(k, d, d);
    }
    if (!necessary || m <= 1) return false;
    if (l != 0 && l < m) {
      if (l <= 1) return false;
      bool found = false;
      for (int lp = l + 1; lp <= top && !found; ++lp) {
        for (int d1 = 2; d1 < w && !found; ++d1) {
          if (!present(lp, d1, 1)) continue;
          for (int d2 = 2; d2 < w && !found; ++d2) {
            if (!present(lp, 1, d2)) continue;
            bool left = false;
            bool right = false;
            for (int d = 2; d < w; ++d) {
              left = left || present(lp - 1, d1, d);
              right = right || present(lp - 1, d, d2);
            }
            found = left && right;
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

Dim divisor_for(Dim r, int a, int b) {
  Dim d = std::lcm(r, Dim{a} * b);
  if (a == 1 || b == 1) d = std::lcm(d, Dim{a} * b * r);
  return d;
}

class Enumerator {
 public:
  using Visit = std::function<bool(const Dense&)>;  // return true to stop

  Enumerator(Dim n, Dim r, bool nsp, bool ncs, Visit visit)
      : n_(n), r_(r), nsp_(nsp), ncs_(ncs), visit_(std::move(visit)) {
    max_level_ = static_cast<int>(n / r - 1);
    for (int d = 2; Dim{d} * d <= n - r; ++d) {
      if (std::lcm(Dim{d} * d, r) <= n - r) max_d_ = d;
    }
    state_.width = max_d_ + 1;
    state_.r = r;
  }

  void run() {
    state_.levels.assign(1, std::vector<Dim>(cells(), 0));
    state_.levels[0][1 * state_.width + 1] = r_;
    level_zero(2, r_);
  }

  std::uint64_t leaves() const { return leaves_; }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(state_.width) * state_.width; }

  bool leaf() {
    ++leaves_;
    return dense_passes(state_, nsp_, ncs_) && visit_(state_);
  }

  bool level_zero(int d, Dim sum) {
    if (d > max_d_) {
      used_.clear();
      for (int a = 1; a <= max_d_; ++a) {
        if (state_.get(0, a, a) != 0) used_.push_back(a);
      }
      pairs_.clear();
      for (std::size_t i = 0; i < used_.size(); ++i) {
        for (std::size_t j = i; j < used_.size(); ++j) pairs_.push_back({used_[i], used_[j]});
      }
      if (sum == n_) return leaf();
      return next_level(sum);
    }
    if (level_zero(d + 1, sum)) return true;
    const Dim step = std::lcm(Dim{d} * d, r_);
    for (Dim v = step; sum + v <= n_; v += step) {
      state_.levels[0][d * state_.width + d] = v;
      if (level_zero(d + 1, sum + v)) return true;
    }
    state_.levels[0][d * state_.width + d] = 0;
    return false;
  }

  bool next_level(Dim sum) {
    const int n = state_.top() + 1;
    if (n > max_level_) return false;
    state_.levels.emplace_back(cells(), 0);
    const bool stop = fill(n, 0, sum, false);
    state_.levels.pop_back();
    return stop;
  }

  bool chain_ok(int n, int a, int b) const {
    for (int i = 1; i < n; ++i) {
      bool ok = false;
      for (int c : used_) {
        if (state_.get(i, a, c) != 0 && state_.get(n - i, c, b) != 0) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool fill(int n, std::size_t k, Dim sum, bool any) {
    if (k == pairs_.size()) {
      if (!any) return false;
      if (sum == n_) return leaf();
      return next_level(sum);
    }
    const auto [a, b] = pairs_[k];
    if (fill(n, k + 1, sum, any)) return true;
    if (nsp_ && n == 1 && a == 1 && b == 1) return false;
    if (!chain_ok(n, a, b) || !chain_ok(n, b, a)) return false;
    const Dim step = divisor_for(r_, a, b);
    const Dim mult = a == b ? 1 : 2;
    bool stop = false;
    for (Dim v = step; sum + mult * v <= n_ && !stop; v += step) {
      state_.levels[n][a * state_.width + b] = v;
      state_.levels[n][b * state_.width + a] = v;
      stop = fill(n, k + 1, sum + mult * v, true);
    }
    if (!stop) {
      state_.levels[n][a * state_.width + b] = 0;
      state_.levels[n][b * state_.width + a] = 0;
    }
    return stop;
  }

  Dim n_;
  Dim r_;
  bool nsp_;
  bool ncs_;
  Visit visit_;
  int max_level_ = 0;
  int max_d_ = 1;
  Dense state_;
  std::vector<int> used_;
  std::vector<std::pair<int, int>> pairs_;
  std::uint64_t leaves_ = 0;
};

BlockSystem to_block_system(const Dense& s) {
  BlockSystem::Map blocks;
  for (int n = 0; n <= s.top(); ++n) {
    for (int a = 1; a < s.width; ++a) {
      for (int b = 1; b < s.width; ++b) {
        if (const Dim v = s.get(n, a, b); v != 0) blocks[{n, a, b}] = v;
      }
    }
  }
  return BlockSystem(s.r, std::move(blocks));
}

struct Mode {
  bool nsp = false;
  bool ncs = false;
};

Mode resolve(Dim n, Dim r, const ModeFlags& flags, const OracleLimits& limits) {
  if (n < 1 || r < 1) throw InvalidArgument("oracle: N and r must be positive");
  if (n > limits.max_dim || r > limits.max_group_order) {
    throw InvalidArgument("oracle refuses N=" + std::to_string(n) + ", r=" +
                          std::to_string(r) + ": limits are N <= " +
                          std::to_string(limits.max_dim) + ", r <= " +
                          std::to_string(limits.max_group_order));
  }
  Mode mode{flags.no_skew_primitives, flags.non_cosemisimple || flags.no_skew_primitives};
  if (flags.auto_nsp && n % r == 0 && std::gcd(r, n / r) == 1) mode = {true, true};
  return mode;
}

}  // namespace

Certificate oracle_solve(Dim n, Dim r, const ModeFlags& flags, const OracleLimits& limits) {
  const Mode mode = resolve(n, r, flags, limits);
  Certificate cert;
  cert.target_dim = n;
  cert.group_order = r;
  cert.regime = mode.nsp ? "oracle, no nontrivial skew-primitives"
                         : (mode.ncs ? "oracle, non-cosemisimple" : "oracle, unrestricted");
  cert.verdict = Verdict::Infeasible;
  if (n % r != 0) {
    cert.reason = "R1 forces r | N";
    return cert;
  }
  Enumerator e(n, r, mode.nsp, mode.ncs, [&](const Dense& s) {
    cert.witness = to_block_system(s);
    return true;
  });
  e.run();
  cert.stats.leaves = e.leaves();
  if (cert.witness) cert.verdict = Verdict::Feasible;
  return cert;
}

std::vector<BlockSystem> oracle_enumerate(Dim n, Dim r, const ModeFlags& flags,
                                          const OracleLimits& limits) {
  const Mode mode = resolve(n, r, flags, limits);
  std::vector<BlockSystem> out;
  if (n % r != 0) return out;
  Enumerator e(n, r, mode.nsp, mode.ncs, [&](const Dense& s) {
    out.push_back(to_block_system(s));
    return false;
  });
  e.run();
  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    return std::lexicographical_compare(a.blocks().begin(), a.blocks().end(),
                                        b.blocks().begin(), b.blocks().end());
  });
  return out;
}

}  // namespace blocksieve
