#include "blocksieve/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blocksieve/errors.hpp"
#include "blocksieve/rules.hpp"
#include "parallel.hpp"

namespace blocksieve {

GridBounds GridBounds::defaults(Dim target_dim, Dim group_order) {
  GridBounds out;
  if (target_dim < 1 || group_order < 1) return out;
  out.max_level = static_cast<int>(std::max<Dim>(0, target_dim / group_order - 1));
  // lcm(d^2, r) is not monotone in d, so every d with d^2 <= N - r is tried.
  const Dim room = target_dim - group_order;
  for (Dim d = 2; d * d <= room; ++d) {
    if (std::lcm(d * d, group_order) <= room) out.max_d = static_cast<int>(d);
  }
  return out;
}

SolverOptions SolverOptions::from_env() {
  SolverOptions out;
  if (const char* cap = std::getenv("BLOCKSIEVE_NODE_CAP"); cap && *cap) {
    char* end = nullptr;
    const auto value = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || value == 0) {
      throw InvalidArgument(std::string("BLOCKSIEVE_NODE_CAP must be a positive integer, got \"") +
                            cap + "\"");
    }
    out.node_cap = value;
  }
  return out;
}

Dim basic_block_dim(Dim r, int d1, int d2) {
  if (r < 1 || d1 < 1 || d2 < 1) {
    throw InvalidArgument("basic_block_dim: r, d1, d2 must be positive");
  }
  if (d1 == 1 && d2 == 1) return r;
  if (d1 == 1) return 2 * Dim{d2} * r;
  if (d2 == 1) return 2 * Dim{d1} * r;
  return std::lcm(Dim{d1} * d2, r);
}

BasicBlock BasicBlock::make(Dim r, int d1, int d2) {
  return {r, d1, d2, basic_block_dim(r, d1, d2)};
}

LowerBound lower_bound(Dim r) {
  if (r < 1) throw InvalidArgument("lower_bound: r must be positive");
  LowerBound out{std::numeric_limits<Dim>::max(), {}};
  // lcm(d^2, r) >= d^2, so once (2d+2)r + 2d^2 passes the best value no
  // larger d can reach it.
  for (Dim d = 2; (2 * d + 2) * r + 2 * d * d <= out.n_min; ++d) {
    const Dim value = (2 * d + 2) * r + 2 * std::lcm(d * d, r);
    if (value < out.n_min) {
      out.n_min = value;
      out.argmin.assign(1, static_cast<int>(d));
    } else if (value == out.n_min) {
      out.argmin.push_back(static_cast<int>(d));
    }
  }
  return out;
}

BlockSystem minimal_form(Dim r, int d) {
  if (r < 1 || d < 2) {
    throw InvalidArgument("minimal_form: requires r >= 1 and d >= 2");
  }
  const Dim diag = std::lcm(Dim{d} * d, r);
  return BlockSystem(r, {{{0, 1, 1}, r},
                         {{0, d, d}, diag},
                         {{1, 1, d}, Dim{d} * r},
                         {{1, d, 1}, Dim{d} * r},
                         {{2, 1, 1}, r},
                         {{2, d, d}, diag}});
}

namespace {

constexpr std::size_t kMaxDims = 10;  // 55 classes fit a 64-bit mask

/// Unit of one block B(n,d1,d2), n >= 1: the lcm of everything that must
/// divide it (r, d1*d2, and d*r on the edges).
Dim entry_unit(Dim r, Dim d1, Dim d2) {
  Dim unit = std::lcm(d1 * d2, r);
  if (d1 == 1 || d2 == 1) unit = std::lcm(unit, d1 * d2 * r);
  return unit;
}

struct Regime {
  bool nsp = false;
  bool ncs = false;
  std::string label;
};

Regime resolve_regime(Dim n, Dim r, const ModeFlags& requested) {
  const ModeFlags flags = requested.normalized();
  Regime out{flags.no_skew_primitives, flags.non_cosemisimple, {}};
  std::string note;
  if (flags.auto_nsp && n % r == 0) {
    const Dim g = std::gcd(r, n / r);
    const std::string gcd = "gcd(" + std::to_string(r) + "," +
                            std::to_string(n / r) + ")=" + std::to_string(g);
    if (g == 1) {
      out.nsp = out.ncs = true;
      note = " (derived: " + gcd + ")";
    } else if (!out.nsp) {
      note = " (auto-nsp not applicable: " + gcd + ")";
    }
  }
  if (out.nsp) {
    out.label = "no nontrivial skew-primitives" +
                (note.starts_with(" (derived")
                     ? note
                     : std::string(" (assumed; conclusions conditional on no "
                                   "nontrivial skew-primitives)"));
  } else if (out.ncs) {
    out.label = "non-cosemisimple, skew-primitives allowed" + note;
  } else {
    out.label = "unrestricted (cosemisimple allowed)" + note;
  }
  return out;
}

struct Class {
  int p = 0;  // positions in the dimension list, p <= q
  int q = 0;
  Dim unit = 0;  // dimension of each of the (one or two) entries
  Dim cost = 0;  // unit, doubled for an off-diagonal pair
};

struct CaseOutcome {
  bool feasible = false;
  bool aborted = false;
  std::optional<BlockSystem> witness;
  CaseTrace trace;
  std::uint64_t leaves = 0;
  std::exception_ptr error;
};

/// Exhaustive search below one choice of diagonal level-0 blocks.
///
/// Phase 1 walks symmetric supports level by level. A level is a nonempty set
/// of classes {(d_p,d_q),(d_q,d_p)}; only classes whose chain condition holds
/// against the lower levels are offered. Phase 2, at every level boundary,
/// asks whether N minus the minimal dimension of the support is a sum of the
/// support's free units (the top B(m,1,1) and B(0,1,1) are pinned to r).
class CaseSearch {
 public:
  CaseSearch(Dim n, Dim r, const Regime& regime, int max_level,
             std::vector<int> level0, const SolverOptions& options,
             const std::atomic<std::size_t>* winner, std::size_t case_index)
      : n_(n),
        r_(r),
        nsp_(regime.nsp),
        ncs_(regime.ncs),
        max_level_(max_level),
        level0_(std::move(level0)),
        node_cap_(options.node_cap),
        winner_(winner),
        case_index_(case_index) {
    dims_.push_back(1);
    dims_.insert(dims_.end(), level0_.begin(), level0_.end());
    k_ = static_cast<int>(dims_.size());
    if (dims_.size() > kMaxDims) {
      throw SearchLimitError("too many distinct comodule dimensions (" +
                             std::to_string(dims_.size()) + ") in one case");
    }
    for (int p = 0; p < k_; ++p) {
      for (int q = p; q < k_; ++q) {
        const Dim unit = entry_unit(r_, dims_[p], dims_[q]);
        classes_.push_back({p, q, unit, p == q ? unit : 2 * unit});
      }
    }
    min_row_cost_.assign(k_, std::numeric_limits<Dim>::max());
    for (const auto& c : classes_) {
      min_row_cost_[c.p] = std::min(min_row_cost_[c.p], c.cost);
      min_row_cost_[c.q] = std::min(min_row_cost_[c.q], c.cost);
    }
    spent_ = r_;
    for (int d : level0_) spent_ += std::lcm(Dim{d} * d, r_);
    rows_.assign(static_cast<std::size_t>(k_), 0);  // level 0 placeholder
  }

  CaseOutcome run() {
    CaseOutcome out;
    out.trace.label = label();
    if (spent_ > n_) {
      close("budget");
    } else {
      out.feasible = descend(0);
    }
    out.aborted = aborted_;
    out.trace.nodes = nodes_;
    out.trace.closures = closures_;
    out.trace.closed_by = first_closure_.empty() ? "empty" : first_closure_;
    out.trace.feasible = out.feasible;
    out.leaves = leaves_;
    if (out.feasible) out.witness = std::move(witness_);
    return out;
  }

 private:
  std::string label() const {
    std::string s = "B(0,d,d) != 0 for d in {1";
    for (int d : level0_) s += "," + std::to_string(d);
    return s + "}";
  }

  void close(const char* reason) {
    ++closures_[reason];
    if (first_closure_.empty()) first_closure_ = reason;
  }

  std::uint32_t row(int level, int p) const {
    return rows_[static_cast<std::size_t>(level) * k_ + p];
  }
  bool has(int level, int p, int q) const { return (row(level, p) >> q) & 1U; }

  void push_level(std::uint64_t mask) {
    const auto base = rows_.size();
    rows_.resize(base + k_, 0);
    Dim cost = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (!((mask >> c) & 1U)) continue;
      const auto& cls = classes_[c];
      rows_[base + cls.p] |= 1U << cls.q;
      rows_[base + cls.q] |= 1U << cls.p;
      cost += cls.cost;
    }
    masks_.push_back(mask);
    costs_.push_back(cost);
    spent_ += cost;
  }

  void pop_level() {
    spent_ -= costs_.back();
    costs_.pop_back();
    masks_.pop_back();
    rows_.resize(rows_.size() - k_);
  }

  int levels() const { return static_cast<int>(masks_.size()); }

  /// Classes at `level` whose chain condition holds against lower levels.
  std::uint64_t chain_admissible(int level) const {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      const auto& cls = classes_[c];
      bool ok = true;
      for (int i = 1; i < level && ok; ++i) {
        ok = (row(i, cls.p) & row(level - i, cls.q)) != 0;
      }
      if (ok) out |= std::uint64_t{1} << c;
    }
    return out;
  }

  int top_pointed() const {
    for (int n = levels(); n >= 1; --n) {
      if (has(n, 0, 0)) return n;
    }
    return 0;
  }

  int low_pointed() const {
    for (int n = 1; n <= levels(); ++n) {
      if (has(n, 0, 0)) return n;
    }
    return 0;
  }

  /// Rows whose highest entry is off-diagonal still owe a higher entry.
  bool escalation_pending(int p) const {
    for (int n = levels(); n >= 1; --n) {
      const auto bits = row(n, p);
      if (bits == 0) continue;
      // Highest level with any entry in this row: it must itself be free of
      // off-diagonal entries.
      return (bits & ~(1U << p)) != 0;
    }
    return false;
  }

  bool necessary_diagonal_present() const {
    for (int p = 1; p < k_; ++p) {
      if (!has(1, p, 0)) continue;
      for (int n = 2; n <= levels(); ++n) {
        if (has(n, p, p)) return true;
      }
    }
    return false;
  }

  /// Lower bound on the dimension still to be added before a leaf can pass.
  Dim future_lower_bound() const {
    Dim lb = 0;
    for (int p = 0; p < k_; ++p) {
      if (escalation_pending(p)) lb = std::max(lb, min_row_cost_[p]);
    }
    if (nsp_) {
      if (top_pointed() < 2) lb = std::max(lb, classes_[0].cost);
      if (!necessary_diagonal_present()) {
        Dim best = std::numeric_limits<Dim>::max();
        for (int p = 1; p < k_; ++p) {
          if (has(1, p, 0)) best = std::min(best, entry_unit(r_, dims_[p], dims_[p]));
        }
        lb = std::max(lb, best);
      }
    }
    return lb;
  }

  /// Existential rules at a level boundary; returns the failing rule or null.
  const char* leaf_failure() const {
    if (ncs_ && levels() == 0) return "RNC";
    for (int p = 0; p < k_; ++p) {
      if (escalation_pending(p)) return "R5";
    }
    if (nsp_) {
      if (has(1, 0, 0) || top_pointed() < 2 || !necessary_diagonal_present()) {
        return "R7";
      }
      const int l = low_pointed();
      const int m = top_pointed();
      if (l < m) {
        bool found = false;
        for (int lp = std::max(l + 1, 2); lp <= levels() && !found; ++lp) {
          for (int p = 1; p < k_ && !found; ++p) {
            found = has(lp, p, 0) && (row(lp - 1, p) & ~1U) != 0;
          }
        }
        if (l <= 1 || !found) return "R8";
      }
    }
    return nullptr;
  }

  struct Slot {
    BlockIndex index;
    Dim unit = 0;   // per entry
    Dim step = 0;   // per multiple of the slot (doubled for a pair)
    bool pair = false;
    bool pinned = false;
  };

  std::vector<Slot> slots() const {
    std::vector<Slot> out;
    out.push_back({{0, 1, 1}, r_, r_, false, true});
    for (int d : level0_) {
      const Dim unit = std::lcm(Dim{d} * d, r_);
      out.push_back({{0, d, d}, unit, unit, false, false});
    }
    const int m = top_pointed();
    for (int n = 1; n <= levels(); ++n) {
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (!((masks_[n - 1] >> c) & 1U)) continue;
        const auto& cls = classes_[c];
        const bool pinned = cls.p == 0 && cls.q == 0 && n == m;
        out.push_back({{n, dims_[cls.p], dims_[cls.q]}, cls.unit, cls.cost,
                       cls.p != cls.q, pinned});
      }
    }
    return out;
  }

  /// reach[i][x]: x * r is a sum of steps of free slots i.. (unbounded).
  static std::vector<std::vector<char>> suffix_reach(const std::vector<Slot>& s,
                                                     Dim r, Dim residual_units) {
    const auto size = static_cast<std::size_t>(residual_units) + 1;
    std::vector<std::vector<char>> reach(s.size() + 1, std::vector<char>(size, 0));
    reach[s.size()][0] = 1;
    for (std::size_t i = s.size(); i-- > 0;) {
      reach[i] = reach[i + 1];
      if (s[i].pinned) continue;
      const auto step = static_cast<std::size_t>(s[i].step / r);
      for (std::size_t x = step; x < size; ++x) {
        if (reach[i][x - step]) reach[i][x] = 1;
      }
    }
    return reach;
  }

  bool try_leaf() {
    ++leaves_;
    if (const char* failure = leaf_failure()) {
      close(failure);
      return false;
    }
    const Dim residual = n_ - spent_;
    const auto s = slots();
    // Every unit is a multiple of r, and a second pointed entry frees r itself.
    const auto reach = suffix_reach(s, r_, residual / r_);
    if (!reach[0][static_cast<std::size_t>(residual / r_)]) {
      close("residual");
      return false;
    }
    build_witness(s, reach, residual / r_);
    return true;
  }

  void build_witness(const std::vector<Slot>& s,
                     const std::vector<std::vector<char>>& reach, Dim units) {
    BlockSystem::Map blocks;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Dim extra = 0;
      if (!s[i].pinned) {
        const Dim step = s[i].step / r_;
        while (!reach[i + 1][static_cast<std::size_t>(units - extra * step)]) ++extra;
        units -= extra * step;
      }
      const Dim dim = s[i].unit * (1 + extra);
      blocks[s[i].index] = dim;
      if (s[i].pair) {
        blocks[{s[i].index.level, s[i].index.d2, s[i].index.d1}] = dim;
      }
    }
    witness_ = BlockSystem(r_, std::move(blocks));
  }

  bool should_stop() {
    if (++nodes_ > node_cap_) {
      throw SearchLimitError("node cap of " + std::to_string(node_cap_) +
                             " exceeded in case " + label() +
                             "; raise BLOCKSIEVE_NODE_CAP");
    }
    if (winner_ && (nodes_ & 0xFFF) == 0 &&
        winner_->load(std::memory_order_relaxed) < case_index_) {
      aborted_ = true;
    }
    return aborted_;
  }

  bool descend(int depth) {
    if (should_stop()) return false;
    if ((depth > 0 || !ncs_) && try_leaf()) return true;
    if (depth == 0 && ncs_) close("RNC");
    if (depth >= max_level_) {
      close("depth");
      return false;
    }
    const int level = depth + 1;
    std::uint64_t offered = chain_admissible(level);
    const auto all = classes_.size() == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << classes_.size()) - 1;
    for (auto rejected = std::popcount(all & ~offered); rejected > 0; --rejected) {
      close("R4");
    }
    if (nsp_ && level == 1) offered &= ~std::uint64_t{1};  // B(1,1,1) = 0
    std::vector<int> bits;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if ((offered >> c) & 1U) bits.push_back(static_cast<int>(c));
    }
    if (bits.empty()) {
      close(nsp_ && level == 1 ? "R7" : "R4");
      return false;
    }
    const Dim budget = n_ - spent_;
    return enumerate(bits, static_cast<int>(bits.size()) - 1, 0, 0, budget, level);
  }

  /// Nonempty subsets of `bits` in increasing mask order, within budget.
  bool enumerate(const std::vector<int>& bits, int i, std::uint64_t mask,
                 Dim cost, Dim budget, int level) {
    if (aborted_) return false;
    if (i < 0) {
      if (mask == 0) return false;
      return visit_level(mask, level);
    }
    if (enumerate(bits, i - 1, mask, cost, budget, level)) return true;
    const auto& cls = classes_[bits[i]];
    if (cost + cls.cost > budget) {
      close("budget");
      return false;
    }
    return enumerate(bits, i - 1, mask | (std::uint64_t{1} << bits[i]),
                     cost + cls.cost, budget, level);
  }

  bool visit_level(std::uint64_t mask, int level) {
    if (nsp_ && level == 1) {
      bool edge = false;
      for (int p = 1; p < k_; ++p) {
        // class index of (0,p) is p
        edge = edge || ((mask >> p) & 1U);
      }
      if (!edge) {
        close("R7");
        return false;
      }
    }
    push_level(mask);
    bool found = false;
    if (spent_ + future_lower_bound() > n_) {
      close("budget");
    } else {
      found = descend(level);
    }
    if (!found) pop_level();
    return found;
  }

  Dim n_;
  Dim r_;
  bool nsp_;
  bool ncs_;
  int max_level_;
  std::vector<int> level0_;
  std::uint64_t node_cap_;
  const std::atomic<std::size_t>* winner_;
  std::size_t case_index_;

  std::vector<int> dims_;
  int k_ = 0;
  std::vector<Class> classes_;
  std::vector<Dim> min_row_cost_;

  std::vector<std::uint32_t> rows_;
  std::vector<std::uint64_t> masks_;
  std::vector<Dim> costs_;
  Dim spent_ = 0;

  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  bool aborted_ = false;
  ClosureCounts closures_;
  std::string first_closure_;
  std::optional<BlockSystem> witness_;
};

/// Sets of diagonal level-0 dimensions d >= 2 whose blocks fit in N, in
/// increasing bitmask order over d.
void level0_cases(const std::vector<int>& candidates, int i, Dim spent, Dim n,
                  Dim r, std::vector<int>& chosen,
                  std::vector<std::vector<int>>& out) {
  if (i < 0) {
    std::vector<int> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  level0_cases(candidates, i - 1, spent, n, r, chosen, out);
  const Dim d = candidates[i];
  const Dim unit = std::lcm(d * d, r);
  if (spent + unit > n) return;
  chosen.push_back(static_cast<int>(d));
  level0_cases(candidates, i - 1, spent + unit, n, r, chosen, out);
  chosen.pop_back();
}

}  // namespace

Certificate solve(const FeasibilityProblem& problem, const SolverOptions& options) {
  const Dim n = problem.target_dim;
  const Dim r = problem.group_order;
  if (n < 1 || r < 1) {
    throw InvalidArgument("solve: dimension and group order must be positive");
  }
  const Regime regime = resolve_regime(n, r, problem.flags);

  Certificate cert;
  cert.target_dim = n;
  cert.group_order = r;
  cert.regime = regime.label;
  if (n % r != 0) {
    cert.verdict = Verdict::Infeasible;
    cert.reason = "R1 forces r | N";
    return cert;
  }
  if (n / r > options.level_cap) {
    throw SearchLimitError("N/r = " + std::to_string(n / r) +
                           " exceeds the level cap " +
                           std::to_string(options.level_cap));
  }
  const GridBounds bounds = problem.bounds.value_or(GridBounds::defaults(n, r));
  if (bounds.max_level < 0 || bounds.max_d < 1) {
    throw InvalidArgument("solve: bounds must have max_level >= 0 and max_d >= 1");
  }
  if (bounds.max_level > options.level_cap) {
    throw SearchLimitError("max_level " + std::to_string(bounds.max_level) +
                           " exceeds the level cap " +
                           std::to_string(options.level_cap));
  }

  std::vector<int> candidates;
  for (int d = 2; d <= bounds.max_d; ++d) candidates.push_back(d);
  std::vector<std::vector<int>> cases;
  std::vector<int> chosen;
  level0_cases(candidates, static_cast<int>(candidates.size()) - 1, r, n, r,
               chosen, cases);

  std::vector<CaseOutcome> outcomes(cases.size());
  std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
  detail::parallel_for(cases.size(), std::max(1U, options.jobs), [&](std::size_t i) {
    if (winner.load() < i) {
      outcomes[i].aborted = true;
      return;
    }
    try {
      CaseSearch search(n, r, regime, bounds.max_level, cases[i], options,
                        &winner, i);
      outcomes[i] = search.run();
    } catch (...) {
      outcomes[i].error = std::current_exception();
      return;
    }
    if (outcomes[i].feasible) {
      auto current = winner.load();
      while (i < current && !winner.compare_exchange_weak(current, i)) {
      }
    }
  });

  const std::size_t last = std::min(winner.load(), cases.size() - 1);
  cert.verdict = Verdict::Infeasible;
  for (std::size_t i = 0; i < cases.size() && i <= last; ++i) {
    auto& outcome = outcomes[i];
    if (outcome.error) std::rethrow_exception(outcome.error);
    if (outcome.aborted) {
      throw std::logic_error("solve: case before the winner was aborted");
    }
    ++cert.stats.cases;
    cert.stats.nodes += outcome.trace.nodes;
    cert.stats.leaves += outcome.leaves;
    for (const auto& [reason, count] : outcome.trace.closures) {
      cert.stats.closures[reason] += count;
    }
    if (outcome.feasible) {
      cert.verdict = Verdict::Feasible;
      cert.witness = std::move(outcome.witness);
      break;
    }
    if (cert.refutation.size() < options.trace_cap) {
      cert.refutation.push_back(std::move(outcome.trace));
    } else {
      ++cert.omitted_cases;
    }
  }
  if (cert.feasible()) {
    cert.refutation.clear();
    cert.omitted_cases = 0;
    ModeFlags flags;
    flags.non_cosemisimple = regime.ncs;
    flags.no_skew_primitives = regime.nsp;
    if (total_dim(*cert.witness) != n || !check(*cert.witness, flags).empty()) {
      throw std::logic_error("solve: witness fails the rule check");
    }
  }
  return cert;
}

std::vector<ScanRow> scan(Dim r, int t_max, const ModeFlags& flags,
                          const SolverOptions& options) {
  if (r < 1 || t_max < 1) throw InvalidArgument("scan: r and t_max must be positive");
  std::vector<ScanRow> rows(static_cast<std::size_t>(t_max));
  std::vector<std::exception_ptr> errors(rows.size());
  SolverOptions inner = options;
  inner.jobs = 1;
  detail::parallel_for(rows.size(), options.jobs, [&](std::size_t i) {
    const int t = static_cast<int>(i) + 1;
    rows[i].t = t;
    rows[i].target_dim = t * r;
    try {
      rows[i].certificate = solve({t * r, r, flags, std::nullopt}, inner);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<std::pair<Dim, Certificate>> survey_group_orders(
    Dim n, const ModeFlags& flags, const SolverOptions& options) {
  if (n < 1) throw InvalidArgument("group order survey: N must be positive");
  std::vector<std::pair<Dim, Certificate>> out;
  for (Dim r = 1; r < n; ++r) {
    if (n % r == 0) out.emplace_back(r, Certificate{});
  }
  std::vector<std::exception_ptr> errors(out.size());
  SolverOptions inner = options;
  inner.jobs = 1;
  detail::parallel_for(out.size(), options.jobs, [&](std::size_t i) {
    try {
      out[i].second = solve({n, out[i].first, flags, std::nullopt}, inner);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<Dim> admissible_group_orders(Dim n, const ModeFlags& flags,
                                         const SolverOptions& options) {
  std::vector<Dim> out;
  for (const auto& [r, cert] : survey_group_orders(n, flags, options)) {
    if (cert.feasible()) out.push_back(r);
  }
  return out;
}

}  // namespace blocksieve
