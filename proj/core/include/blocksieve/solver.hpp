#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blocksieve/block_system.hpp"
#include "blocksieve/certificate.hpp"

namespace blocksieve {

/// Finite search grid. Defaults: max_level = N/r - 1 (each level holds at
/// least r), max_d = largest d with lcm(d^2, r) <= N - r.
struct GridBounds {
  int max_level = 0;
  int max_d = 1;

  static GridBounds defaults(Dim target_dim, Dim group_order);
  friend bool operator==(const GridBounds&, const GridBounds&) = default;
};

struct FeasibilityProblem {
  Dim target_dim = 0;
  Dim group_order = 1;
  ModeFlags flags;
  std::optional<GridBounds> bounds;
};

struct SolverOptions {
  /// Nodes allowed per top-level case before SearchLimitError.
  std::uint64_t node_cap = 50'000'000;
  /// Largest N/r (or explicit max_level) accepted before SearchLimitError.
  int level_cap = 512;
  /// Worker threads; results do not depend on it.
  unsigned jobs = 1;
  /// Top-level cases kept in a refutation trace.
  std::size_t trace_cap = 64;

  /// Defaults, with node_cap overridden by BLOCKSIEVE_NODE_CAP when set.
  static SolverOptions from_env();
};

/// Basic block L_{r,d1,d2}: the smallest unit a block (or a forced symmetric
/// pair of edge blocks) can grow by.
struct BasicBlock {
  Dim r = 1;
  int d1 = 1;
  int d2 = 1;
  Dim dim = 1;

  static BasicBlock make(Dim r, int d1, int d2);
};

/// r for d1 = d2 = 1; 2*d*r when exactly one of d1, d2 is 1 (the pair
/// B(n,d,1) + B(n,1,d) counted together); lcm(d1*d2, r) otherwise.
Dim basic_block_dim(Dim r, int d1, int d2);

struct LowerBound {
  Dim n_min = 0;
  std::vector<int> argmin;
};

/// min over d > 1 of (2d+2)r + 2 lcm(d^2, r), with every minimizing d.
LowerBound lower_bound(Dim r);

/// The six-block skeleton L(r,d): B(0,1,1) = B(m,1,1) = r at m = 2,
/// B(0,d,d) = B(2,d,d) = lcm(d^2,r), B(1,d,1) = B(1,1,d) = d r.
BlockSystem minimal_form(Dim r, int d);

/// Decides whether some block system of total dimension N with group order r
/// passes every rule active under the flags. Throws InvalidArgument for
/// nonpositive inputs and SearchLimitError when a cap is exceeded.
Certificate solve(const FeasibilityProblem& problem,
                  const SolverOptions& options = {});

struct ScanRow {
  int t = 0;
  Dim target_dim = 0;
  Certificate certificate;
};

/// solve(t r, r, flags) for t = 1..t_max, in order of t.
std::vector<ScanRow> scan(Dim r, int t_max, const ModeFlags& flags,
                          const SolverOptions& options = {});

/// Every r | N with r < N for which solve(N, r, flags) is feasible.
std::vector<Dim> admissible_group_orders(Dim n, const ModeFlags& flags,
                                         const SolverOptions& options = {});

/// Same, keeping the certificate of every divisor.
std::vector<std::pair<Dim, Certificate>> survey_group_orders(
    Dim n, const ModeFlags& flags, const SolverOptions& options = {});

}  // namespace blocksieve
