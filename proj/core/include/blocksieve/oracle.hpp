#pragma once

#include <vector>

#include "blocksieve/block_system.hpp"
#include "blocksieve/certificate.hpp"

namespace blocksieve {

/// Size limits of the brute-force enumerator. Larger inputs are refused with
/// InvalidArgument rather than run for hours.
struct OracleLimits {
  Dim max_dim = 60;
  Dim max_group_order = 8;
};

/// Brute-force feasibility check. Walks every block map over the default grid
/// whose entries are positive multiples of their forced divisors and whose
/// total is N, and tests each with its own dense rule checker (no code is
/// shared with check()). Returns the first passing map found.
Certificate oracle_solve(Dim n, Dim r, const ModeFlags& flags,
                         const OracleLimits& limits = {});

/// Every passing block map, sorted.
std::vector<BlockSystem> oracle_enumerate(Dim n, Dim r, const ModeFlags& flags,
                                          const OracleLimits& limits = {});

}  // namespace blocksieve
