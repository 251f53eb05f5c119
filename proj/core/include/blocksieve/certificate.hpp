#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blocksieve/block_system.hpp"

namespace blocksieve {

enum class Verdict { Feasible, Infeasible };

std::string_view to_string(Verdict v);

/// Counts of search branches closed, keyed by closing reason: a rule id
/// ("R4", "R5", "R7", "R8", "RNC"), "budget" (minimal dimension exceeds N),
/// "residual" (N is not reachable by the divisibility units of the support)
/// or "depth" (level bound reached with open obligations).
using ClosureCounts = std::map<std::string, std::uint64_t>;

/// One top-level case of the search: the choice of diagonal level-0 blocks.
struct CaseTrace {
  std::string label;
  std::uint64_t nodes = 0;
  std::string closed_by;  ///< first closing reason met in the case
  ClosureCounts closures;
  bool feasible = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t cases = 0;
  ClosureCounts closures;
};

struct Certificate {
  Verdict verdict = Verdict::Infeasible;
  Dim target_dim = 0;
  Dim group_order = 0;
  std::string regime;
  std::optional<BlockSystem> witness;
  SearchStats stats;
  std::string reason;                ///< short reason for an immediate verdict
  std::vector<CaseTrace> refutation; ///< bounded top-level trace
  std::uint64_t omitted_cases = 0;   ///< cases beyond the trace bound

  [[nodiscard]] bool feasible() const { return verdict == Verdict::Feasible; }

  /// "R5x12, budget x3" style digest of the dominant closing reasons.
  [[nodiscard]] std::string closing_summary() const;
};

nlohmann::ordered_json certificate_to_json(const Certificate& c);

}  // namespace blocksieve
