#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blocksieve/block_system.hpp"

namespace blocksieve {

/// Necessary conditions on the block system of a finite-dimensional Hopf
/// algebra. R10 has no counterpart and is intentionally skipped.
enum class RuleId {
  R0,   ///< level-0 structure
  R1,   ///< group divisibility
  R2,   ///< edge divisibility
  R3,   ///< antipode symmetry
  R4,   ///< chain condition
  R5,   ///< off-diagonal escalation
  R6,   ///< top pointed block
  R7,   ///< necessary blocks (no skew-primitives)
  R8,   ///< forcing from lower pointed blocks (no skew-primitives)
  R9,   ///< level contiguity
  R11,  ///< support at level zero
  R12,  ///< bicomodule divisibility
  RNC,  ///< non-cosemisimplicity
};

enum class Applicability { Always, NonCosemisimple, NoSkewPrimitives };

struct Rule {
  RuleId id;
  std::string_view name;
  std::string_view anchor;
  Applicability applicability;
};

std::span<const Rule> all_rules();
const Rule& rule_info(RuleId id);
std::string_view to_string(RuleId id);
std::optional<RuleId> parse_rule_id(std::string_view text);
bool is_active(RuleId id, const ModeFlags& flags);

struct RuleViolation {
  RuleId rule;
  std::vector<BlockIndex> indices;
  std::string message;
  std::optional<std::string> missing_witness;

  friend bool operator==(const RuleViolation&, const RuleViolation&) = default;
};

/// Evaluates every rule activated by `flags`; an empty result means the
/// system passes all of them. Absent entries count as dimension 0, except an
/// absent (0,1,1), which counts as the group order.
std::vector<RuleViolation> check(const BlockSystem& s, const ModeFlags& flags);

/// One line: "<id> <name>: <message> [<indices>; <anchor>]".
std::string explain(const RuleViolation& v);

nlohmann::ordered_json report_to_json(std::span<const RuleViolation> report);

}  // namespace blocksieve
