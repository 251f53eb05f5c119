#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "blocksieve/block_system.hpp"

namespace blocksieve {

using ordered_json = nlohmann::ordered_json;

/// Parses `{"group_order": r, "blocks": [{"level": n, "d1": a, "d2": b,
/// "dim": v}, ...]}`. Field order is free; unknown fields, duplicate indices,
/// zero or negative dimensions and off-diagonal level-0 entries raise
/// ParseError naming the offending entry.
BlockSystem parse_block_system(std::string_view text);
BlockSystem block_system_from_json(const nlohmann::json& value);

/// Canonical form: entries sorted by (level, d1, d2), compact, no newline.
std::string serialize_block_system(const BlockSystem& s);
ordered_json block_system_to_json(const BlockSystem& s);

}  // namespace blocksieve
