#include "blocksieve/block_json.hpp"

#include <limits>
#include <set>

#include "blocksieve/errors.hpp"

namespace blocksieve {

namespace {

std::int64_t read_integer(const nlohmann::json& object, const char* key,
                          const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(where + ": missing field \"" + std::string(key) + "\"");
  }
  if (!it->is_number_integer()) {
    throw ParseError(where + ": field \"" + std::string(key) +
                     "\" must be an integer");
  }
  return it->get<std::int64_t>();
}

void reject_unknown(const nlohmann::json& object,
                    std::initializer_list<std::string_view> known,
                    const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw ParseError(where + ": unknown field \"" + key + "\"");
  }
}

int narrow_index(std::int64_t value, const char* key, const std::string& where) {
  if (value < std::numeric_limits<int>::min() ||
      value > std::numeric_limits<int>::max()) {
    throw ParseError(where + ": field \"" + std::string(key) + "\" out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

BlockSystem block_system_from_json(const nlohmann::json& value) {
  if (!value.is_object()) throw ParseError("block system must be a JSON object");
  reject_unknown(value, {"group_order", "blocks"}, "block system");
  const auto r = read_integer(value, "group_order", "block system");
  if (r < 1) throw ParseError("block system: group_order must be positive");

  auto blocks_it = value.find("blocks");
  if (blocks_it == value.end() || !blocks_it->is_array()) {
    throw ParseError("block system: \"blocks\" must be an array");
  }

  BlockSystem::Map blocks;
  std::size_t position = 0;
  for (const auto& entry : *blocks_it) {
    std::string where = "blocks[" + std::to_string(position++) + "]";
    if (!entry.is_object()) throw ParseError(where + ": must be an object");
    reject_unknown(entry, {"level", "d1", "d2", "dim"}, where);
    BlockIndex index{narrow_index(read_integer(entry, "level", where), "level", where),
                     narrow_index(read_integer(entry, "d1", where), "d1", where),
                     narrow_index(read_integer(entry, "d2", where), "d2", where)};
    const auto dim = read_integer(entry, "dim", where);
    where += " " + to_string(index);
    if (index.level < 0) throw ParseError(where + ": level must be nonnegative");
    if (index.d1 < 1 || index.d2 < 1) {
      throw ParseError(where + ": d1 and d2 must be positive");
    }
    if (index.level == 0 && index.d1 != index.d2) {
      throw ParseError(where + ": level-0 block must be diagonal");
    }
    if (dim == 0) throw ParseError(where + ": zero blocks must be omitted");
    if (dim < 0) throw ParseError(where + ": negative dimension");
    if (!blocks.emplace(index, dim).second) {
      throw ParseError(where + ": duplicate index");
    }
  }
  return BlockSystem(r, std::move(blocks));
}

BlockSystem parse_block_system(std::string_view text) {
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return block_system_from_json(value);
}

ordered_json block_system_to_json(const BlockSystem& s) {
  ordered_json out;
  out["group_order"] = s.group_order();
  out["blocks"] = ordered_json::array();
  for (const auto& [index, dim] : s.blocks()) {
    ordered_json entry;
    entry["level"] = index.level;
    entry["d1"] = index.d1;
    entry["d2"] = index.d2;
    entry["dim"] = dim;
    out["blocks"].push_back(std::move(entry));
  }
  return out;
}

std::string serialize_block_system(const BlockSystem& s) {
  return block_system_to_json(s).dump();
}

}  // namespace blocksieve
