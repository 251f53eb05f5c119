#include "blocksieve/block_system.hpp"

#include <algorithm>

#include "blocksieve/errors.hpp"

namespace blocksieve {

std::string to_string(const BlockIndex& index) {
  return "B(" + std::to_string(index.level) + "," + std::to_string(index.d1) +
         "," + std::to_string(index.d2) + ")";
}

namespace {

void validate_entry(const BlockIndex& index, Dim dim) {
  if (index.level < 0) {
    throw InvalidArgument(to_string(index) + ": level must be nonnegative");
  }
  if (index.d1 < 1 || index.d2 < 1) {
    throw InvalidArgument(to_string(index) +
                          ": comodule dimensions must be positive");
  }
  if (index.level == 0 && index.d1 != index.d2) {
    throw InvalidArgument(to_string(index) +
                          ": level-0 block must be diagonal");
  }
  if (dim == 0) {
    throw InvalidArgument(to_string(index) + ": zero blocks must be omitted");
  }
  if (dim < 0) {
    throw InvalidArgument(to_string(index) + ": negative dimension " +
                          std::to_string(dim));
  }
}

}  // namespace

BlockSystem::BlockSystem(Dim group_order, Map blocks)
    : group_order_(group_order), blocks_(std::move(blocks)) {
  if (group_order_ < 0) {
    throw InvalidArgument("group order must be nonnegative");
  }
  for (const auto& [index, dim] : blocks_) validate_entry(index, dim);
}

Dim BlockSystem::at(const BlockIndex& index) const {
  auto it = blocks_.find(index);
  return it == blocks_.end() ? 0 : it->second;
}

Dim BlockSystem::effective(const BlockIndex& index) const {
  if (index == BlockIndex{0, 1, 1} && !contains(index)) return group_order_;
  return at(index);
}

int BlockSystem::max_level() const {
  int top = 0;
  for (const auto& [index, dim] : blocks_) top = std::max(top, index.level);
  return top;
}

BlockSystem BlockSystem::with(const BlockIndex& index, Dim dim) const {
  BlockSystem out = *this;
  if (dim == 0) {
    out.blocks_.erase(index);
  } else {
    validate_entry(index, dim);
    out.blocks_[index] = dim;
  }
  return out;
}

Dim total_dim(const BlockSystem& s) {
  Dim total = 0;
  for (const auto& [index, dim] : s.blocks()) total += dim;
  if (!s.contains({0, 1, 1})) total += s.group_order();
  return total;
}

PointedLevels pointed_levels(const BlockSystem& s) {
  PointedLevels out;
  for (const auto& [index, dim] : s.blocks()) {
    if (index.d1 != 1 || index.d2 != 1) continue;
    out.m = std::max(out.m, index.level);
    if (index.level >= 1 && (!out.l || index.level < *out.l)) {
      out.l = index.level;
    }
  }
  return out;
}

BlockSystem transpose(const BlockSystem& s) {
  BlockSystem::Map swapped;
  for (const auto& [index, dim] : s.blocks()) {
    swapped.emplace(BlockIndex{index.level, index.d2, index.d1}, dim);
  }
  return BlockSystem(s.group_order(), std::move(swapped));
}

BlockSystem merge(const BlockSystem& a, const BlockSystem& b) {
  if (a.group_order() != b.group_order()) {
    throw InvalidArgument("merge: group orders differ");
  }
  BlockSystem::Map out = a.blocks();
  for (const auto& [index, dim] : b.blocks()) out[index] += dim;
  return BlockSystem(a.group_order(), std::move(out));
}

}  // namespace blocksieve
