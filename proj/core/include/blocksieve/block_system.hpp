#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace blocksieve {

using Dim = std::int64_t;

/// Position of a block B(level, d1, d2): filtration level and the dimensions
/// of the left and right simple comodules.
struct BlockIndex {
  int level = 0;
  int d1 = 1;
  int d2 = 1;

  friend auto operator<=>(const BlockIndex&, const BlockIndex&) = default;
};

/// Renders as "B(level,d1,d2)".
std::string to_string(const BlockIndex& index);

/// Which families of necessary conditions are switched on.
///
/// `no_skew_primitives` implies `non_cosemisimple`; use `normalized()` before
/// reading the flags. `auto_nsp` is resolved by the solver once the pair
/// (N, r) is known.
struct ModeFlags {
  bool non_cosemisimple = false;
  bool no_skew_primitives = false;
  bool auto_nsp = false;

  [[nodiscard]] ModeFlags normalized() const {
    ModeFlags out = *this;
    if (out.no_skew_primitives) out.non_cosemisimple = true;
    return out;
  }

  static ModeFlags nsp() { return {true, true, false}; }
  static ModeFlags skew_allowed() { return {true, false, false}; }

  friend bool operator==(const ModeFlags&, const ModeFlags&) = default;
};

/// Dimensions of the blocks of a coalgebra, keyed by (level, d1, d2).
///
/// Zero blocks are absent. The group order r is kept apart from the (0,1,1)
/// entry so that an inconsistent pair is reported by the rule engine instead
/// of being normalized away. An absent (0,1,1) entry reads as r.
///
/// A group order of 0 is accepted for coalgebras without grouplike elements
/// (such a coalgebra cannot carry a Hopf structure; rule R0 reports it).
class BlockSystem {
 public:
  using Map = std::map<BlockIndex, Dim>;

  BlockSystem() = default;

  /// Throws InvalidArgument when an index or dimension breaks the invariants:
  /// negative level, d < 1, nonpositive dimension, off-diagonal level 0.
  explicit BlockSystem(Dim group_order, Map blocks = {});

  [[nodiscard]] Dim group_order() const noexcept { return group_order_; }
  [[nodiscard]] const Map& blocks() const noexcept { return blocks_; }

  /// Stored dimension, 0 when absent.
  [[nodiscard]] Dim at(const BlockIndex& index) const;
  /// Like at(), except that an absent (0,1,1) reads as the group order.
  [[nodiscard]] Dim effective(const BlockIndex& index) const;
  [[nodiscard]] bool contains(const BlockIndex& index) const {
    return blocks_.contains(index);
  }
  [[nodiscard]] bool empty() const noexcept { return blocks_.empty(); }

  /// Highest level carrying an entry, 0 for an empty map.
  [[nodiscard]] int max_level() const;

  /// Copy with one entry replaced; a dimension of 0 removes the entry.
  [[nodiscard]] BlockSystem with(const BlockIndex& index, Dim dim) const;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;

 private:
  Dim group_order_ = 1;
  Map blocks_;
};

/// Sum of all block dimensions (an absent (0,1,1) counts as the group order).
Dim total_dim(const BlockSystem& s);

struct PointedLevels {
  std::optional<int> l;  ///< lowest level >= 1 with a (n,1,1) entry
  int m = 0;             ///< highest level with a (n,1,1) entry
};

PointedLevels pointed_levels(const BlockSystem& s);

/// Moves every entry (n,d1,d2) to (n,d2,d1), mirroring the antipode.
BlockSystem transpose(const BlockSystem& s);

/// Disjoint union of block maps (entries present in both are added).
BlockSystem merge(const BlockSystem& a, const BlockSystem& b);

}  // namespace blocksieve
