#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blocksieve/rational.hpp"

namespace blocksieve {

/// Dense row-major matrix over Q. Every row has `cols` entries.
using Mat = std::vector<Vec>;

/// Reduced row echelon form of the row space: nonzero rows only, each with a
/// leading 1 in column pivots[i] and zeros above and below it.
struct Echelon {
  Mat rows;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const { return rows.size(); }
  /// Coordinates of v (assumed in the row space) in terms of `rows`.
  [[nodiscard]] Vec coordinates(const Vec& v) const;
  [[nodiscard]] bool contains(const Vec& v) const;
};

/// Fraction-free (Bareiss) elimination on integer-scaled rows, then
/// back-substitution over Q. Pivots are taken at the lowest row index.
Echelon echelon(const Mat& m, std::size_t cols);

std::size_t rank(const Mat& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
Mat nullspace(const Mat& m, std::size_t cols);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve_any(const Mat& a, const Vec& b, std::size_t cols);

std::optional<Mat> inverse(const Mat& m);

Mat transpose(const Mat& m, std::size_t cols);
Mat multiply(const Mat& a, const Mat& b, std::size_t b_cols);
Mat identity(std::size_t n);

}  // namespace blocksieve
