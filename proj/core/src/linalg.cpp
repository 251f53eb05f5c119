#include "blocksieve/linalg.hpp"

#include <utility>

#include "blocksieve/errors.hpp"

namespace blocksieve {
namespace {

using ZRow = std::vector<Z>;

ZRow scaled(const Vec& row) {
  const Z den = common_denominator(row);
  ZRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (den / row[j].get_den());
  }
  return out;
}

}  // namespace

Echelon echelon(const Mat& m, std::size_t cols) {
  std::vector<ZRow> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != cols) throw InvalidArgument("echelon: ragged matrix");
    a.push_back(scaled(row));
  }

  // Bareiss: after each step the entries below the pivot row are minors of
  // the input, so the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  Z prev = 1;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < a.size(); ++c) {
    std::size_t p = top;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[top], a[p]);
    const Z pivot = a[top][c];
    for (std::size_t i = top + 1; i < a.size(); ++i) {
      const Z factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        Z v = pivot * a[i][j] - factor * a[top][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      // Columns left of c are already zero in rows below top.
    }
    prev = pivot;
    pivots.push_back(c);
    ++top;
  }

  Echelon out;
  out.pivots = pivots;
  out.rows.resize(top);
  for (std::size_t i = 0; i < top; ++i) {
    out.rows[i].resize(cols);
    const Z& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      out.rows[i][j] = Q(a[i][j], lead);
      out.rows[i][j].canonicalize();
    }
  }
  for (std::size_t i = top; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      const Q factor = out.rows[k][pivots[i]];
      if (factor == 0) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) out.rows[k][j] -= factor * out.rows[i][j];
    }
  }
  return out;
}

Vec Echelon::coordinates(const Vec& v) const {
  Vec out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = v[pivots[i]];
  return out;
}

bool Echelon::contains(const Vec& v) const {
  Vec rest = v;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Q factor = rest[pivots[i]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= factor * rows[i][j];
  }
  return is_zero(rest);
}

std::size_t rank(const Mat& m, std::size_t cols) { return echelon(m, cols).rank(); }

Mat nullspace(const Mat& m, std::size_t cols) {
  const Echelon e = echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Mat out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols);
    x[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vec> solve_any(const Mat& a, const Vec& b, std::size_t cols) {
  if (a.size() != b.size()) throw InvalidArgument("solve_any: size mismatch");
  Mat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Echelon e = echelon(aug, cols + 1);
  Vec x(cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return Mat{};
  Mat aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw InvalidArgument("inverse: matrix is not square");
    aug[i].resize(2 * n);
    aug[i][n + i] = 1;
  }
  const Echelon e = echelon(aug, 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = e.rows[i][n + j];
  }
  return out;
}

Mat transpose(const Mat& m, std::size_t cols) {
  Mat out(cols, Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
  }
  return out;
}

Mat multiply(const Mat& a, const Mat& b, std::size_t b_cols) {
  Mat out(a.size(), Vec(b_cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Mat identity(std::size_t n) {
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace blocksieve
