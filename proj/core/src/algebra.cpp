#include "blocksieve/algebra.hpp"

#include "blocksieve/errors.hpp"

namespace blocksieve {

Algebra::Algebra(std::size_t dim, Vec constants, Vec unit)
    : dim_(dim), constants_(std::move(constants)), unit_(std::move(unit)) {
  if (constants_.size() != dim * dim * dim || unit_.size() != dim) {
    throw InvalidArgument("Algebra: structure constant sizes do not match");
  }
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b] == 0) continue;
      const Q xy = x[a] * y[b];
      for (std::size_t i = 0; i < dim_; ++i) {
        if (const Q& m = mult(a, b, i); m != 0) out[i] += xy * m;
      }
    }
  }
  return out;
}

Mat Algebra::left_matrix(const Vec& x) const {
  Mat out(dim_, Vec(dim_));
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec basis(dim_);
    basis[j] = 1;
    const Vec image = multiply(x, basis);
    for (std::size_t i = 0; i < dim_; ++i) out[i][j] = image[i];
  }
  return out;
}

bool Algebra::is_associative() const {
  for (std::size_t a = 0; a < dim_; ++a) {
    Vec fa(dim_);
    fa[a] = 1;
    for (std::size_t b = 0; b < dim_; ++b) {
      Vec fb(dim_);
      fb[b] = 1;
      const Vec ab = multiply(fa, fb);
      for (std::size_t c = 0; c < dim_; ++c) {
        Vec fc(dim_);
        fc[c] = 1;
        if (multiply(ab, fc) != multiply(fa, multiply(fb, fc))) return false;
      }
    }
  }
  return true;
}

Algebra dual_algebra(const Coalgebra& c) {
  const std::size_t n = c.dim();
  Vec constants(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) constants[(j * n + k) * n + i] = c.delta(i, j, k);
    }
  }
  return Algebra(n, std::move(constants), c.counit());
}

Echelon radical(const Algebra& a) {
  const std::size_t n = a.dim();
  // tr(L_{f_i}) = sum_k coefficient of f_k in f_i f_k
  Vec trace(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) trace[i] += a.mult(i, k, k);
  }
  Mat form(n, Vec(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < n; ++i) {
        if (trace[i] != 0) form[x][y] += a.mult(x, y, i) * trace[i];
      }
    }
  }
  return echelon(nullspace(form, n), n);
}

Echelon product_span(const Algebra& a, const Mat& left, const Mat& right) {
  Mat products;
  for (const auto& x : left) {
    for (const auto& y : right) products.push_back(a.multiply(x, y));
  }
  return echelon(products, a.dim());
}

Echelon center(const Algebra& a) {
  const std::size_t n = a.dim();
  // (z f_b - f_b z)_i = sum_a z_a (mult(a,b,i) - mult(b,a,i)) = 0
  Mat equations;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec row(n);
      for (std::size_t x = 0; x < n; ++x) row[x] = a.mult(x, b, i) - a.mult(b, x, i);
      if (!is_zero(row)) equations.push_back(std::move(row));
    }
  }
  return echelon(nullspace(equations, n), n);
}

Vec minimal_polynomial(const Algebra& a, const Vec& x) {
  const std::size_t n = a.dim();
  Mat powers{a.unit()};
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const Vec next = a.multiply(powers.back(), x);
    // solve sum_j c_j x^j = x^k
    const Mat columns = transpose(powers, n);
    if (auto c = solve_any(columns, next, powers.size())) {
      Vec poly(k + 1);
      for (std::size_t j = 0; j < k; ++j) poly[j] = -(*c)[j];
      poly[k] = 1;
      return poly;
    }
    powers.push_back(next);
  }
  throw std::logic_error("minimal_polynomial: powers never became dependent");
}

}  // namespace blocksieve
