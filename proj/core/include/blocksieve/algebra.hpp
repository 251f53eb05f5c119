#pragma once

#include <cstddef>
#include <vector>

#include "blocksieve/coalgebra.hpp"
#include "blocksieve/linalg.hpp"

namespace blocksieve {

/// Finite-dimensional associative algebra over Q with basis f_0..f_{dim-1}:
/// f_a f_b = sum_i mult(a, b, i) f_i.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::size_t dim, Vec constants, Vec unit);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const Q& mult(std::size_t a, std::size_t b, std::size_t i) const {
    return constants_[(a * dim_ + b) * dim_ + i];
  }
  [[nodiscard]] const Vec& unit() const noexcept { return unit_; }

  [[nodiscard]] Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x y, with column j the image of f_j.
  [[nodiscard]] Mat left_matrix(const Vec& x) const;
  [[nodiscard]] bool is_associative() const;

 private:
  std::size_t dim_ = 0;
  Vec constants_;
  Vec unit_;
};

/// The dual algebra C*: (f h)(c) = (f (x) h)(delta c), unit = counit, on the
/// dual basis of the coalgebra basis.
Algebra dual_algebra(const Coalgebra& c);

/// Jacobson radical as the kernel of the trace form (x, y) -> tr(L_{xy}),
/// which is exact in characteristic 0. Returned in echelon form.
Echelon radical(const Algebra& a);

/// Span of all products x y with x in `left` and y in `right`, in echelon form.
Echelon product_span(const Algebra& a, const Mat& left, const Mat& right);

/// Center {z : z f_b = f_b z for all b}, in echelon form.
Echelon center(const Algebra& a);

/// Minimal polynomial of x: the monic p of least degree with p(x) = 0.
Vec minimal_polynomial(const Algebra& a, const Vec& x);

}  // namespace blocksieve
