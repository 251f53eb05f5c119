#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blocksieve/linalg.hpp"
#include "blocksieve/rational.hpp"

namespace blocksieve {

/// A finite-dimensional coalgebra over Q on the basis e_0..e_{dim-1}.
///
/// delta(i, j, k) is the coefficient of e_j (x) e_k in the coproduct of e_i.
/// Structure constants are stored densely; dimensions here are small.
class Coalgebra {
 public:
  Coalgebra() = default;
  explicit Coalgebra(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  [[nodiscard]] const Q& delta(std::size_t i, std::size_t j, std::size_t k) const {
    return delta_[(i * dim_ + j) * dim_ + k];
  }
  Q& delta(std::size_t i, std::size_t j, std::size_t k) {
    return delta_[(i * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] const Vec& counit() const noexcept { return counit_; }
  Vec& counit() noexcept { return counit_; }

  std::vector<std::string> basis;

 private:
  std::size_t dim_ = 0;
  Vec delta_;
  Vec counit_;
};

struct AxiomFailure {
  std::string axiom;  ///< "coassociativity", "left counit" or "right counit"
  std::size_t index;  ///< first basis element where it fails
  std::string message;
};

/// Exact check of coassociativity and both counit laws; empty when all hold.
std::vector<AxiomFailure> validate(const Coalgebra& c);

/// Reads `{"dim": n, "basis": [...], "delta": [[i,j,k,"p/q"], ...],
/// "counit": [...], "field": "Q"}`. Coefficients may be JSON integers or
/// "p/q" strings; repeated (i,j,k) triples are summed. Throws ParseError.
Coalgebra parse_coalgebra(std::string_view text);
Coalgebra coalgebra_from_json(const nlohmann::json& value);
nlohmann::ordered_json coalgebra_to_json(const Coalgebra& c);

/// The same coalgebra on the basis e'_i = sum_j p[j][i] e_j (columns of p).
/// Throws InvalidArgument when p is singular.
Coalgebra change_basis(const Coalgebra& c, const Mat& p);

/// C (x) D with basis e_i (x) f_j at position i * dim(D) + j.
Coalgebra tensor_product(const Coalgebra& c, const Coalgebra& d);

/// The subcoalgebra spanned by the rows of `basis` (in echelon form), in the
/// coordinates given by its pivots. Throws InvalidArgument when the span is
/// not closed under the coproduct.
Coalgebra restrict_to(const Coalgebra& c, const Echelon& basis);

}  // namespace blocksieve
