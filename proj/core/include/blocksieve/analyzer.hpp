#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "blocksieve/block_system.hpp"
#include "blocksieve/coalgebra.hpp"
#include "blocksieve/linalg.hpp"
#include "blocksieve/rules.hpp"

namespace blocksieve {

/// C_0 <= C_1 <= ... <= C_t = C, each term a basis in echelon form.
struct FiltrationChain {
  std::vector<Echelon> terms;

  [[nodiscard]] std::vector<std::size_t> dims() const;
  [[nodiscard]] int length() const { return static_cast<int>(terms.size()) - 1; }
};

struct SimpleComponent {
  std::size_t index = 0;
  int d = 1;                 ///< the component is a d x d matrix coalgebra
  std::string label;         ///< basis label of the grouplike when it is one
  Vec central_idempotent;    ///< idempotent functional on C (dual basis)
  Echelon subcoalgebra;      ///< basis of the simple subcoalgebra, in C

  [[nodiscard]] bool grouplike() const { return d == 1; }
};

/// (level n >= 1, tau, mu) -> dimension of the (tau, mu) part of C_n / C_{n-1}.
using QTable = std::map<std::tuple<int, std::size_t, std::size_t>, Dim>;

struct AnalysisResult {
  std::size_t dim = 0;
  std::vector<SimpleComponent> components;
  FiltrationChain filtration;
  QTable q_table;
  BlockSystem block_system;
  std::vector<RuleViolation> rule_report;
  ModeFlags flags;

  [[nodiscard]] bool passes() const { return rule_report.empty(); }
  [[nodiscard]] std::string verdict_line() const;
};

/// C_n is the annihilator of J^{n+1}, J the radical of the dual algebra.
FiltrationChain coradical_filtration(const Coalgebra& c);

/// Simple subcoalgebras from the central idempotents of the dual of C_0,
/// lifted to idempotents of C*. Throws NonSplitError when the dual of the
/// coradical is not a product of matrix algebras over Q.
std::vector<SimpleComponent> simple_components(const Coalgebra& c,
                                               const FiltrationChain& chain);
std::vector<SimpleComponent> simple_components(const Coalgebra& c);

/// Rank of c -> e_tau . c . e_mu on each graded piece C_n / C_{n-1}, where the
/// left index acts through the first tensor factor of the coproduct.
QTable q_table(const Coalgebra& c, const FiltrationChain& chain,
               const std::vector<SimpleComponent>& components);

/// Checks the coproduct of every C_n against sum_i C_i (x) C_{n-i}.
bool filtration_respects_coproduct(const Coalgebra& c, const FiltrationChain& chain);

/// Block system: level 0 holds d^2 per component of size d, level n >= 1
/// sums the q-table over components by size. The group order is the number
/// of grouplike components.
BlockSystem aggregate(const std::vector<SimpleComponent>& components, const QTable& table);

/// Throws InvalidArgument when the coalgebra axioms fail.
AnalysisResult analyze(const Coalgebra& c, const ModeFlags& flags);

nlohmann::ordered_json analysis_to_json(const AnalysisResult& result);

}  // namespace blocksieve
