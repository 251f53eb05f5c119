#include "blocksieve/analyzer.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "blocksieve/algebra.hpp"
#include "blocksieve/block_json.hpp"
#include "blocksieve/errors.hpp"
#include "blocksieve/polynomial.hpp"

namespace blocksieve {

std::vector<std::size_t> FiltrationChain::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.rank());
  return out;
}

namespace {

Echelon full_space(std::size_t n) { return echelon(identity(n), n); }

/// {c in C : f(c) = 0 for all f in the span}
Echelon annihilator(const Echelon& functionals, std::size_t n) {
  if (functionals.rank() == 0) return full_space(n);
  return echelon(nullspace(functionals.rows, n), n);
}

/// Matrix of c -> sum f(c_1) c_2, columns indexed by the basis.
Mat left_hit(const Coalgebra& c, const Vec& f) {
  const std::size_t n = c.dim();
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (const Q& v = c.delta(i, j, k); v != 0) out[k][i] += v * f[j];
      }
    }
  }
  return out;
}

/// Matrix of c -> sum c_1 f(c_2).
Mat right_hit(const Coalgebra& c, const Vec& f) {
  const std::size_t n = c.dim();
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (f[k] == 0) continue;
        if (const Q& v = c.delta(i, j, k); v != 0) out[j][i] += v * f[k];
      }
    }
  }
  return out;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0 && m[i][j] != 0) out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

Vec scaled_sum(const Mat& rows, const Vec& coefficients) {
  Vec out(rows.empty() ? 0 : rows.front().size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    if (coefficients[s] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coefficients[s] * rows[s][j];
  }
  return out;
}

/// Orthogonal primitive idempotents of a split commutative semisimple
/// algebra given by a basis `z` inside `a`.
std::vector<Vec> split_center(const Algebra& a, const Echelon& z) {
  const std::size_t s = z.rank();
  if (s == 1) return {a.unit()};
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> coefficient(-4, 4);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec weights(s);
    for (auto& w : weights) w = coefficient(rng);
    const Vec x = scaled_sum(z.rows, weights);
    const Vec poly = minimal_polynomial(a, x);
    if (poly.size() - 1 < s) continue;
    const auto roots = rational_roots(poly);
    if (roots.size() < s) {
      throw NonSplitError("non-split coradical; extend scalars (the center of the dual "
                          "coradical has eigenvalues outside Q)");
    }
    std::vector<Vec> out;
    for (std::size_t i = 0; i < s; ++i) {
      Vec e = a.unit();
      for (std::size_t j = 0; j < s; ++j) {
        if (j == i) continue;
        Vec shifted = x;
        for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] -= roots[j] * a.unit()[k];
        e = a.multiply(e, shifted);
        const Q scale = 1 / (roots[i] - roots[j]);
        for (auto& v : e) v *= scale;
      }
      out.push_back(std::move(e));
    }
    return out;
  }
  throw std::logic_error("split_center: no separating central element found");
}

bool is_square(std::size_t n, int& root) {
  int r = 0;
  while (static_cast<std::size_t>(r + 1) * (r + 1) <= n) ++r;
  root = r;
  return static_cast<std::size_t>(r) * r == n;
}

}  // namespace

FiltrationChain coradical_filtration(const Coalgebra& c) {
  const std::size_t n = c.dim();
  const Algebra a = dual_algebra(c);
  const Echelon j = radical(a);
  FiltrationChain chain;
  Echelon power = j;
  while (true) {
    chain.terms.push_back(annihilator(power, n));
    if (chain.terms.back().rank() == n) break;
    if (chain.terms.size() > n) throw std::logic_error("coradical filtration does not terminate");
    power = product_span(a, power.rows, j.rows);
  }
  return chain;
}

std::vector<SimpleComponent> simple_components(const Coalgebra& c, const FiltrationChain& chain) {
  const std::size_t n = c.dim();
  const Echelon& c0 = chain.terms.front();
  const Coalgebra sub = restrict_to(c, c0);
  const Algebra a0 = dual_algebra(sub);
  const auto idempotents = split_center(a0, center(a0));
  const Algebra a = dual_algebra(c);

  std::vector<SimpleComponent> out;
  std::size_t covered = 0;
  for (const auto& e : idempotents) {
    // image of c -> e . c inside C_0, carried back to C coordinates
    const Mat hit = left_hit(sub, e);
    Mat image;
    for (std::size_t s = 0; s < sub.dim(); ++s) {
      Vec col(sub.dim());
      for (std::size_t t = 0; t < sub.dim(); ++t) col[t] = hit[t][s];
      image.push_back(scaled_sum(c0.rows, col));
    }
    SimpleComponent comp;
    comp.subcoalgebra = echelon(image, n);
    const std::size_t size = comp.subcoalgebra.rank();
    covered += size;
    if (!is_square(size, comp.d)) {
      throw NonSplitError("non-split coradical; extend scalars (simple component of dimension " +
                          std::to_string(size) + " is not a square)");
    }

    // any extension of e to C, then f <- 3f^2 - 2f^3 until idempotent
    auto f = solve_any(c0.rows, e, n);
    if (!f) throw std::logic_error("simple_components: cannot extend idempotent");
    for (int round = 0; round < 64; ++round) {
      const Vec f2 = a.multiply(*f, *f);
      if (f2 == *f) break;
      const Vec f3 = a.multiply(f2, *f);
      for (std::size_t k = 0; k < n; ++k) (*f)[k] = 3 * f2[k] - 2 * f3[k];
    }
    comp.central_idempotent = std::move(*f);
    out.push_back(std::move(comp));
  }
  if (covered != c0.rank()) {
    throw std::logic_error("simple_components: idempotents do not cover the coradical");
  }

  std::sort(out.begin(), out.end(), [](const SimpleComponent& x, const SimpleComponent& y) {
    if (x.d != y.d) return x.d < y.d;
    return y.subcoalgebra.rows < x.subcoalgebra.rows;
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& comp = out[i];
    comp.index = i;
    comp.label = (comp.grouplike() ? "g" : "D") + std::to_string(i);
    if (comp.grouplike()) {
      const Vec& g = comp.subcoalgebra.rows.front();
      Q count = 0;
      std::size_t where = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (g[k] != 0) {
          count += 1;
          where = k;
        }
      }
      Q eps = 0;
      for (std::size_t k = 0; k < n; ++k) eps += g[k] * c.counit()[k];
      if (count == 1 && eps != 0 && g[where] / eps == 1) comp.label = c.basis[where];
    }
  }
  return out;
}

std::vector<SimpleComponent> simple_components(const Coalgebra& c) {
  return simple_components(c, coradical_filtration(c));
}

QTable q_table(const Coalgebra& c, const FiltrationChain& chain,
               const std::vector<SimpleComponent>& components) {
  QTable out;
  std::vector<Mat> left;
  std::vector<Mat> right;
  for (const auto& comp : components) {
    left.push_back(left_hit(c, comp.central_idempotent));
    right.push_back(right_hit(c, comp.central_idempotent));
  }
  for (int level = 1; level <= chain.length(); ++level) {
    const Echelon& below = chain.terms[level - 1];
    const Echelon& here = chain.terms[level];
    Dim total = 0;
    for (std::size_t tau = 0; tau < components.size(); ++tau) {
      for (std::size_t mu = 0; mu < components.size(); ++mu) {
        Mat span = below.rows;
        for (const auto& v : here.rows) span.push_back(mat_vec(right[mu], mat_vec(left[tau], v)));
        const auto jump = static_cast<Dim>(rank(span, c.dim()) - below.rank());
        if (jump != 0) out[{level, tau, mu}] = jump;
        total += jump;
      }
    }
    if (total != static_cast<Dim>(here.rank() - below.rank())) {
      throw std::logic_error("q_table: isotypic parts do not add up to the filtration jump");
    }
  }
  return out;
}

bool filtration_respects_coproduct(const Coalgebra& c, const FiltrationChain& chain) {
  const std::size_t n = c.dim();
  for (int level = 0; level <= chain.length(); ++level) {
    Mat spanning;
    for (int i = 0; i <= level; ++i) {
      for (const auto& x : chain.terms[i].rows) {
        for (const auto& y : chain.terms[level - i].rows) {
          Vec v(n * n);
          for (std::size_t a = 0; a < n; ++a) {
            if (x[a] == 0) continue;
            for (std::size_t b = 0; b < n; ++b) v[a * n + b] = x[a] * y[b];
          }
          spanning.push_back(std::move(v));
        }
      }
    }
    const Echelon target = echelon(spanning, n * n);
    for (const auto& v : chain.terms[level].rows) {
      Vec image(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t jk = 0; jk < n * n; ++jk) {
          if (const Q& d = c.delta(i, jk / n, jk % n); d != 0) image[jk] += v[i] * d;
        }
      }
      if (!target.contains(image)) return false;
    }
  }
  return true;
}

BlockSystem aggregate(const std::vector<SimpleComponent>& components, const QTable& table) {
  BlockSystem::Map blocks;
  Dim grouplikes = 0;
  for (const auto& comp : components) {
    blocks[{0, comp.d, comp.d}] += Dim{comp.d} * comp.d;
    if (comp.grouplike()) ++grouplikes;
  }
  for (const auto& [key, value] : table) {
    const auto [level, tau, mu] = key;
    blocks[{level, components[tau].d, components[mu].d}] += value;
  }
  return BlockSystem(grouplikes, std::move(blocks));
}

AnalysisResult analyze(const Coalgebra& c, const ModeFlags& flags) {
  if (const auto failures = validate(c); !failures.empty()) {
    throw InvalidArgument("not a coalgebra: " + failures.front().axiom + " fails at " +
                          c.basis[failures.front().index] + " (" + failures.front().message + ")");
  }
  AnalysisResult out;
  out.dim = c.dim();
  out.flags = flags.normalized();
  out.filtration = coradical_filtration(c);
  out.components = simple_components(c, out.filtration);
  out.q_table = q_table(c, out.filtration, out.components);
  out.block_system = aggregate(out.components, out.q_table);
  if (total_dim(out.block_system) != static_cast<Dim>(c.dim())) {
    throw std::logic_error("analyze: block dimensions do not add up to dim C");
  }
  out.rule_report = check(out.block_system, out.flags);
  return out;
}

namespace {

std::string describe(const ModeFlags& flags) {
  if (flags.no_skew_primitives) return "non-cosemisimple, no nontrivial skew-primitives";
  if (flags.non_cosemisimple) return "non-cosemisimple";
  return "no mode flags";
}

}  // namespace

std::string AnalysisResult::verdict_line() const {
  if (passes()) return "passes all necessary conditions (no admissibility claim)";
  return "fails necessity — not admissible (under " + describe(flags) + ")";
}

nlohmann::ordered_json analysis_to_json(const AnalysisResult& result) {
  nlohmann::ordered_json out;
  out["dim"] = result.dim;
  out["filtration"] = result.filtration.dims();
  auto comps = nlohmann::ordered_json::array();
  for (const auto& comp : result.components) {
    nlohmann::ordered_json item;
    item["index"] = comp.index;
    item["label"] = comp.label;
    item["d"] = comp.d;
    item["grouplike"] = comp.grouplike();
    auto idem = nlohmann::ordered_json::array();
    for (const auto& v : comp.central_idempotent) idem.push_back(format_rational(v));
    item["central_idempotent"] = std::move(idem);
    comps.push_back(std::move(item));
  }
  out["components"] = std::move(comps);
  auto table = nlohmann::ordered_json::array();
  for (const auto& [key, value] : result.q_table) {
    const auto [level, tau, mu] = key;
    table.push_back({{"level", level},
                     {"tau", result.components[tau].label},
                     {"mu", result.components[mu].label},
                     {"d_tau", result.components[tau].d},
                     {"d_mu", result.components[mu].d},
                     {"dim", value}});
  }
  out["q_table"] = std::move(table);
  out["block_system"] = block_system_to_json(result.block_system);
  out["violations"] = report_to_json(result.rule_report);
  out["verdict"] = result.verdict_line();
  return out;
}

}  // namespace blocksieve
