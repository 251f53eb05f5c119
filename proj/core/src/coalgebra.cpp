#include "blocksieve/coalgebra.hpp"


#include "blocksieve/errors.hpp"

namespace blocksieve {

Coalgebra::Coalgebra(std::size_t dim)
    : dim_(dim), delta_(dim * dim * dim), counit_(dim) {
  for (std::size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i));
}

std::vector<AxiomFailure> validate(const Coalgebra& c) {
  const std::size_t n = c.dim();
  std::vector<AxiomFailure> out;
  const auto& eps = c.counit();

  // Coassociativity is homogeneous of degree 2 in delta, so it is checked on
  // the structure constants scaled to integers.
  Z scale = 1;
  for (std::size_t i = 0; i < n * n * n; ++i) {
    const Q& v = c.delta(i / (n * n), (i / n) % n, i % n);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<Z> d(n * n * n);
  for (std::size_t i = 0; i < n * n * n; ++i) {
    const Q& v = c.delta(i / (n * n), (i / n) % n, i % n);
    d[i] = v.get_num() * (scale / v.get_den());
  }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Z& {
    return d[(i * n + j) * n + k];
  };
  std::vector<Z> diff(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& z : diff) z = 0;
    // (delta (x) id) delta and (id (x) delta) delta on e_i
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Z& outer = at(i, j, k);
        if (outer == 0) continue;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (const Z& left = at(j, a, b); left != 0) {
              mpz_addmul(diff[(a * n + b) * n + k].get_mpz_t(), outer.get_mpz_t(), left.get_mpz_t());
            }
            if (const Z& right = at(k, a, b); right != 0) {
              mpz_submul(diff[(j * n + a) * n + b].get_mpz_t(), outer.get_mpz_t(), right.get_mpz_t());
            }
          }
        }
      }
    }
    for (std::size_t x = 0; x < diff.size(); ++x) {
      if (diff[x] != 0) {
        const std::size_t a = x / (n * n), b = (x / n) % n, k = x % n;
        out.push_back({"coassociativity", i,
                       "(delta x id)delta and (id x delta)delta differ on " + c.basis[i] +
                           " at " + c.basis[a] + " x " + c.basis[b] + " x " + c.basis[k]});
        break;
      }
    }
  }

  for (const bool left : {true, false}) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec image(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Q& v = c.delta(i, j, k);
          if (v == 0) continue;
          if (left) image[k] += eps[j] * v;
          else image[j] += v * eps[k];
        }
      }
      image[i] -= 1;
      if (!is_zero(image)) {
        out.push_back({left ? "left counit" : "right counit", i,
                       std::string(left ? "(eps x id)" : "(id x eps)") + "delta(" + c.basis[i] +
                           ") != " + c.basis[i]});
        break;
      }
    }
  }
  return out;
}

namespace {

Q read_coefficient(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Q(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": coefficient must be an integer or a \"p/q\" string");
}

std::size_t read_index(const nlohmann::json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0 ||
      static_cast<std::size_t>(v.get<long long>()) >= dim) {
    throw ParseError(where + ": index out of range 0.." + std::to_string(dim - 1));
  }
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

Coalgebra coalgebra_from_json(const nlohmann::json& value) {
  if (!value.is_object()) throw ParseError("coalgebra: expected a JSON object");
  for (const auto& [key, _] : value.items()) {
    if (key != "dim" && key != "basis" && key != "delta" && key != "counit" && key != "field") {
      throw ParseError("coalgebra: unknown field \"" + key + "\"");
    }
  }
  if (!value.contains("dim") || !value["dim"].is_number_integer() || value["dim"].get<long long>() < 1) {
    throw ParseError("coalgebra: \"dim\" must be a positive integer");
  }
  if (value.contains("field") && value["field"] != "Q") {
    throw ParseError("coalgebra: only \"field\": \"Q\" is supported");
  }
  const auto n = static_cast<std::size_t>(value["dim"].get<long long>());
  Coalgebra c(n);
  if (value.contains("basis")) {
    const auto& labels = value["basis"];
    if (!labels.is_array() || labels.size() != n) {
      throw ParseError("coalgebra: \"basis\" must list " + std::to_string(n) + " labels");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!labels[i].is_string()) throw ParseError("coalgebra: basis[" + std::to_string(i) + "] is not a string");
      c.basis[i] = labels[i].get<std::string>();
    }
  }
  if (!value.contains("delta") || !value["delta"].is_array()) {
    throw ParseError("coalgebra: \"delta\" must be an array");
  }
  std::size_t pos = 0;
  for (const auto& term : value["delta"]) {
    const std::string where = "delta[" + std::to_string(pos++) + "]";
    if (!term.is_array() || term.size() != 4) throw ParseError(where + ": expected [i, j, k, coefficient]");
    const auto i = read_index(term[0], n, where);
    const auto j = read_index(term[1], n, where);
    const auto k = read_index(term[2], n, where);
    c.delta(i, j, k) += read_coefficient(term[3], where);
  }
  if (!value.contains("counit") || !value["counit"].is_array() || value["counit"].size() != n) {
    throw ParseError("coalgebra: \"counit\" must list " + std::to_string(n) + " values");
  }
  for (std::size_t i = 0; i < n; ++i) {
    c.counit()[i] = read_coefficient(value["counit"][i], "counit[" + std::to_string(i) + "]");
  }
  return c;
}

Coalgebra parse_coalgebra(std::string_view text) {
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("coalgebra: invalid JSON: ") + e.what());
  }
  return coalgebra_from_json(value);
}

nlohmann::ordered_json coalgebra_to_json(const Coalgebra& c) {
  nlohmann::ordered_json out;
  out["dim"] = c.dim();
  out["basis"] = c.basis;
  auto delta = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < c.dim(); ++j) {
      for (std::size_t k = 0; k < c.dim(); ++k) {
        if (const Q& v = c.delta(i, j, k); v != 0) delta.push_back({i, j, k, format_rational(v)});
      }
    }
  }
  out["delta"] = std::move(delta);
  auto counit = nlohmann::ordered_json::array();
  for (const auto& v : c.counit()) counit.push_back(format_rational(v));
  out["counit"] = std::move(counit);
  out["field"] = "Q";
  return out;
}

Coalgebra change_basis(const Coalgebra& c, const Mat& p) {
  const std::size_t n = c.dim();
  if (p.size() != n) throw InvalidArgument("change_basis: matrix size does not match");
  const auto q = inverse(p);
  if (!q) throw InvalidArgument("change_basis: matrix is singular");

  // t[i][k][l] = sum_j p[j][i] delta(j,k,l)
  Vec t(n * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p[j][i] == 0) continue;
      for (std::size_t kl = 0; kl < n * n; ++kl) {
        if (const Q& v = c.delta(j, kl / n, kl % n); v != 0) t[i * n * n + kl] += p[j][i] * v;
      }
    }
  }
  // u[i][a][l] = sum_k q[a][k] t[i][k][l]
  Vec u(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        const Q& v = t[(i * n + k) * n + l];
        if (v == 0) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if ((*q)[a][k] != 0) u[(i * n + a) * n + l] += (*q)[a][k] * v;
        }
      }
    }
  }
  Coalgebra out(n);
  out.basis.clear();
  for (std::size_t i = 0; i < n; ++i) out.basis.push_back("e'" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t l = 0; l < n; ++l) {
        const Q& v = u[(i * n + a) * n + l];
        if (v == 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if ((*q)[b][l] != 0) out.delta(i, a, b) += (*q)[b][l] * v;
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) out.counit()[i] += p[j][i] * c.counit()[j];
  }
  return out;
}

Coalgebra tensor_product(const Coalgebra& c, const Coalgebra& d) {
  const std::size_t m = c.dim();
  const std::size_t n = d.dim();
  Coalgebra out(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t src = i * n + j;
      out.basis[src] = c.basis[i] + "(x)" + d.basis[j];
      out.counit()[src] = c.counit()[i] * d.counit()[j];
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          const Q& left = c.delta(i, a, b);
          if (left == 0) continue;
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
              const Q& right = d.delta(j, x, y);
              if (right != 0) out.delta(src, a * n + x, b * n + y) += left * right;
            }
          }
        }
      }
    }
  }
  return out;
}

Coalgebra restrict_to(const Coalgebra& c, const Echelon& basis) {
  const std::size_t n = c.dim();
  const std::size_t m = basis.rank();
  Coalgebra out(m);
  for (std::size_t s = 0; s < m; ++s) {
    const Vec& row = basis.rows[s];
    // full coproduct of the basis vector, as an n x n coefficient array
    std::vector<Vec> image(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (const Q& v = c.delta(i, j, k); v != 0) image[j][k] += row[i] * v;
        }
      }
      out.counit()[s] += row[i] * c.counit()[i];
    }
    // read coordinates at pivot positions, then confirm by reconstruction
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        out.delta(s, a, b) = image[basis.pivots[a]][basis.pivots[b]];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Q rebuilt = 0;
        for (std::size_t a = 0; a < m; ++a) {
          if (basis.rows[a][j] == 0) continue;
          for (std::size_t b = 0; b < m; ++b) {
            rebuilt += out.delta(s, a, b) * basis.rows[a][j] * basis.rows[b][k];
          }
        }
        if (rebuilt != image[j][k]) {
          throw InvalidArgument("restrict_to: span is not a subcoalgebra");
        }
      }
    }
  }
  return out;
}

}  // namespace blocksieve
