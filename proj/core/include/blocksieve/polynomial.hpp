#pragma once

#include <vector>

#include "blocksieve/rational.hpp"

namespace blocksieve {

/// Coefficients by ascending degree; the zero polynomial is empty.
using Poly = Vec;

Poly trimmed(Poly p);
int degree(const Poly& p);
Q evaluate(const Poly& p, const Q& x);
Poly derivative(const Poly& p);
/// Remainder of a divided by b (b nonzero).
Poly remainder(const Poly& a, const Poly& b);

/// Distinct rational roots in increasing order. The polynomial is made
/// monic over Z by y = a_n x, and integer roots are isolated by bisection
/// on Sturm counts.
std::vector<Q> rational_roots(const Poly& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
std::size_t sturm_count(const std::vector<Poly>& chain, const Q& lo, const Q& hi);
std::vector<Poly> sturm_chain(const Poly& p);

}  // namespace blocksieve
