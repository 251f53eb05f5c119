#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace blocksieve {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<Q>;

/// Accepts "p", "-p" and "p/q" (q != 0); no decimals, no spaces. The result
/// is canonical. Throws ParseError otherwise.
Q parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Q& value);

bool is_zero(const Vec& v);

/// Smallest positive integer that clears every denominator of v.
Z common_denominator(const Vec& v);

}  // namespace blocksieve
