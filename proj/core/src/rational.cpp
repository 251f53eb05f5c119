#include "blocksieve/rational.hpp"

#include <cctype>

#include "blocksieve/errors.hpp"

namespace blocksieve {
namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Q parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Q out;
  out.get_num() = Z(std::string(num.front() == '+' ? num.substr(1) : num));
  out.get_den() = Z(std::string(den));
  if (out.get_den() == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  out.canonicalize();
  return out;
}

std::string format_rational(const Q& value) {
  return value.get_den() == 1 ? value.get_num().get_str() : value.get_str();
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Z common_denominator(const Vec& v) {
  Z out = 1;
  for (const auto& x : v) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), x.get_den().get_mpz_t());
  return out;
}

}  // namespace blocksieve
