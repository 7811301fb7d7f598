#include "zhs/algebra/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace zhs::algebra {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) start = 1;
  if (start == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(s, text));
  }
  Integer num = parse_integer(trim(s.substr(0, slash)), text);
  Integer den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

Rational power(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return power(Rational(1) / base, -exp);
  }
  Rational out = 1;
  for (long k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace zhs::algebra
