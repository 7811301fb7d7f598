#include "zhs/algebra/half_laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace zhs::algebra {

HalfLaurent::HalfLaurent(const Rational& constant) { add_term(0, constant); }

HalfLaurent HalfLaurent::monomial(int doubled_exponent, const Rational& c) {
  HalfLaurent p;
  p.add_term(doubled_exponent, c);
  return p;
}

Rational HalfLaurent::coefficient(int doubled_exponent) const {
  auto it = terms_.find(doubled_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HalfLaurent::add_term(int key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

HalfLaurent HalfLaurent::pow(unsigned k) const {
  HalfLaurent out(1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c);
  return out;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int key = it->first;
    Rational c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    const bool unit = (c == 1);
    if (key == 0) {
      os << c.get_str();
      continue;
    }
    if (!unit) os << c.get_str() << " ";
    os << "q";
    if (key != 2) {
      if (key % 2 == 0) {
        os << "^" << (key > 0 ? std::to_string(key / 2) : "(" + std::to_string(key / 2) + ")");
      } else {
        os << "^(" << key << "/2)";
      }
    }
  }
  return os.str();
}

HalfLaurent laurent_add(const HalfLaurent& a, const HalfLaurent& b) { return a + b; }
HalfLaurent laurent_mul(const HalfLaurent& a, const HalfLaurent& b) { return a * b; }

HalfLaurent quantum_int(int n) {
  if (n < 0) throw std::invalid_argument("quantum_int expects n >= 0");
  HalfLaurent out;
  for (int k = 0; k < n; ++k) out += HalfLaurent::monomial(2 * (n - 1 - 2 * k));
  return out;
}

}  // namespace zhs::algebra
