#pragma once

#include <map>
#include <string>

#include "zhs/algebra/rational.hpp"

namespace zhs::algebra {

/// Laurent polynomial in q = e^{h/2} whose exponents live on the half-integer
/// grid. Exponents are stored doubled: the key 2m holds the coefficient of q^m,
/// so q^{1/2} has key 1. Zero coefficients are never stored.
class HalfLaurent {
 public:
  using Terms = std::map<int, Rational>;

  HalfLaurent() = default;
  explicit HalfLaurent(const Rational& constant);

  /// c * q^{doubled/2}
  static HalfLaurent monomial(int doubled_exponent, const Rational& c = 1);
  static HalfLaurent q() { return monomial(2); }
  static HalfLaurent q_inv() { return monomial(-2); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int doubled_exponent) const;

  HalfLaurent& operator+=(const HalfLaurent& other);
  HalfLaurent& operator-=(const HalfLaurent& other);
  HalfLaurent& operator*=(const Rational& s);

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(HalfLaurent a, const Rational& s) { return a *= s; }
  friend HalfLaurent operator*(const Rational& s, HalfLaurent a) { return a *= s; }
  HalfLaurent operator-() const;
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

  HalfLaurent pow(unsigned k) const;
  /// q -> q^{-1}
  HalfLaurent bar() const;

  /// Human-readable form, e.g. "q^2 - 1 + 3/2 q^(-1/2)".
  std::string to_string() const;

 private:
  void add_term(int key, const Rational& c);
  Terms terms_;
};

HalfLaurent laurent_add(const HalfLaurent& a, const HalfLaurent& b);
HalfLaurent laurent_mul(const HalfLaurent& a, const HalfLaurent& b);

/// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0.
HalfLaurent quantum_int(int n);

}  // namespace zhs::algebra
