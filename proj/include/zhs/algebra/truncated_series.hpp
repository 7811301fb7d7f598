#pragma once

#include <vector>

#include "zhs/algebra/half_laurent.hpp"
#include "zhs/algebra/rational.hpp"

namespace zhs::algebra {

/// Power series in x = e^h - 1 truncated after x^N. Always holds exactly
/// N+1 coefficients; products discard everything above order N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order = 0);
  TruncatedSeries(unsigned order, std::vector<Rational> coefficients);

  static TruncatedSeries constant(unsigned order, const Rational& c);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](unsigned k) const { return coeffs_.at(k); }
  Rational& operator[](unsigned k) { return coeffs_.at(k); }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// x -> c*x
  TruncatedSeries rescaled(const Rational& c) const;
  TruncatedSeries pow(unsigned k) const;

 private:
  void check_order(const TruncatedSeries& other) const;
  std::vector<Rational> coeffs_;
};

/// (1+x)^r truncated at order N: c_k = r(r-1)...(r-k+1)/k!.
TruncatedSeries binom_series(const Rational& r, unsigned order);

/// Image of p under q^m -> (1+x)^{m/2}, i.e. q = e^{h/2} = (1+x)^{1/2}.
TruncatedSeries expand_in_x(const HalfLaurent& p, unsigned order);

/// Expansion of [2]^{-k} = (1+x)^{k/2} 2^{-k} (1+x/2)^{-k}; needs no series
/// inversion.
TruncatedSeries inverse_quantum_two_power(unsigned k, unsigned order);

}  // namespace zhs::algebra
