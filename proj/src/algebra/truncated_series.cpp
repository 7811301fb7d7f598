#include "zhs/algebra/truncated_series.hpp"

#include <stdexcept>

namespace zhs::algebra {

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() > order + 1u) {
    coeffs_.resize(order + 1);
  }
  coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(unsigned order, const Rational& c) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

void TruncatedSeries::check_order(const TruncatedSeries& other) const {
  if (other.coeffs_.size() != coeffs_.size()) {
    throw std::invalid_argument("truncated series of different orders");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_order(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_order(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_order(b);
  const std::size_t n = a.coeffs_.size();
  TruncatedSeries out(static_cast<unsigned>(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::rescaled(const Rational& c) const {
  TruncatedSeries out = *this;
  Rational f = 1;
  for (auto& coeff : out.coeffs_) {
    coeff *= f;
    f *= c;
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
  TruncatedSeries out = constant(order(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

TruncatedSeries binom_series(const Rational& r, unsigned order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (unsigned k = 1; k <= order; ++k) c[k] = c[k - 1] * (r - (k - 1)) / k;
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries expand_in_x(const HalfLaurent& p, unsigned order) {
  TruncatedSeries out(order);
  for (const auto& [doubled, coeff] : p.terms()) {
    // q^{doubled/2} = (1+x)^{doubled/4}
    out += binom_series(frac(doubled, 4), order) * coeff;
  }
  return out;
}

TruncatedSeries inverse_quantum_two_power(unsigned k, unsigned order) {
  TruncatedSeries root = binom_series(frac(static_cast<long>(k), 2), order);
  TruncatedSeries geometric = binom_series(Rational(-static_cast<long>(k)), order).rescaled(Rational(1, 2));
  Rational scale = power(Rational(1, 2), static_cast<long>(k));
  return root * geometric * scale;
}

}  // namespace zhs::algebra
