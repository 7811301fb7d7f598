#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zhs::jones {

/// Laurent polynomial in the bracket variable A with int64 coefficients.
/// Arithmetic throws std::overflow_error instead of wrapping.
class IntLaurent {
 public:
  IntLaurent() = default;
  static IntLaurent monomial(int exponent, std::int64_t c = 1);
  /// -A^2 - A^-2
  static IntLaurent delta();

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return lo_; }
  int max_exponent() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const;

  IntLaurent& operator+=(const IntLaurent& other);
  IntLaurent& operator-=(const IntLaurent& other);
  friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
  friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  IntLaurent operator*(std::int64_t s) const;
  friend bool operator==(const IntLaurent&, const IntLaurent&) = default;

  /// Multiplies by A^k.
  IntLaurent shifted(int k) const;
  IntLaurent times_delta() const;
  /// Exact quotient by delta; throws std::domain_error if delta does not divide.
  IntLaurent divided_by_delta() const;

  std::string to_string() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<std::int64_t> coeffs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace zhs::jones
