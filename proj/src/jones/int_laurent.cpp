#include "zhs/jones/int_laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zhs::jones {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("bracket coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("bracket coefficient overflow");
  return r;
}

IntLaurent IntLaurent::monomial(int exponent, std::int64_t c) {
  IntLaurent p;
  if (c != 0) {
    p.lo_ = exponent;
    p.coeffs_ = {c};
  }
  return p;
}

IntLaurent IntLaurent::delta() { return monomial(2, -1) + monomial(-2, -1); }

std::int64_t IntLaurent::coefficient(int exponent) const {
  const int i = exponent - lo_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

void IntLaurent::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                      coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
  lo_ += static_cast<int>(first);
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(lo_, other.lo_);
  const int hi = std::max(max_exponent(), other.max_exponent());
  if (lo != lo_ || hi != max_exponent()) {
    std::vector<std::int64_t> grown(static_cast<std::size_t>(hi - lo + 1), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (lo_ - lo));
    coeffs_ = std::move(grown);
    lo_ = lo;
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& c = coeffs_[i + static_cast<std::size_t>(other.lo_ - lo_)];
    c = checked_add(c, other.coeffs_[i]);
  }
  trim();
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& other) { return *this += other * -1; }

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntLaurent out;
  out.lo_ = a.lo_ + b.lo_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

IntLaurent IntLaurent::operator*(std::int64_t s) const {
  IntLaurent out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, s);
  out.trim();
  return out;
}

IntLaurent IntLaurent::shifted(int k) const {
  IntLaurent out = *this;
  if (!out.is_zero()) out.lo_ += k;
  return out;
}

IntLaurent IntLaurent::times_delta() const { return (shifted(2) + shifted(-2)) * -1; }

IntLaurent IntLaurent::divided_by_delta() const {
  if (is_zero()) return {};
  // delta = -A^-2 (1 + A^4); divide by (1 + A^4) from the bottom up.
  const std::size_t n = coeffs_.size();
  if (n < 5) throw std::domain_error("polynomial not divisible by delta");
  std::vector<std::int64_t> rem = coeffs_;
  std::vector<std::int64_t> quot(n - 4, 0);
  for (std::size_t i = 0; i + 4 < n; ++i) {
    quot[i] = rem[i];
    rem[i] = 0;
    rem[i + 4] = checked_add(rem[i + 4], -quot[i]);
  }
  for (std::int64_t r : rem)
    if (r != 0) throw std::domain_error("polynomial not divisible by delta");
  IntLaurent q;
  q.lo_ = lo_;
  q.coeffs_ = std::move(quot);
  q.trim();
  return q.shifted(2) * -1;
}

std::string IntLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = max_exponent(); e >= lo_; --e) {
    const std::int64_t c = coefficient(e);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t m = c < 0 ? -c : c;
    if (e == 0) {
      os << m;
      continue;
    }
    if (m != 1) os << m << " ";
    os << "A";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace zhs::jones
