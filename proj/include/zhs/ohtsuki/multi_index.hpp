#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace zhs::ohtsuki {

/// Tuple of non-negative integers indexed by link component.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  /// (x, x, ..., x) of length mu
  static MultiIndex constant(std::size_t mu, int x);

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t p) const { return v_.at(p); }
  const std::vector<int>& entries() const { return v_; }

  /// |k| = k_1 + ... + k_mu
  int norm() const;
  /// #k = mu
  std::size_t count() const { return v_.size(); }
  bool is_zero() const { return norm() == 0; }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// Componentwise product kj.
  friend MultiIndex operator*(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator*(int x, const MultiIndex& k);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;

 private:
  std::vector<int> v_;
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every k with lo <= k <= hi componentwise, in lexicographic order.
std::vector<MultiIndex> box(const MultiIndex& lo, const MultiIndex& hi);

}  // namespace zhs::ohtsuki
