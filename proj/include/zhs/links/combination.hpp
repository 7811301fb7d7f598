#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zhs/algebra/rational.hpp"
#include "zhs/links/diagram.hpp"

namespace zhs::links {

/// Formal rational combination of link diagrams. Zero coefficients are never
/// stored. Terms are not merged (equal diagrams may appear twice); equality
/// compares the sorted (canonical key, coefficient) lists, so it ignores
/// insertion order.
class LinkCombination {
 public:
  using Term = std::pair<algebra::Rational, FramedLinkDiagram>;

  LinkCombination() = default;

  void add(const algebra::Rational& coefficient, const FramedLinkDiagram& link);
  const std::vector<Term>& terms() const& { return terms_; }
  /// By value on temporaries, so `for (auto& t : make().terms())` is safe.
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Same combination with equal-key terms summed.
  LinkCombination merged() const;
  algebra::Rational total_coefficient() const;

  LinkCombination& operator+=(const LinkCombination& other);
  LinkCombination& operator*=(const algebra::Rational& s);
  friend bool operator==(const LinkCombination& a, const LinkCombination& b);

  /// Applies f to every term and sums the weighted results.
  template <class F>
  auto evaluate(F&& f) const -> decltype(f(std::declval<const FramedLinkDiagram&>())) {
    using R = decltype(f(std::declval<const FramedLinkDiagram&>()));
    R total{};
    for (const auto& [c, link] : terms_) total += c * f(link);
    return total;
  }

 private:
  std::vector<Term> terms_;
  std::vector<std::string> keys_;
};

enum class SignRule {
  /// (-1)^{#L'}: the filtration operator on surgery links.
  ByKept,
  /// (-1)^{#L - #L'}: the sign pattern of the Phi sum.
  ByDropped,
};

/// All 2^mu sublinks with the chosen signs; the sublink for mask m keeps
/// component p iff bit p is set.
std::vector<std::pair<int, FramedLinkDiagram>> sublink_terms(const FramedLinkDiagram& link, SignRule rule);
LinkCombination sublink_sum(const FramedLinkDiagram& link, SignRule rule);

}  // namespace zhs::links
