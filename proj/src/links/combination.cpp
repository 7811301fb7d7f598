#include "zhs/links/combination.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace zhs::links {

using algebra::Rational;

void LinkCombination::add(const Rational& coefficient, const FramedLinkDiagram& link) {
  if (coefficient == 0) return;
  terms_.emplace_back(coefficient, link);
  keys_.push_back(canonical_key(link));
}

LinkCombination LinkCombination::merged() const {
  std::vector<std::size_t> order(terms_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return keys_[x] < keys_[y]; });
  LinkCombination out;
  for (std::size_t i = 0; i < order.size();) {
    Rational c = 0;
    std::size_t k = i;
    for (; k < order.size() && keys_[order[k]] == keys_[order[i]]; ++k) c += terms_[order[k]].first;
    out.add(c, terms_[order[i]].second);
    i = k;
  }
  return out;
}

Rational LinkCombination::total_coefficient() const {
  Rational t = 0;
  for (const auto& term : terms_) t += term.first;
  return t;
}

LinkCombination& LinkCombination::operator+=(const LinkCombination& other) {
  for (const auto& [c, l] : other.terms_) add(c, l);
  return *this;
}

LinkCombination& LinkCombination::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    keys_.clear();
    return *this;
  }
  for (auto& t : terms_) t.first *= s;
  return *this;
}

bool operator==(const LinkCombination& a, const LinkCombination& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto sorted = [](const LinkCombination& c) {
    std::vector<std::pair<std::string, Rational>> v;
    for (std::size_t i = 0; i < c.terms_.size(); ++i) v.emplace_back(c.keys_[i], c.terms_[i].first);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first < y.first : x.second < y.second;
    });
    return v;
  };
  return sorted(a) == sorted(b);
}

std::vector<std::pair<int, FramedLinkDiagram>> sublink_terms(const FramedLinkDiagram& link, SignRule rule) {
  const std::size_t mu = link.size();
  if (mu >= 63) throw std::invalid_argument("too many components for sublink enumeration");
  std::vector<std::pair<int, FramedLinkDiagram>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mu); ++mask) {
    const int kept = std::popcount(mask);
    const int exponent = rule == SignRule::ByKept ? kept : static_cast<int>(mu) - kept;
    out.emplace_back(algebra::sign_power(exponent), sublink_mask(link, mask));
  }
  return out;
}

LinkCombination sublink_sum(const FramedLinkDiagram& link, SignRule rule) {
  LinkCombination out;
  for (const auto& [s, l] : sublink_terms(link, rule)) out.add(s, l);
  return out;
}

}  // namespace zhs::links
