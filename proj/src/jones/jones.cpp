#include "zhs/jones/jones.hpp"

#include <mutex>
#include <stdexcept>

#include "zhs/links/combination.hpp"
#include "zhs/links/fixtures.hpp"

namespace zhs::jones {

using algebra::quantum_int;
using algebra::TruncatedSeries;

HalfLaurent to_q(const IntLaurent& in_A, Substitution sub) {
  HalfLaurent out;
  if (in_A.is_zero()) return out;
  for (int e = in_A.min_exponent(); e <= in_A.max_exponent(); ++e) {
    const std::int64_t c = in_A.coefficient(e);
    if (c == 0) continue;
    if (e % 2 != 0) throw std::domain_error("odd power of A in a Jones polynomial");
    const int k = e / 2;  // A^e = (A^2)^k
    const int q_power = sub == Substitution::MinusQ ? k : -k;
    out += HalfLaurent::monomial(2 * q_power, Rational(algebra::sign_power(k) * c));
  }
  return out;
}

bool skein_holds(const HalfLaurent& v_plus, const HalfLaurent& v_minus, const HalfLaurent& v_zero) {
  const HalfLaurent lhs = HalfLaurent::monomial(4) * v_plus - HalfLaurent::monomial(-4) * v_minus;
  const HalfLaurent rhs = (HalfLaurent::q() - HalfLaurent::q_inv()) * v_zero;
  return lhs == rhs;
}

Substitution detect_substitution() {
  const auto plus = links::fixtures::trefoil_right();
  const auto minus = links::crossing_change(plus, 0);
  const auto zero = links::oriented_smoothing(plus, 0);
  std::optional<Substitution> found;
  for (Substitution s : {Substitution::MinusQ, Substitution::MinusQInverse}) {
    if (skein_holds(to_q(jones_in_A(plus), s), to_q(jones_in_A(minus), s), to_q(jones_in_A(zero), s))) {
      if (found) throw std::logic_error("skein relation holds under both substitutions");
      found = s;
    }
  }
  if (!found) throw std::logic_error("skein relation holds under neither substitution");
  return *found;
}

std::optional<HalfLaurent> divide_by_quantum_two(const HalfLaurent& p) {
  if (p.terms().empty()) return HalfLaurent{};
  // [2] = q + q^-1; long division from the top. The quotient's lowest term
  // sits one q-power above p's.
  const int lowest = p.terms().begin()->first + 2;
  HalfLaurent rem = p;
  HalfLaurent quot;
  while (!rem.terms().empty()) {
    const auto& [key, c] = *rem.terms().rbegin();
    if (key - 2 < lowest) return std::nullopt;
    const HalfLaurent step = HalfLaurent::monomial(key - 2, c);
    quot += step;
    rem -= step * quantum_int(2);
  }
  return quot;
}

QuantumRatio QuantumRatio::reduced() const {
  QuantumRatio r = *this;
  if (r.numerator.terms().empty()) {
    r.power = 0;
    return r;
  }
  while (r.power > 0) {
    auto q = divide_by_quantum_two(r.numerator);
    if (!q) break;
    r.numerator = *q;
    --r.power;
  }
  return r;
}

std::optional<HalfLaurent> QuantumRatio::as_laurent() const {
  const QuantumRatio r = reduced();
  if (r.power != 0) return std::nullopt;
  return r.numerator;
}

TruncatedSeries QuantumRatio::expand(unsigned order) const {
  TruncatedSeries s = algebra::expand_in_x(numerator, order);
  if (power == 0) return s;
  return s * algebra::inverse_quantum_two_power(power, order);
}

bool operator==(const QuantumRatio& a, const QuantumRatio& b) {
  // a.n [2]^{b.p} == b.n [2]^{a.p}
  return a.numerator * quantum_int(2).pow(b.power) == b.numerator * quantum_int(2).pow(a.power);
}

std::optional<HalfLaurent> SkeinCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

HalfLaurent SkeinCache::insert(const std::string& key, const HalfLaurent& value) {
  std::unique_lock lock(mutex_);
  return table_.try_emplace(key, value).first->second;
}

std::size_t SkeinCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void SkeinCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits_ = 0;
  misses_ = 0;
}

HalfLaurent jones_V(const links::FramedLinkDiagram& link, SkeinCache* cache, BracketKernel kernel) {
  if (link.empty()) throw std::invalid_argument("V of the empty link is [2]^-1, not a Laurent polynomial");
  if (!cache) return to_q(jones_in_A(link, kernel));
  links::FramedLinkDiagram unframed = link;
  unframed.framings.assign(link.size(), 0);
  const std::string key = links::canonical_key(unframed);
  if (auto hit = cache->find(key)) return *hit;
  return cache->insert(key, to_q(jones_in_A(link, kernel)));
}

QuantumRatio X(const links::FramedLinkDiagram& link, SkeinCache* cache) {
  if (link.empty()) return {HalfLaurent(1), 0};
  return QuantumRatio{jones_V(link, cache), static_cast<unsigned>(link.size() - 1)}.reduced();
}

QuantumRatio Phi(const links::FramedLinkDiagram& link, SkeinCache* cache) {
  const std::size_t mu = link.size();
  if (mu == 0) return {HalfLaurent(1), 0};
  // Common denominator [2]^{mu-1}; X(L') = V(L') [2]^{mu-mu'} / [2]^{mu-1}.
  const HalfLaurent two = quantum_int(2);
  HalfLaurent num;
  for (const auto& [sign, sub] : links::sublink_terms(link, links::SignRule::ByDropped)) {
    const std::size_t kept = sub.size();
    const HalfLaurent value = kept == 0 ? two.pow(static_cast<unsigned>(mu - 1)) : jones_V(sub, cache) * two.pow(static_cast<unsigned>(mu - kept));
    if (sign > 0) num += value;
    else num -= value;
  }
  return QuantumRatio{num, static_cast<unsigned>(mu - 1)}.reduced();
}

std::vector<Rational> Phi_coefficients(const links::FramedLinkDiagram& link, unsigned order, SkeinCache* cache) {
  const TruncatedSeries s = Phi(link, cache).expand(order);
  std::vector<Rational> out;
  for (unsigned n = 0; n <= order; ++n) out.push_back(s[n] * Rational(algebra::factorial(n)));
  return out;
}

Rational Phi_n(const links::FramedLinkDiagram& link, unsigned n, SkeinCache* cache) {
  return Phi_coefficients(link, n, cache)[n];
}

Rational phi_i(const links::FramedLinkDiagram& link, unsigned i, SkeinCache* cache) {
  const unsigned mu = static_cast<unsigned>(link.size());
  return algebra::power(Rational(-2), mu) / Rational(algebra::factorial(mu + i)) * Phi_n(link, mu + i, cache);
}

}  // namespace zhs::jones
