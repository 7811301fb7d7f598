#pragma once

#include <atomic>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "zhs/algebra/half_laurent.hpp"
#include "zhs/algebra/rational.hpp"
#include "zhs/algebra/truncated_series.hpp"
#include "zhs/jones/bracket.hpp"
#include "zhs/links/diagram.hpp"

namespace zhs::jones {

using algebra::HalfLaurent;
using algebra::Rational;

/// The two ways of reading the bracket variable in q = e^{h/2}.
enum class Substitution {
  /// A^2 = -q
  MinusQ,
  /// A^2 = -1/q
  MinusQInverse,
};

/// The substitution under which V satisfies
/// q^2 V(L+) - q^-2 V(L-) = (q - q^-1) V(L0).
inline constexpr Substitution kSubstitution = Substitution::MinusQ;

HalfLaurent to_q(const IntLaurent& in_A, Substitution sub = kSubstitution);

/// Checks the skein relation on the trefoil triple under both substitutions
/// and returns the one for which it holds.
Substitution detect_substitution();

/// Does q^2 V(L+) - q^-2 V(L-) = (q - q^-1) V(L0) hold for the given values?
bool skein_holds(const HalfLaurent& v_plus, const HalfLaurent& v_minus, const HalfLaurent& v_zero);

/// numerator / [2]^power
struct QuantumRatio {
  HalfLaurent numerator;
  unsigned power = 0;

  /// Cancels factors of [2] while the division is exact.
  QuantumRatio reduced() const;
  /// The value as a Laurent polynomial, if it is one.
  std::optional<HalfLaurent> as_laurent() const;
  algebra::TruncatedSeries expand(unsigned order) const;

  friend bool operator==(const QuantumRatio& a, const QuantumRatio& b);
};

/// Exact quotient p / [2] if it exists.
std::optional<HalfLaurent> divide_by_quantum_two(const HalfLaurent& p);

/// Jones values keyed by canonical diagram key. Safe to share between
/// threads; concurrent misses on one key may compute it twice but store the
/// first result.
class SkeinCache {
 public:
  std::optional<HalfLaurent> find(const std::string& key) const;
  HalfLaurent insert(const std::string& key, const HalfLaurent& value);
  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, HalfLaurent> table_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

/// Jones polynomial of a non-empty link in q; ignores framings.
/// Throws std::invalid_argument for the empty link, whose value [2]^-1 is
/// not a Laurent polynomial.
HalfLaurent jones_V(const links::FramedLinkDiagram& link, SkeinCache* cache = nullptr,
                    BracketKernel kernel = BracketKernel::Frontier);

/// [2]^{1-#L} V(L); equal to 1 for the empty link.
QuantumRatio X(const links::FramedLinkDiagram& link, SkeinCache* cache = nullptr);
/// Alternating sum of X over all sublinks, empty sublink included.
QuantumRatio Phi(const links::FramedLinkDiagram& link, SkeinCache* cache = nullptr);
/// n! times the x^n coefficient of Phi in x = e^h - 1.
Rational Phi_n(const links::FramedLinkDiagram& link, unsigned n, SkeinCache* cache = nullptr);
/// All of Phi_0 .. Phi_order from one expansion.
std::vector<Rational> Phi_coefficients(const links::FramedLinkDiagram& link, unsigned order,
                                       SkeinCache* cache = nullptr);
/// (-2)^{#L} / (#L+i)! * Phi_{#L+i}(L)
Rational phi_i(const links::FramedLinkDiagram& link, unsigned i, SkeinCache* cache = nullptr);

}  // namespace zhs::jones
