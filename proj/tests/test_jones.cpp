#include <doctest.h>

#include "zhs/jones/jones.hpp"
#include "zhs/links/catalog.hpp"
#include "zhs/links/combination.hpp"
#include "zhs/links/fixtures.hpp"

using namespace zhs::jones;
using namespace zhs::links;
namespace fx = zhs::links::fixtures;
using zhs::algebra::frac;
using zhs::algebra::quantum_int;

namespace {

// Classical Jones polynomial in t, keyed by doubled t-exponent, mapped to q
// through t^{1/2} = -q^{-1}.
HalfLaurent from_t(const std::map<int, long>& doubled_t) {
  HalfLaurent out;
  for (const auto& [k, c] : doubled_t) {
    // t^{k/2} = (-1)^k q^{-k}
    out += HalfLaurent::monomial(-2 * k, Rational(zhs::algebra::sign_power(k) * c));
  }
  return out;
}

HalfLaurent two() { return quantum_int(2); }

}  // namespace

TEST_CASE("substitution detected from the skein relation") {
  CHECK(detect_substitution() == kSubstitution);
}

TEST_CASE("jones_V examples") {
  CHECK(jones_V(fx::unknot()) == HalfLaurent(1));
  CHECK(jones_V(fx::unlink(2)) == two());
  CHECK(jones_V(fx::unlink(3)) == two() * two());
  // right-handed trefoil: t + t^3 - t^4
  CHECK(jones_V(fx::trefoil_right()) == from_t({{2, 1}, {6, 1}, {8, -1}}));
  CHECK(jones_V(fx::trefoil_left()) == from_t({{-2, 1}, {-6, 1}, {-8, -1}}));
  CHECK(jones_V(fx::trefoil_left()) == jones_V(fx::trefoil_right()).bar());
  // figure-eight: t^2 - t + 1 - t^-1 + t^-2
  CHECK(jones_V(fx::figure_eight()) == from_t({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}));
  // Borromean rings: -t^3 + 3t^2 - 2t + 4 - 2t^-1 + 3t^-2 - t^-3
  const auto b = from_t({{6, -1}, {4, 3}, {2, -2}, {0, 4}, {-2, -2}, {-4, 3}, {-6, -1}});
  CHECK(jones_V(fx::borromean()) == b);
  CHECK(jones_V(fx::borromean_mirror()) == b);
  CHECK_THROWS_AS(jones_V(FramedLinkDiagram{}), std::invalid_argument);
}

TEST_CASE("hopf link Jones value") {
  // Two positive clasps: -t^{1/2} - t^{5/2}
  CHECK(jones_V(fx::hopf()) == from_t({{1, -1}, {5, -1}}));
}

TEST_CASE("bracket kernels agree") {
  const auto cat = Catalog::builtin();
  for (const auto& name : cat.names()) {
    const auto& l = cat.at(name);
    if (l.empty() || l.crossing_count() > 16) continue;
    INFO(name);
    const auto f = bracket_frontier(l);
    CHECK(bracket_serial(l) == f);
    CHECK(bracket_parallel(l) == f);
  }
}

TEST_CASE("diagram independence") {
  const auto cat = Catalog::builtin();
  CHECK(jones_V(cat.at("trefoil-4crossing")) == jones_V(cat.at("trefoil")));
  CHECK(jones_V(cat.at("kinked-unknot+")) == HalfLaurent(1));
  CHECK(jones_V(cat.at("kinked-unknot-")) == HalfLaurent(1));
  CHECK(jones_V(cat.at("borromean-braid")) == jones_V(cat.at("borromean")));
}

TEST_CASE("skein relation at every crossing of the catalog") {
  const auto cat = Catalog::builtin();
  for (const auto& name : cat.names()) {
    const auto& l = cat.at(name);
    if (l.crossing_count() > 10) continue;
    for (std::size_t k = 0; k < l.crossing_count(); ++k) {
      INFO(name << " crossing " << k);
      const auto other = crossing_change(l, k);
      const auto zero = oriented_smoothing(l, k);
      const bool positive = l.crossings[k].sign > 0;
      const auto& plus = positive ? l : other;
      const auto& minus = positive ? other : l;
      CHECK(skein_holds(jones_V(plus), jones_V(minus), jones_V(zero)));
    }
  }
}

TEST_CASE("split unions multiply") {
  const auto cat = Catalog::builtin();
  const std::vector<std::string> names{"unknot", "trefoil", "figure-eight", "hopf", "borromean"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      const auto u = disjoint_union(cat.at(a), cat.at(b));
      CHECK(jones_V(u) == two() * jones_V(cat.at(a)) * jones_V(cat.at(b)));
      CHECK(X(u) == QuantumRatio{(X(cat.at(a)).numerator * X(cat.at(b)).numerator),
                                 X(cat.at(a)).power + X(cat.at(b)).power});
    }
  }
}

TEST_CASE("X examples") {
  CHECK(X(FramedLinkDiagram{}) == QuantumRatio{HalfLaurent(1), 0});
  CHECK(X(fx::unknot()).as_laurent() == HalfLaurent(1));
  CHECK(X(fx::unlink(2)).as_laurent() == HalfLaurent(1));
  // the Hopf link's X is not a Laurent polynomial
  CHECK_FALSE(X(fx::hopf()).as_laurent().has_value());
  const auto x = X(fx::hopf());
  CHECK(x.numerator * quantum_int(2) == jones_V(fx::hopf()) * quantum_int(2).pow(x.power));
}

TEST_CASE("Phi examples") {
  CHECK(Phi(FramedLinkDiagram{}).as_laurent() == HalfLaurent(1));
  CHECK(Phi(fx::unknot()).as_laurent() == HalfLaurent{});
  CHECK(Phi(fx::unlink(2)).as_laurent() == HalfLaurent{});
  for (const char* name : {"trefoil", "figure-eight", "borromean", "hopf"}) {
    const auto l = Catalog::builtin().at(name);
    CHECK(Phi(disjoint_union(l, fx::unknot())).as_laurent() == HalfLaurent{});
  }
}

TEST_CASE("Phi_n and phi_i examples") {
  for (unsigned n = 0; n < 6; ++n) CHECK(Phi_n(fx::unknot(), n) == 0);
  CHECK(Phi_n(FramedLinkDiagram{}, 0) == 1);
  CHECK(Phi_n(FramedLinkDiagram{}, 3) == 0);
  const auto b = fx::borromean();
  const auto coeffs = Phi_coefficients(b, 5);
  for (unsigned n = 0; n < 4; ++n) CHECK(coeffs[n] == 0);
  CHECK(coeffs[4] != 0);
  CHECK(phi_i(fx::unknot(), 1) == 0);
  CHECK(phi_i(b, 1) != 0);
  CHECK(phi_i(disjoint_union(b, fx::unknot()), 1) == 0);
  // oracle: for a knot Phi = V - 1, so Phi_2 = V''(1) in x; trefoil gives -6
  CHECK(Phi_n(fx::trefoil_right(), 2) == -6);
  CHECK(Phi_n(fx::trefoil_left(), 2) == -6);
  CHECK(Phi_n(fx::figure_eight(), 2) == 6);
  CHECK(Phi_n(fx::trefoil_right(), 1) == 0);
}

TEST_CASE("Borromean phi_1 is mirror invariant") {
  CHECK(phi_i(fx::borromean(), 1) == phi_i(fx::borromean_mirror(), 1));
}

TEST_CASE("cache soundness") {
  SkeinCache cache;
  const auto cat = Catalog::builtin();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& name : cat.names()) {
      const auto& l = cat.at(name);
      if (l.empty()) continue;
      CHECK(jones_V(l, &cache) == jones_V(l));
    }
  }
  CHECK(cache.hits() > 0);
  CHECK(cache.size() <= cat.size());
  CHECK(Phi_n(fx::borromean(), 4, &cache) == Phi_n(fx::borromean(), 4));
}

TEST_CASE("division by [2]") {
  CHECK(divide_by_quantum_two(quantum_int(2) * quantum_int(3)) == quantum_int(3));
  CHECK_FALSE(divide_by_quantum_two(quantum_int(3)).has_value());
  CHECK(divide_by_quantum_two(HalfLaurent{}) == HalfLaurent{});
  CHECK(QuantumRatio{quantum_int(2).pow(3), 2}.reduced().as_laurent() == quantum_int(2));
}
