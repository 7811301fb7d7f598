#include <doctest.h>

#include <random>

#include "zhs/links/catalog.hpp"
#include "zhs/links/fixtures.hpp"
#include "zhs/ohtsuki/lambda.hpp"

using namespace zhs::ohtsuki;
using zhs::algebra::frac;
using zhs::links::Catalog;
using zhs::links::FramedLinkDiagram;
namespace fx = zhs::links::fixtures;

namespace {

// Straight transcription of the defining sum, enumerating every m in a cube
// and filtering, as an oracle for F_nl.
Rational F_bruteforce(const std::vector<int>& f, const MultiIndex& i, const MultiIndex& j, int n, int l,
                      const NuTable& table) {
  const std::size_t mu = f.size();
  Rational total = 0;
  std::vector<int> hi(mu);
  for (std::size_t p = 0; p < mu; ++p) hi[p] = i[p] == 0 ? 0 : n - l;
  for (const auto& m : box(MultiIndex::constant(mu, 0), MultiIndex(hi))) {
    if ((i * m).norm() != n - l) continue;
    Rational prod = 1;
    for (std::size_t p = 0; p < mu; ++p)
      for (int e = 0; e < i[p]; ++e) prod *= table.lookup(f[p], j[p], m[p]);
    total += prod;
  }
  Rational pre = 1;
  for (std::size_t q = 0; q < mu; ++q)
    for (int e = 0; e < i[q]; ++e) pre *= -f[q];
  for (int e = 0; e < j.norm(); ++e) pre /= -2;
  return pre * total;
}

NuTable random_table(std::mt19937& rng, int max_i, int max_m) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  NuTable t;
  for (int f : {-1, 1})
    for (int i = 0; i <= max_i; ++i)
      for (int m = 0; m <= max_m; ++m)
        if (!NuTable::is_builtin(i, m)) t.set(f, i, m, frac(num(rng), den(rng)));
  return t;
}

std::vector<std::vector<int>> all_framings(std::size_t mu) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (1u << mu); ++mask) {
    std::vector<int> f(mu);
    for (std::size_t p = 0; p < mu; ++p) f[p] = (mask >> p & 1u) ? -1 : 1;
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("multi-index operations") {
  const MultiIndex k{1, 2, 3};
  CHECK(k.norm() == 6);
  CHECK(k.count() == 3);
  CHECK(MultiIndex{1, 0} * MultiIndex{5, 7} == MultiIndex{5, 0});
  CHECK(MultiIndex::constant(3, 1) == MultiIndex{1, 1, 1});
  CHECK(MultiIndex{1, 2} + MultiIndex{3, 4} == MultiIndex{4, 6});
  CHECK(3 * MultiIndex{1, 2} == MultiIndex{3, 6});
  CHECK_THROWS_AS((MultiIndex{1} + MultiIndex{1, 2}), LengthMismatch);
  CHECK_THROWS_AS((MultiIndex{1} * MultiIndex{1, 2}), LengthMismatch);
  CHECK_THROWS_AS((MultiIndex{-1}), std::invalid_argument);
  CHECK(box(MultiIndex{0, 0}, MultiIndex{1, 2}).size() == 6);
  CHECK(box(MultiIndex{}, MultiIndex{}).size() == 1);
}

TEST_CASE("nu lookup") {
  const NuTable t;
  CHECK(t.lookup(1, 0, 0) == -1);
  CHECK(t.lookup(-1, 0, 0) == 1);
  CHECK(t.lookup(-1, 0, 3) == 0);
  CHECK(t.lookup(1, 1, 0) == 2);
  CHECK(t.lookup(-1, 1, 0) == 2);
  CHECK_THROWS_AS(t.lookup(1, 1, 1), MissingNuEntry);
  CHECK_THROWS_AS(t.lookup(1, 2, 0), MissingNuEntry);
  CHECK(t.provenance(1, 0, 5) == NuProvenance::BuiltIn);
  CHECK_FALSE(t.provenance(1, 2, 0).has_value());
}

TEST_CASE("nu table files") {
  const auto j = nlohmann::json::parse(R"([{"f": 1, "i": 1, "m": 1, "value": "-3/4"}, {"f": -1, "i": 2, "m": 0, "value": 5}])");
  const NuTable t = NuTable::from_json(j);
  CHECK(t.lookup(1, 1, 1) == frac(-3, 4));
  CHECK(t.lookup(-1, 2, 0) == 5);
  CHECK(t.provenance(1, 1, 1) == NuProvenance::UserSupplied);
  CHECK(NuTable::from_json(t.to_json()).fingerprint() == t.fingerprint());
  CHECK_THROWS_AS((NuTable::from_json(nlohmann::json::parse(R"([{"f": 1, "i": 0, "m": 2, "value": "1"}])"))), NuTableError);
  CHECK_THROWS_AS((NuTable::from_json(nlohmann::json::parse(R"([{"f": 1, "i": 1, "m": 0, "value": "3"}])"))), NuTableError);
  CHECK_THROWS_AS((NuTable::from_json(nlohmann::json::parse(R"([{"f": 2, "i": 2, "m": 0, "value": "3"}])"))), NuTableError);
}

TEST_CASE("F_nl examples") {
  const NuTable t;
  CHECK(F_nl({1, 1, 1}, MultiIndex{1, 1, 1}, MultiIndex{1, 1, 1}, 1, 1, t) == 1);
  CHECK(F_nl({1, -1, 1}, MultiIndex{1, 1, 1}, MultiIndex{1, 1, 1}, 1, 1, t) == -1);
  CHECK(F_nl({1, 1}, MultiIndex{0, 0}, MultiIndex{0, 0}, 2, 2, t) == 1);
  CHECK(F_nl({1}, MultiIndex{1}, MultiIndex{1}, 1, 1, t) == 1);
  CHECK(F_nl({-1}, MultiIndex{1}, MultiIndex{1}, 1, 1, t) == -1);
  // n > l needs constants beyond the built-in families
  CHECK_THROWS_AS((F_nl({1}, MultiIndex{1}, MultiIndex{1}, 2, 1, t)), MissingNuEntry);
  // but not where i_p = 0 switches the factor off
  CHECK(F_nl({1}, MultiIndex{0}, MultiIndex{2}, 2, 1, t) == 0);
  CHECK_THROWS_AS((F_nl({1, 1}, MultiIndex{1}, MultiIndex{1, 1}, 1, 1, t)), LengthMismatch);
  CHECK_THROWS_AS((F_nl({1}, MultiIndex{1}, MultiIndex{1}, 1, 2, t)), std::invalid_argument);
}

TEST_CASE("F_nl matches the brute-force transcription") {
  std::mt19937 rng(5);
  const NuTable table = random_table(rng, 3, 3);
  for (std::size_t mu = 1; mu <= 3; ++mu)
    for (const auto& f : all_framings(mu))
      for (int n = 1; n <= 3; ++n)
        for (int l = 1; l <= n; ++l)
          for (const auto& i : box(MultiIndex::constant(mu, 0), MultiIndex::constant(mu, 1)))
            for (const auto& j : box(MultiIndex::constant(mu, 0), MultiIndex::constant(mu, l)))
              CHECK(F_nl(f, i, j, n, l, table) == F_bruteforce(f, i, j, n, l, table));
}

TEST_CASE("G_nl examples") {
  const NuTable t;
  CHECK(G_nl({1, 1}, MultiIndex{0, 1}, 1, 1, t) == 0);
  CHECK(G_nl({1, 1, 1}, MultiIndex{1, 1, 1}, 1, 1, t) == -F_nl({1, 1, 1}, MultiIndex{1, 1, 1}, MultiIndex{1, 1, 1}, 1, 1, t));
  CHECK(G_nl({1}, MultiIndex{1}, 1, 1, t) == -F_nl({1}, MultiIndex{1}, MultiIndex{1}, 1, 1, t));
}

TEST_CASE("lambda_n examples") {
  const NuTable t;
  EvalContext ctx;
  CHECK(lambda_n(SurgeryPresentation(fx::unknot(1)), 1, t, ctx) == 0);
  CHECK(lambda_n(SurgeryPresentation(fx::unknot(-1)), 1, t, ctx) == 0);
  CHECK(lambda_n(SurgeryPresentation(FramedLinkDiagram{}), 1, t, ctx) == 0);
  CHECK(lambda_n(SurgeryPresentation(FramedLinkDiagram{}), 3, t, ctx) == 0);
  CHECK(lambda_n(SurgeryPresentation(fx::trefoil_right(1)), 1, t, ctx) == 6);
  CHECK(lambda_n(SurgeryPresentation(fx::trefoil_right(-1)), 1, t, ctx) == -6);
  CHECK_THROWS_AS(SurgeryPresentation(fx::hopf()), NotAlgebraicallySplit);
  CHECK_THROWS_AS(SurgeryPresentation(fx::unlink(2)), BadFraming);
  CHECK_THROWS_AS((SurgeryPresentation(fx::with_framings(fx::hopf(), {1, 1}))), NotAlgebraicallySplit);
  CHECK_THROWS_AS(SurgeryPresentation(fx::trefoil_right(2)), BadFraming);
  CHECK_THROWS_AS(lambda_n(SurgeryPresentation(fx::trefoil_right(1)), 2, t, ctx), MissingNuEntry);
}

TEST_CASE("lambda_1 is six times the Casson invariant") {
  // Casson invariant of +-1 surgery on K is +-a_2(K): a_2 = 1 for either
  // trefoil, -1 for the figure-eight.
  const NuTable t;
  EvalContext ctx;
  const std::vector<std::pair<FramedLinkDiagram, int>> cases{
      {fx::trefoil_right(1), 1}, {fx::trefoil_right(-1), -1}, {fx::trefoil_left(1), 1},
      {fx::trefoil_left(-1), -1}, {fx::figure_eight(1), -1},  {fx::figure_eight(-1), 1},
  };
  for (const auto& [link, casson] : cases) CHECK(lambda_n(SurgeryPresentation(link), 1, t, ctx) == 6 * casson);
}

TEST_CASE("lambda with a user table at n = 2") {
  std::mt19937 rng(9);
  const NuTable table = random_table(rng, 2, 2);
  EvalContext ctx;
  const auto s = SurgeryPresentation(fx::trefoil_right(1));
  const Rational v = lambda_n(s, 2, table, ctx);
  LambdaOptions serial;
  serial.parallel = false;
  EvalContext fresh;
  CHECK(lambda_n(s, 2, table, fresh, serial) == v);
}

TEST_CASE("finite-type sums two ways") {
  const NuTable t;
  EvalContext ctx;
  LambdaOptions full;
  full.prune_by_component_count = false;
  const auto cat = Catalog::builtin();
  for (const char* name : {"unknot+1", "trefoil+1", "borromean+1", "borromean-plus-unknot"}) {
    INFO(name);
    const auto& l = cat.at(name);
    CHECK(finite_type_sum(l, 1, t, ctx, full) == finite_type_sum_via_G(l, 1, t, ctx, full));
  }
  std::mt19937 rng(13);
  const NuTable user = random_table(rng, 2, 2);
  const auto knot = cat.at("figure-eight-1");
  CHECK(finite_type_sum(knot, 2, user, ctx, full) == finite_type_sum_via_G(knot, 2, user, ctx, full));
  const auto two = zhs::links::disjoint_union(fx::trefoil_right(1), fx::unknot(-1));
  CHECK(finite_type_sum(two, 2, user, ctx, full) == finite_type_sum_via_G(two, 2, user, ctx, full));
}

TEST_CASE("finite-type examples") {
  const NuTable t;
  EvalContext ctx;
  LambdaOptions full;
  full.prune_by_component_count = false;
  CHECK(finite_type_sum(fx::unknot(1), 1, t, ctx, full) == 0);
  CHECK(finite_type_sum(Catalog::builtin().at("borromean-plus-unknot"), 1, t, ctx, full) == 0);
  const auto b = Catalog::builtin().at("borromean+1");
  CHECK(finite_type_sum(b, 1, t, ctx, full) == -phi_of_cable(b, MultiIndex{1, 1, 1}, 1, ctx));
}

TEST_CASE("the 3n identity on all framings of the Borromean rings") {
  const NuTable t;
  EvalContext ctx;
  for (const auto& f : all_framings(3)) {
    const auto r = check_eq16(fx::with_framings(fx::borromean(), f), 1, t, ctx);
    CHECK(r.holds());
    CHECK(r.predicted != 0);
  }
  CHECK_THROWS_AS(check_eq16(fx::trefoil_right(1), 1, t, ctx), std::invalid_argument);
}

TEST_CASE("dropping a j = 0 component from i leaves F unchanged") {
  std::mt19937 rng(21);
  const NuTable user = random_table(rng, 3, 2);
  for (std::size_t mu = 1; mu <= 3; ++mu) {
    for (const auto& f : all_framings(mu)) {
      for (int n = 1; n <= 3; ++n) {
        for (int l = 1; l <= n; ++l) {
          for (const auto& i : box(MultiIndex::constant(mu, 0), MultiIndex::constant(mu, 1))) {
            for (const auto& j : box(MultiIndex::constant(mu, 0), MultiIndex::constant(mu, l))) {
              for (std::size_t p = 0; p < mu; ++p) {
                if (i[p] != 1 || j[p] != 0) continue;
                std::vector<int> i0(mu);
                for (std::size_t q = 0; q < mu; ++q) i0[q] = q == p ? 0 : i[q];
                CHECK(F_nl(f, i, j, n, l, user) == F_nl(f, MultiIndex(i0), j, n, l, user));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("G vanishes when some j_p is zero") {
  std::mt19937 rng(22);
  const NuTable user = random_table(rng, 3, 2);
  for (std::size_t mu = 1; mu <= 3; ++mu) {
    for (const auto& f : all_framings(mu)) {
      for (int n = 1; n <= 3; ++n) {
        for (int l = 1; l <= n; ++l) {
          for (const auto& j : box(MultiIndex::constant(mu, 0), MultiIndex::constant(mu, l))) {
            bool has_zero = false;
            for (std::size_t p = 0; p < mu; ++p) has_zero = has_zero || j[p] == 0;
            if (has_zero) CHECK(G_nl(f, j, n, l, user) == 0);
          }
        }
      }
    }
  }
  // Sanity: G is not identically zero.
  CHECK(G_nl({1, 1, 1}, MultiIndex{1, 1, 1}, 1, 1, NuTable{}) != 0);
}
