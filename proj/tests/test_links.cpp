#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "zhs/jones/jones.hpp"
#include "zhs/links/catalog.hpp"
#include "zhs/links/combination.hpp"
#include "zhs/links/fixtures.hpp"
#include "zhs/links/tangle.hpp"

using namespace zhs::links;
namespace fx = zhs::links::fixtures;
using zhs::jones::jones_V;

TEST_CASE("validate") {
  CHECK_FALSE(validate(fx::unknot()));
  CHECK_FALSE(validate(FramedLinkDiagram{}));
  FramedLinkDiagram bad = fx::trefoil_right();
  bad.crossings[1].arcs[0] = bad.crossings[0].arcs[0];
  CHECK(validate(bad).has_value());
  FramedLinkDiagram wrong_framings = fx::hopf();
  wrong_framings.framings = {0};
  CHECK(validate(wrong_framings).has_value());
  FramedLinkDiagram reversed = fx::trefoil_right();
  std::reverse(reversed.components[0].begin(), reversed.components[0].end());
  CHECK(validate(reversed).has_value());
  for (const auto& name : Catalog::builtin().names()) {
    INFO(name);
    CHECK_FALSE(validate(Catalog::builtin().at(name)));
  }
}

TEST_CASE("linking matrices") {
  auto two = fx::unlink(2);
  two.framings = {1, -1};
  CHECK(linking_matrix(two) == LinkingMatrix{{1, 0}, {0, -1}});
  const auto h = linking_matrix(fx::hopf());
  CHECK(std::abs(h[0][1]) == 1);
  CHECK(h[0][1] == h[1][0]);
  CHECK_FALSE(is_algebraically_split(fx::hopf()));
  const auto b = linking_matrix(fx::borromean());
  for (int p = 0; p < 3; ++p)
    for (int r = 0; r < 3; ++r) CHECK(b[p][r] == 0);
  CHECK(is_algebraically_split(fx::borromean()));
  CHECK(is_algebraically_split(fx::borromean_mirror()));
  CHECK(is_algebraically_split(fx::trefoil_right(1)));
  CHECK(is_algebraically_split(fx::closed_braid(3, {1, -2, 1, -2, 1, -2})));
}

TEST_CASE("linking matrix is symmetric and follows relabelling") {
  const auto l = Catalog::builtin().at("borromean-cable-2-1-1");
  const auto m = linking_matrix(l);
  for (std::size_t p = 0; p < m.size(); ++p)
    for (std::size_t r = 0; r < m.size(); ++r) CHECK(m[p][r] == m[r][p]);
  const auto hopf_plus = disjoint_union(fx::unknot(), fx::hopf());
  const auto perm = sublink(hopf_plus, {2, 0, 1});
  const auto a = linking_matrix(hopf_plus), b = linking_matrix(perm);
  const std::vector<std::size_t> order{2, 0, 1};
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t r = 0; r < 3; ++r) CHECK(b[p][r] == a[order[p]][order[r]]);
}

TEST_CASE("sublinks") {
  const auto b = fx::borromean();
  CHECK(sublink(b, {0, 1, 2}) == compacted(b));
  CHECK(sublink(b, {}).empty());
  const auto unlink_v = jones_V(fx::unlink(2));
  for (auto keep : std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}) {
    const auto s = sublink(b, keep);
    CHECK(s.size() == 2);
    CHECK_FALSE(validate(s));
    CHECK(jones_V(s) == unlink_v);
  }
  const auto knot = sublink(fx::trefoil_right(1), {0});
  CHECK(knot.framings == std::vector<int>{1});
  CHECK(sublink_mask(b, 0b101).size() == 2);
}

TEST_CASE("disjoint union") {
  CHECK(disjoint_union(fx::trefoil_right(), FramedLinkDiagram{}) == compacted(fx::trefoil_right()));
  const auto two = disjoint_union(fx::unknot(), fx::unknot());
  CHECK(two.size() == 2);
  CHECK(jones_V(two) == jones_V(fx::unlink(2)));
  const auto four = disjoint_union(fx::borromean(), fx::unknot());
  CHECK(four.size() == 4);
  CHECK(is_algebraically_split(four));
}

TEST_CASE("cables") {
  const auto t = fx::trefoil_right();
  CHECK(jones_V(cable(t, {1})) == jones_V(t));
  CHECK(jones_V(cable(fx::borromean(), {1, 1, 1})) == jones_V(fx::borromean()));
  const auto u2 = cable(fx::unknot(), {2});
  CHECK(u2.size() == 2);
  CHECK(u2.crossing_count() == 0);
  const auto t2 = cable(t, {2});
  CHECK_FALSE(validate(t2));
  CHECK(t2.size() == 2);
  CHECK(linking_matrix(t2)[0][1] == 0);
  const auto t3 = cable(fx::figure_eight(1), {3});
  CHECK(t3.framings == std::vector<int>{1, 1, 1});
  CHECK(is_algebraically_split(t3));
  CHECK(cable(fx::hopf(), {0, 2}).size() == 2);
  CHECK(cable(fx::borromean(), {0, 0, 0}).empty());
}

TEST_CASE("cables of split links stay split") {
  const auto b = fx::borromean();
  for (int a = 0; a <= 2; ++a)
    for (int c = 0; c <= 2; ++c)
      for (int d = 0; d <= 2; ++d) {
        const auto l = cable(b, {a, c, d});
        CHECK_FALSE(validate(l));
        CHECK(static_cast<int>(l.size()) == a + c + d);
        CHECK(is_algebraically_split(l));
      }
  for (const char* name : {"trefoil+1", "figure-eight-1", "trefoil-4crossing"}) {
    CHECK(is_algebraically_split(cable(Catalog::builtin().at(name), {3})));
  }
}

TEST_CASE("sublinks of cables are cables") {
  const auto b = fx::borromean();
  const auto big = cable(b, {2, 1, 2});
  // components of big: A0 A1 B0 C0 C1
  CHECK(jones_V(sublink(big, {0, 2, 3})) == jones_V(cable(b, {1, 1, 1})));
  CHECK(jones_V(sublink(big, {0, 1, 3, 4})) == jones_V(cable(b, {2, 0, 2})));
  const auto t = cable(fx::trefoil_left(), {3});
  CHECK(jones_V(sublink(t, {0, 2})) == jones_V(cable(fx::trefoil_left(), {2})));
}

TEST_CASE("crossing change and smoothing") {
  const auto t = fx::trefoil_right();
  const auto changed = crossing_change(t, 0);
  CHECK_FALSE(validate(changed));
  CHECK(changed.crossings[0].sign == -1);
  CHECK(crossing_change(changed, 0) == t);
  const auto smooth = oriented_smoothing(t, 0);
  CHECK_FALSE(validate(smooth));
  CHECK(smooth.size() == 2);
  CHECK(oriented_smoothing(fx::hopf(), 0).size() == 1);
  CHECK(mirror(fx::trefoil_right(1)).framings == std::vector<int>{-1});
}

TEST_CASE("tangles") {
  const auto arc = trivial_arc();
  CHECK(close(connect_sum_strands(arc, arc, {{0, 1}, {1, 0}})).size() == 1);
  CHECK_THROWS_AS(join(arc, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(connect_sum_strands(arc, arc, {{0, 0}}), InvalidDiagram);

  const auto bt = fx::borromean_tangle();
  CHECK_FALSE(validate(bt));
  const auto tt = fx::trivial_tangle();
  // Capping each slot of the Borromean tangle recovers the rings.
  const auto capped = close(join(bt, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK_FALSE(validate(capped));
  CHECK(capped.size() == 3);
  CHECK(jones_V(capped) == jones_V(fx::borromean()));
  // Facing the trivial tangle across the cut reverses the boundary order.
  const auto joined = close(connect_sum_strands(bt, tt, {{0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 1}, {5, 0}}));
  CHECK(joined.size() == 3);
  CHECK(is_algebraically_split(joined));
  CHECK(jones_V(joined) == jones_V(fx::borromean()));
}

TEST_CASE("sublink sums") {
  const auto u = sublink_sum(fx::unknot(), SignRule::ByKept);
  LinkCombination expected;
  expected.add(-1, fx::unknot());
  expected.add(1, FramedLinkDiagram{});
  CHECK(u == expected);
  const auto e = sublink_sum(FramedLinkDiagram{}, SignRule::ByKept);
  CHECK(e.size() == 1);
  CHECK(e.terms()[0].first == 1);
  const auto b = sublink_sum(fx::borromean(), SignRule::ByKept);
  CHECK(b.size() == 8);
  CHECK(b.total_coefficient() == 0);
  for (const auto& [c, l] : b.terms()) CHECK(c == zhs::algebra::sign_power(static_cast<long>(l.size())));
  const auto phi_signs = sublink_sum(fx::borromean(), SignRule::ByDropped);
  for (const auto& [c, l] : phi_signs.terms()) CHECK(c == zhs::algebra::sign_power(3 - static_cast<long>(l.size())));
  CHECK(b.merged().size() == 5);
}

TEST_CASE("catalog json round trip") {
  const auto cat = Catalog::builtin();
  const auto again = Catalog::from_json(cat.to_json());
  CHECK(again.names() == cat.names());
  for (const auto& n : cat.names()) CHECK(again.at(n) == cat.at(n));
  for (const char* required : {"empty", "unknot", "unlink2", "hopf", "trefoil", "trefoil-left", "figure-eight", "borromean"}) {
    CHECK(cat.contains(required));
  }
  CHECK_THROWS_AS(cat.at("nope"), std::out_of_range);
  nlohmann::json broken = to_json(fx::trefoil_right());
  broken["pd"][0][0] = 99;
  CHECK_THROWS_AS(link_from_json(broken), InvalidDiagram);
}
