#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "zhs/diagrams/beta.hpp"
#include "zhs/diagrams/chord_diagram.hpp"
#include "zhs/diagrams/graph.hpp"
#include "zhs/diagrams/sl2.hpp"
#include "zhs/jones/jones.hpp"
#include "zhs/links/combination.hpp"
#include "zhs/links/fixtures.hpp"

using namespace zhs::diagrams;
using zhs::algebra::frac;
using zhs::links::LinkCombination;

namespace {

std::vector<TrivalentGraph> small_graphs() {
  auto out = generate_graphs(2);
  auto four = generate_graphs(4);
  out.insert(out.end(), four.begin(), four.end());
  return out;
}

// The same graph with its vertices permuted and each vertex's slots rotated.
TrivalentGraph scrambled(const TrivalentGraph& g, std::mt19937& rng) {
  const int nv = g.vertex_count();
  std::vector<int> pi(nv), rot(nv);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  for (int& r : rot) r = std::uniform_int_distribution<int>(0, 2)(rng);
  auto image = [&](int h) { return 3 * pi[h / 3] + (h % 3 + rot[h / 3]) % 3; };
  std::vector<int> mate(g.mates().size());
  for (int h = 0; h < static_cast<int>(mate.size()); ++h) mate[image(h)] = image(g.mate(h));
  return TrivalentGraph::from_mates(mate);
}

// Direct six-index sum for the theta graph, written out from the matrices.
Rational theta_oracle(const std::vector<std::vector<Rational>>& ginv, const std::vector<std::vector<Rational>>& f3,
                      const std::array<int, 3>& second_vertex) {
  Rational total = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2) {
              // second_vertex[k] names which first-vertex slot the k-th slot of
              // the second vertex is joined to.
              const std::array<int, 3> first = {a, b, c}, second = {a2, b2, c2};
              std::array<int, 3> at_second{};
              Rational w = 1;
              for (int k = 0; k < 3; ++k) {
                at_second[k] = second[second_vertex[k]];
                w *= ginv[first[second_vertex[k]]][second[second_vertex[k]]];
              }
              total += w * f3[a * 3 + b][c] * f3[at_second[0] * 3 + at_second[1]][at_second[2]];
            }
  return total;
}

}  // namespace

TEST_CASE("graph construction") {
  const TrivalentGraph t = theta();
  CHECK(t.vertex_count() == 2);
  CHECK(t.edge_count() == 3);
  CHECK(t.order() == 1);
  CHECK_THROWS_AS(TrivalentGraph(2, {{0, 0, 1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(TrivalentGraph(2, {{0, 0, 1, 0}, {0, 1, 1, 1}, {0, 2, 1, 1}}), InvalidGraph);
  CHECK_THROWS_AS(TrivalentGraph(1, {{0, 0, 0, 0}}), InvalidGraph);
  CHECK(t.flipped(0).flipped(0) == t);
  CHECK(graph_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(generate_graphs(3), InvalidGraph);
}

TEST_CASE("generated graphs are pairwise distinct") {
  const auto two = generate_graphs(2);
  const auto four = generate_graphs(4);
  // theta, theta with one vertex reversed, and the dumbbell (self-loops make
  // its orientation irrelevant).
  CHECK(two.size() == 3);
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j) CHECK_FALSE(isomorphic_brute_force(four[i], four[j]));
  for (std::size_t i = 0; i < two.size(); ++i)
    for (std::size_t j = i + 1; j < two.size(); ++j) CHECK_FALSE(isomorphic_brute_force(two[i], two[j]));
}

TEST_CASE("canonical code agrees with brute-force isomorphism") {
  std::mt19937 rng(7);
  for (const auto& g : small_graphs()) {
    for (int trial = 0; trial < 4; ++trial) {
      const TrivalentGraph h = scrambled(g, rng);
      CHECK(canonical_code(h) == canonical_code(g));
      CHECK(isomorphic_brute_force(g, h));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      const TrivalentGraph f = g.flipped(v);
      CHECK((canonical_code(f) == canonical_code(g)) == isomorphic_brute_force(f, g));
    }
  }
}

TEST_CASE("AS relation examples") {
  const GraphCombination c = as_relation(theta(), 0);
  CHECK(c.size() == 2);
  CHECK(sl2_weight(c) == 0);
  // A self-loop at vertex 0: flipping it gives an isomorphic graph.
  const TrivalentGraph loop(2, {{0, 1, 0, 2}, {0, 0, 1, 0}, {1, 1, 1, 2}});
  const GraphCombination d = as_relation(loop, 0);
  REQUIRE(d.size() == 1);
  CHECK(d.terms()[0].first == 2);
  CHECK(sl2_weight(loop) == 0);
  CHECK(as_relation(as_relation(theta(), 1), 1).size() == 2);
}

TEST_CASE("IHX relation examples") {
  const GraphCombination c = ihx_relation(theta(), 0);
  CHECK_FALSE(c.empty());
  CHECK(sl2_weight(c) == 0);
  const TrivalentGraph loop(2, {{0, 1, 0, 2}, {0, 0, 1, 0}, {1, 1, 1, 2}});
  int self = -1;
  for (int e = 0; e < loop.edge_count(); ++e)
    if (loop.is_self_loop(e)) self = e;
  REQUIRE(self >= 0);
  CHECK_THROWS_AS(ihx_relation(loop, self), InvalidGraph);

  GraphCombination two(theta());
  two.add(frac(-3, 2), theta().flipped(1));
  GraphCombination termwise = ihx_relation(theta(), 1);
  GraphCombination second = ihx_relation(theta().flipped(1), 1);
  second *= frac(-3, 2);
  termwise += second;
  CHECK(ihx_relation(two, 1) == termwise);
}

TEST_CASE("weight kills AS and IHX on every graph with at most four vertices") {
  for (const auto& g : small_graphs()) {
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(sl2_weight(as_relation(g, v)) == 0);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.is_self_loop(e)) continue;
      CHECK(sl2_weight(ihx_relation(g, e)) == 0);
    }
  }
}

TEST_CASE("sl2 data derived from the matrices") {
  const LieData& lie = sl2();
  CHECK(lie.dim() == 3);
  CHECK(lie.scale == 2);
  CHECK(lie.metric[0][1] == 1);
  CHECK(lie.metric[2][2] == 2);
  CHECK(lie.inverse_metric[2][2] == frac(1, 2));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        CHECK(lie.f(a, b, c) == -lie.f(b, a, c));
        CHECK(lie.f(a, b, c) == lie.f(b, c, a));
      }
  CHECK_THROWS_AS(make_lie_data({IntMatrix{2, {0, 1, 0, 0}}}), std::invalid_argument);
}

TEST_CASE("sl2 weight examples") {
  CHECK(sl2_weight(empty_diagram()) == 1);
  CHECK(sl2_weight(bare_loop()) == 2);
  CHECK(sl2_weight(theta()) == 12);
  CHECK(sl2_weight(theta().flipped(0)) == -12);

  // Oracle: metric, inverse and bracket tensor computed here from the 2x2
  // matrices, then the six-index theta sum and the adjoint-trace identity.
  using M = std::array<long, 4>;
  const std::array<M, 3> x = {M{0, 1, 0, 0}, M{0, 0, 1, 0}, M{1, 0, 0, -1}};
  auto mul = [](const M& p, const M& q) {
    return M{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
             p[2] * q[1] + p[3] * q[3]};
  };
  auto tr = [](const M& p) { return p[0] + p[3]; };
  std::vector<std::vector<Rational>> g(3, std::vector<Rational>(3)), ginv(3, std::vector<Rational>(3, 0));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) g[a][b] = Rational(tr(mul(x[a], x[b])));
  // g = [[0,1,0],[1,0,0],[0,0,2]]
  ginv[0][1] = ginv[1][0] = 1;
  ginv[2][2] = frac(1, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Rational row = 0;
      for (int c = 0; c < 3; ++c) row += g[a][c] * ginv[c][b];
      REQUIRE(row == (a == b ? 1 : 0));
    }
  std::vector<std::vector<Rational>> f3(9, std::vector<Rational>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const M ab = mul(x[a], x[b]), ba = mul(x[b], x[a]);
        const M br = {ab[0] - ba[0], ab[1] - ba[1], ab[2] - ba[2], ab[3] - ba[3]};
        f3[a * 3 + b][c] = Rational(tr(mul(br, x[c])));
      }
  CHECK(theta_oracle(ginv, f3, {2, 1, 0}) == 12);
  CHECK(theta_oracle(ginv, f3, {0, 1, 2}) == -12);
  // With f_acd = <[x_a, x_c], x_d>, contracting c with c' and d with d' gives
  // minus the adjoint trace form, which is 4 <x_a, x_b> on sl2.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Rational k = 0;
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int c2 = 0; c2 < 3; ++c2)
            for (int d2 = 0; d2 < 3; ++d2) k += f3[a * 3 + c][d] * f3[b * 3 + c2][d2] * ginv[c][c2] * ginv[d][d2];
      CHECK(k == -4 * g[a][b]);
    }
}

TEST_CASE("serial and parallel contraction agree") {
  for (const auto& g : small_graphs()) {
    CHECK(sl2_weight(g, WeightKernel::Serial) == sl2_weight(g, WeightKernel::Parallel));
    const ChordDiagram d = eta(g);
    CHECK(sl2_weight(d, WeightKernel::Serial) == sl2_weight(d, WeightKernel::Parallel));
  }
}

TEST_CASE("eta examples") {
  const ChordDiagram d = eta(theta());
  CHECK(d.loop_count() == 3);
  CHECK(d.leg_count() == 6);
  CHECK(d.trivalent == 2);
  CHECK(d.grade() == 4);
  const ChordDiagram dd = eta(disjoint_union(theta(), theta()));
  CHECK(dd.loop_count() == 6);
  CHECK(dd.grade() == 8);
  for (const auto& g : generate_graphs(4)) {
    CHECK(eta(g).loop_count() == 6);
    CHECK(eta(g).grade() == 8);
  }
}

TEST_CASE("weight of eta(G) equals weight of G") {
  for (const auto& g : small_graphs()) CHECK(sl2_weight(eta(g)) == sl2_weight(g));
}

TEST_CASE("bare loop factor and connect sums") {
  const std::vector<ChordDiagram> ds = {eta(theta()), eta(theta().flipped(1)), bare_loop(),
                                        eta(generate_graphs(4).back())};
  for (const auto& d : ds) CHECK(sl2_weight(disjoint_union(bare_loop(), d)) == 2 * sl2_weight(d));
  for (const auto& a : ds)
    for (const auto& b : ds)
      for (int la = 0; la < static_cast<int>(a.loop_count()); la += 2)
        for (int lb = 0; lb < static_cast<int>(b.loop_count()); lb += 2) {
          CHECK(sl2_weight(connect_sum(a, la, b, lb)) == frac(1, 2) * sl2_weight(a) * sl2_weight(b));
        }
}

TEST_CASE("epsilon and epsilon tilde") {
  const ChordDiagram bare = bare_loop();
  CHECK(epsilon(bare, 0) == DiagramCombination(empty_diagram()));
  CHECK(epsilon_tilde(bare, 0).empty());
  const ChordDiagram d = eta(theta());
  for (int l = 0; l < 3; ++l) {
    CHECK(epsilon(d, l).empty());
    CHECK(epsilon_tilde(d, l) == DiagramCombination(d));
  }
  const ChordDiagram two = disjoint_union(bare, bare);
  CHECK(epsilon(epsilon(two, 1), 0) == DiagramCombination(empty_diagram()));

  // On any diagram and loop, removal plus the tilde part recovers D exactly
  // when the loop is bare or carries legs, never both.
  const ChordDiagram mixed = disjoint_union(d, bare);
  for (int l = 0; l < static_cast<int>(mixed.loop_count()); ++l) {
    CHECK(epsilon(mixed, l).empty() != epsilon_tilde(mixed, l).empty());
  }
}

TEST_CASE("project_P") {
  const ChordDiagram d = eta(theta());
  CHECK(project_P(DiagramCombination(d)) == DiagramCombination(d));
  CHECK(project_P(DiagramCombination(disjoint_union(d, bare_loop()))).empty());
  std::mt19937 rng(3);
  const std::vector<ChordDiagram> pool = {d, bare_loop(), disjoint_union(d, bare_loop()), eta(theta().flipped(0)),
                                          empty_diagram()};
  for (int trial = 0; trial < 20; ++trial) {
    DiagramCombination a, b;
    for (const auto& x : pool) {
      a.add(std::uniform_int_distribution<int>(-3, 3)(rng), x);
      b.add(std::uniform_int_distribution<int>(-3, 3)(rng), x);
    }
    CHECK(project_P(project_P(a)) == project_P(a));
    DiagramCombination sum = a;
    sum += b;
    DiagramCombination separate = project_P(a);
    separate += project_P(b);
    CHECK(project_P(sum) == separate);
  }
}

TEST_CASE("grade bound") {
  CHECK(min_grade_bound(3) == 4);
  CHECK(min_grade_bound(1) == frac(4, 3));
  CHECK(min_grade_bound(6) == 8);
  CHECK_THROWS_AS(min_grade_bound(0), std::invalid_argument);
  const GradeBoundReport r = check_grade_bound(3, 5);
  CHECK(r.ok());
  CHECK(r.two_leg_types > 0);
  CHECK(r.one_leg_types > 0);
  CHECK(r.types == r.two_leg_types + r.one_leg_types);
}

TEST_CASE("Lambda_n") {
  CHECK(Lambda_n(theta(), 1) == -12);
  CHECK(Lambda_n(theta(), 1) != 0);
  CHECK(Lambda_n(theta().flipped(0), 1) == 12);
  CHECK_THROWS_AS(Lambda_n(theta(), 2), InvalidGraph);
  for (const auto& g : generate_graphs(4)) {
    Rational as_sum = 0;
    for (const auto& [c, h] : as_relation(g, 0).terms()) as_sum += c * Lambda_n(h, 2);
    CHECK(as_sum == 0);
  }
}

TEST_CASE("beta of theta") {
  const LinkCombination b = beta(theta());
  REQUIRE(b.size() == 4);
  int positive = 0;
  for (const auto& [c, link] : b.terms()) {
    CHECK(link.size() == 3);
    CHECK(zhs::links::is_algebraically_split(link));
    CHECK(link.framings == std::vector<int>{0, 0, 0});
    positive += c > 0 ? 1 : 0;
  }
  CHECK(positive == 2);
  // All-Borromean term first, all-trivial term last.
  CHECK(b.terms().front().first == 1);
  CHECK(b.terms().back().first == 1);
  CHECK(b.terms().back().second.crossing_count() == 0);
  const auto unlink3 = zhs::jones::jones_V(zhs::links::fixtures::unlink(3));
  CHECK(zhs::jones::jones_V(b.terms().back().second) == unlink3);
  CHECK(zhs::jones::jones_V(b.terms().front().second) != unlink3);
  // A mixed term is the Borromean rings.
  CHECK(zhs::jones::jones_V(b.terms()[1].second) == zhs::jones::jones_V(zhs::links::fixtures::borromean()));

  for (const auto& [c, link] : beta_tilde(theta()).terms()) CHECK(link.framings == std::vector<int>{1, 1, 1});
  for (const auto& g : generate_graphs(4)) {
    const LinkCombination b4 = beta(g);
    CHECK(b4.size() == 16);
    for (const auto& [c, link] : b4.terms()) {
      CHECK(link.size() == 6);
      CHECK(zhs::links::is_algebraically_split(link));
    }
  }
}

TEST_CASE("delta(beta~(theta)) = -beta~(theta) on invariants") {
  const LinkCombination bt = beta_tilde(theta());
  LinkCombination delta;
  for (const auto& [c, link] : bt.terms()) {
    LinkCombination s = zhs::links::sublink_sum(link, zhs::links::SignRule::ByKept);
    s *= c;
    delta += s;
  }
  // The empty sublinks cancel (coefficients 1 - 1 - 1 + 1), so Jones values
  // of the remaining terms can be summed.
  const LinkCombination merged = delta.merged();
  for (const auto& [c, link] : merged.terms()) REQUIRE_FALSE(link.empty());
  zhs::algebra::HalfLaurent v_delta, v_beta;
  for (const auto& [c, link] : merged.terms()) v_delta += c * zhs::jones::jones_V(link);
  for (const auto& [c, link] : bt.terms()) v_beta += c * zhs::jones::jones_V(link);
  CHECK(v_delta == Rational(-1) * v_beta);
  for (unsigned n = 0; n <= 4; ++n) {
    auto Phi = [n](const zhs::links::FramedLinkDiagram& l) { return zhs::jones::Phi_n(l, n); };
    CHECK(delta.evaluate(Phi) == -bt.evaluate(Phi));
  }
}

TEST_CASE("band assembly") {
  CHECK_THROWS_AS(assemble_bands(2, {{0, 0, 1, 2}}, {}, {true, true}), InvalidGraph);
  CHECK_THROWS_AS(assemble_bands(1, {}, {{0, 0}, {0, 1}, {0, 2}}, {true, false}), InvalidGraph);
  // One vertex, all slots capped: the tangle closes up to its ring fixture.
  const auto rings = assemble_bands(1, {}, {{0, 0}, {0, 1}, {0, 2}}, {true});
  CHECK(zhs::jones::jones_V(rings) == zhs::jones::jones_V(zhs::links::fixtures::borromean()));
  const auto four = beta_four_component_link();
  CHECK(four.size() == 4);
  CHECK(zhs::links::is_algebraically_split(four));
  CHECK(four.framings == std::vector<int>{1, 1, 1, 1});
}
