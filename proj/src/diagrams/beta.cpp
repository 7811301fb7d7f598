#include "zhs/diagrams/beta.hpp"

#include <algorithm>
#include <map>

#include "zhs/links/fixtures.hpp"
#include "zhs/links/tangle.hpp"

namespace zhs::diagrams {

namespace {

using links::Tangle;

long entry_x(int v, int s) { return 100L * v + 30L * (2 - s); }
long exit_x(int v, int s) { return entry_x(v, s) + 10; }

struct Strand {
  long from, to;
  int band;
  long left() const { return std::min(from, to); }
  long right() const { return std::max(from, to); }
  bool rightwards() const { return from < to; }
};

struct Meeting {
  int s, t;  // s has the smaller left end
  Rational x;
};

// Crossings between semicircular strands, each with its arcs split at the
// crossings in order of travel.
Tangle band_tangle(const std::vector<Strand>& strands) {
  const int ns = static_cast<int>(strands.size());
  std::vector<Meeting> meetings;
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j) {
      int s = i, t = j;
      if (strands[t].left() < strands[s].left()) std::swap(s, t);
      const Strand &a = strands[s], &b = strands[t];
      if (!(a.left() < b.left() && b.left() < a.right() && a.right() < b.right())) continue;
      if (a.band == b.band) throw std::logic_error("strands of one band cross");
      // Intersection of the two circles centred on the line.
      const Rational x = algebra::frac(b.left() * b.right() - a.left() * a.right(),
                                       (b.left() + b.right()) - (a.left() + a.right()));
      meetings.push_back({s, t, x});
    }

  // Position of each meeting along each strand, in travel order.
  std::vector<std::vector<int>> along(ns);
  for (int m = 0; m < static_cast<int>(meetings.size()); ++m) {
    along[meetings[m].s].push_back(m);
    along[meetings[m].t].push_back(m);
  }
  Tangle t;
  std::map<std::pair<int, int>, int> in_arc, out_arc;  // (strand, meeting) -> arc id
  int next_arc = 1;
  for (int k = 0; k < ns; ++k) {
    auto& list = along[k];
    std::sort(list.begin(), list.end(), [&](int p, int q) { return meetings[p].x < meetings[q].x; });
    for (std::size_t i = 1; i < list.size(); ++i)
      if (meetings[list[i]].x == meetings[list[i - 1]].x) throw std::logic_error("three bands meet at one point");
    if (!strands[k].rightwards()) std::reverse(list.begin(), list.end());
    std::vector<int> arcs{next_arc++};
    for (int m : list) {
      in_arc[{k, m}] = arcs.back();
      arcs.push_back(next_arc++);
      out_arc[{k, m}] = arcs.back();
    }
    t.strands.push_back(std::move(arcs));
    t.boundary.push_back({static_cast<std::size_t>(k), false});
    t.boundary.push_back({static_cast<std::size_t>(k), true});
  }

  for (int m = 0; m < static_cast<int>(meetings.size()); ++m) {
    const auto& mt = meetings[m];
    // Counterclockwise: s toward its right end, t toward its right end, s
    // toward its left end, t toward its left end.
    struct Ray {
      int strand;
      bool incoming;
    };
    auto ray = [&](int k, bool toward_right) { return Ray{k, toward_right != strands[k].rightwards()}; };
    const std::array<Ray, 4> rays = {ray(mt.s, true), ray(mt.t, true), ray(mt.s, false), ray(mt.t, false)};
    const int under = strands[mt.s].band > strands[mt.t].band ? mt.s : mt.t;
    int start = 0;
    while (!(rays[start].strand == under && rays[start].incoming)) ++start;
    links::Crossing c;
    for (int i = 0; i < 4; ++i) {
      const Ray& r = rays[(start + i) % 4];
      c.arcs[i] = r.incoming ? in_arc.at({r.strand, m}) : out_arc.at({r.strand, m});
    }
    c.sign = rays[(start + 3) % 4].incoming ? 1 : -1;
    t.crossings.push_back(c);
  }
  return t;
}

}  // namespace

links::FramedLinkDiagram assemble_bands(int vertices, const std::vector<EdgeSpec>& edges, const std::vector<Cap>& caps,
                                        const std::vector<bool>& borromean, Chirality chirality) {
  if (static_cast<int>(borromean.size()) != vertices) throw InvalidGraph("one tangle choice per vertex");
  std::vector<int> used(3 * vertices, 0);
  auto claim = [&](int v, int s) {
    if (v < 0 || v >= vertices || s < 0 || s > 2) throw InvalidGraph("slot out of range");
    if (used[3 * v + s]++) throw InvalidGraph("slot used twice");
  };
  std::vector<Strand> strands;
  int band = 0;
  for (const auto& e : edges) {
    claim(e[0], e[1]);
    claim(e[2], e[3]);
    strands.push_back({exit_x(e[0], e[1]), entry_x(e[2], e[3]), band});
    strands.push_back({exit_x(e[2], e[3]), entry_x(e[0], e[1]), band});
    ++band;
  }
  for (const auto& c : caps) {
    claim(c[0], c[1]);
    strands.push_back({exit_x(c[0], c[1]), entry_x(c[0], c[1]), band++});
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) throw InvalidGraph("every slot needs an edge or a cap");

  const Tangle bor = chirality == Chirality::Standard ? links::fixtures::borromean_tangle()
                                                       : links::fixtures::borromean_tangle_mirror();
  const Tangle triv = links::fixtures::trivial_tangle();
  Tangle all;
  for (int v = 0; v < vertices; ++v) all = links::juxtapose(all, borromean[v] ? bor : triv);
  all = links::juxtapose(all, band_tangle(strands));

  // Vertex boundary 6v + 2s is where slot s's strand leaves the vertex, 6v +
  // 2s + 1 where it comes back; band strand k has boundary 2k (start), 2k + 1.
  const std::size_t base = 6 * static_cast<std::size_t>(vertices);
  auto slot_of = [](long x) { return std::pair<int, int>{static_cast<int>(x / 100), 2 - static_cast<int>((x % 100) / 30)}; };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < strands.size(); ++k) {
    const auto [v1, s1] = slot_of(strands[k].from);
    const auto [v2, s2] = slot_of(strands[k].to);
    pairs.emplace_back(6 * v1 + 2 * s1, base + 2 * k);
    pairs.emplace_back(base + 2 * k + 1, 6 * v2 + 2 * s2 + 1);
  }
  return links::close(links::join(all, pairs));
}

links::LinkCombination beta(const TrivalentGraph& g, Chirality chirality) {
  const int nv = g.vertex_count();
  const auto edges = g.edges();
  links::LinkCombination out;
  for (std::uint64_t mask = (1ULL << nv); mask-- > 0;) {
    std::vector<bool> bor(nv);
    int trivial = 0;
    for (int v = 0; v < nv; ++v) {
      bor[v] = (mask >> v) & 1;
      trivial += bor[v] ? 0 : 1;
    }
    out.add(algebra::sign_power(trivial), assemble_bands(nv, edges, {}, bor, chirality));
  }
  return out;
}

links::LinkCombination beta_tilde(const TrivalentGraph& g, Chirality chirality) {
  const links::LinkCombination plain = beta(g, chirality);
  links::LinkCombination out;
  for (const auto& [c, link] : plain.terms()) {
    out.add(c, links::fixtures::with_framings(link, std::vector<int>(link.size(), 1)));
  }
  return out;
}

links::FramedLinkDiagram beta_four_component_link(Chirality chirality) {
  auto link = assemble_bands(2, {{0, 0, 1, 2}, {0, 1, 1, 1}}, {{0, 2}, {1, 0}}, {true, true}, chirality);
  link.framings.assign(link.size(), 1);
  return link;
}

}  // namespace zhs::diagrams
