#include "zhs/links/fixtures.hpp"

#include <stdexcept>

namespace zhs::links::fixtures {

FramedLinkDiagram closed_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("closed_braid needs at least one strand");
  int next_id = 0;
  std::vector<int> bottom(strands), cur(strands);
  for (int p = 0; p < strands; ++p) bottom[p] = cur[p] = ++next_id;
  std::vector<Crossing> cs;
  for (int g : word) {
    const int i = std::abs(g);
    if (g == 0 || i >= strands) throw std::invalid_argument("braid generator out of range");
    const int l = i - 1, r = i;
    const int l_in = cur[l], r_in = cur[r];
    const int l_out = ++next_id, r_out = ++next_id;
    if (g > 0) {
      cs.push_back(Crossing{{r_in, r_out, l_out, l_in}, 1});
    } else {
      cs.push_back(Crossing{{l_in, r_in, r_out, l_out}, -1});
    }
    cur[l] = l_out;
    cur[r] = r_out;
  }
  std::vector<std::pair<int, int>> ids;
  std::vector<int> arcs;
  for (int p = 0; p < strands; ++p) ids.emplace_back(cur[p], bottom[p]);
  for (int a = 1; a <= next_id; ++a) arcs.push_back(a);
  FramedLinkDiagram out = detail::rebuild(cs, ids, bottom, arcs);
  out.framings.assign(out.size(), 0);
  return out;
}

FramedLinkDiagram with_framings(FramedLinkDiagram link, const std::vector<int>& framings) {
  if (framings.size() != link.size()) throw std::invalid_argument("framing count differs from component count");
  link.framings = framings;
  return link;
}

FramedLinkDiagram unknot(int framing) {
  FramedLinkDiagram l;
  l.components = {{1}};
  l.framings = {framing};
  return l;
}

FramedLinkDiagram unlink(int components) {
  FramedLinkDiagram l;
  for (int p = 0; p < components; ++p) l.components.push_back({p + 1});
  l.framings.assign(components, 0);
  return l;
}

FramedLinkDiagram hopf() { return closed_braid(2, {1, 1}); }

FramedLinkDiagram trefoil_right(int framing) { return with_framings(closed_braid(2, {1, 1, 1}), {framing}); }

FramedLinkDiagram trefoil_left(int framing) { return with_framings(closed_braid(2, {-1, -1, -1}), {framing}); }

FramedLinkDiagram figure_eight(int framing) { return with_framings(closed_braid(3, {1, -2, 1, -2}), {framing}); }

FramedLinkDiagram borromean() {
  FramedLinkDiagram l;
  l.crossings = {
      {{8, 1, 5, 4}, 1},  {{6, 2, 7, 3}, -1},  {{1, 12, 2, 11}, 1},
      {{3, 9, 4, 10}, -1}, {{12, 8, 9, 7}, 1}, {{10, 5, 11, 6}, -1},
  };
  l.components = {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}};
  l.framings = {0, 0, 0};
  return l;
}

FramedLinkDiagram borromean_mirror() {
  FramedLinkDiagram l = borromean();
  for (std::size_t k = 0; k < l.crossings.size(); ++k) l = crossing_change(l, k);
  return l;
}

namespace {

void layout_boundary(Tangle& t) {
  t.boundary.clear();
  for (std::size_t s = 0; s < 3; ++s) {
    t.boundary.push_back({s, true});
    t.boundary.push_back({s, false});
  }
}

}  // namespace

Tangle borromean_tangle() {
  Tangle t;
  t.crossings = {
      {{8, 13, 5, 4}, 1},  {{6, 2, 7, 3}, -1},  {{1, 15, 2, 11}, 1},
      {{3, 9, 4, 10}, -1}, {{12, 14, 9, 7}, 1}, {{10, 5, 11, 6}, -1},
  };
  // slot order A, C, B
  t.strands = {{1, 2, 3, 4, 13}, {12, 9, 10, 11, 15}, {8, 5, 6, 7, 14}};
  layout_boundary(t);
  return t;
}

Tangle borromean_tangle_mirror() {
  Tangle t = borromean_tangle();
  for (auto& c : t.crossings) {
    const auto [a, b, cc, d] = c.arcs;
    c.arcs = c.sign > 0 ? std::array<int, 4>{d, a, b, cc} : std::array<int, 4>{b, cc, d, a};
    c.sign = -c.sign;
  }
  return t;
}

Tangle trivial_tangle() {
  Tangle t;
  t.strands = {{1}, {2}, {3}};
  layout_boundary(t);
  return t;
}

}  // namespace zhs::links::fixtures
