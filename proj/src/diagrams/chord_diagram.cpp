#include "zhs/diagrams/chord_diagram.hpp"

#include <algorithm>
#include <functional>

#include "zhs/diagrams/sl2.hpp"

namespace zhs::diagrams {

int ChordDiagram::grade() const {
  const int twice = leg_count() + trivalent;
  if (twice % 2 != 0) throw InvalidGraph("odd vertex count: grade is not an integer");
  return twice / 2;
}

bool ChordDiagram::has_bare_loop() const {
  return std::any_of(loops.begin(), loops.end(), [](const auto& l) { return l.empty(); });
}

void require_valid(const ChordDiagram& d) {
  if (d.trivalent < 0 || d.leg_count() < 0) throw InvalidGraph("mate array shorter than the vertex half-edges");
  const int n = static_cast<int>(d.mate.size());
  for (int h = 0; h < n; ++h) {
    const int m = d.mate[h];
    if (m < 0 || m >= n || m == h || d.mate[m] != h) throw InvalidGraph("mate array is not an involution");
  }
  std::vector<int> seen(d.leg_count(), 0);
  for (const auto& loop : d.loops)
    for (int leg : loop) {
      if (leg < 0 || leg >= d.leg_count()) throw InvalidGraph("loop refers to a missing leg");
      ++seen[leg];
    }
  for (int s : seen)
    if (s != 1) throw InvalidGraph("every leg must sit on exactly one loop");
}

std::string structural_key(const ChordDiagram& d) {
  std::string out = std::to_string(d.trivalent) + "|";
  for (int m : d.mate) out += std::to_string(m) + ",";
  out += "|";
  for (const auto& loop : d.loops) {
    out += "(";
    for (int leg : loop) out += std::to_string(leg) + ",";
    out += ")";
  }
  return out;
}

ChordDiagram as_diagram(const TrivalentGraph& g) {
  ChordDiagram d;
  d.trivalent = g.vertex_count();
  d.mate = g.mates();
  return d;
}

ChordDiagram bare_loop() {
  ChordDiagram d;
  d.loops.push_back({});
  return d;
}

ChordDiagram empty_diagram() { return {}; }

namespace {

// Half-edge relabelling that places b's vertices after a's and b's legs after
// a's legs.
struct Merged {
  ChordDiagram d;
  std::function<int(int)> from_a, from_b;
  int leg_shift = 0;
};

Merged merge(const ChordDiagram& a, const ChordDiagram& b) {
  Merged m;
  const int ta = a.trivalent, tb = b.trivalent, la = a.leg_count();
  m.d.trivalent = ta + tb;
  m.leg_shift = la;
  m.from_a = [=](int h) { return h < 3 * ta ? h : h + 3 * tb; };
  m.from_b = [=](int h) { return h < 3 * tb ? h + 3 * ta : h + 3 * ta + la; };
  m.d.mate.assign(a.mate.size() + b.mate.size(), -1);
  for (std::size_t h = 0; h < a.mate.size(); ++h) m.d.mate[m.from_a(static_cast<int>(h))] = m.from_a(a.mate[h]);
  for (std::size_t h = 0; h < b.mate.size(); ++h) m.d.mate[m.from_b(static_cast<int>(h))] = m.from_b(b.mate[h]);
  return m;
}

}  // namespace

ChordDiagram disjoint_union(const ChordDiagram& a, const ChordDiagram& b) {
  Merged m = merge(a, b);
  m.d.loops = a.loops;
  for (auto loop : b.loops) {
    for (int& leg : loop) leg += m.leg_shift;
    m.d.loops.push_back(std::move(loop));
  }
  return m.d;
}

ChordDiagram connect_sum(const ChordDiagram& a, int la, const ChordDiagram& b, int lb) {
  if (la < 0 || la >= static_cast<int>(a.loops.size()) || lb < 0 || lb >= static_cast<int>(b.loops.size())) {
    throw std::out_of_range("connect_sum: no such loop");
  }
  Merged m = merge(a, b);
  m.d.loops = a.loops;
  for (int i = 0; i < static_cast<int>(b.loops.size()); ++i) {
    std::vector<int> loop = b.loops[i];
    for (int& leg : loop) leg += m.leg_shift;
    if (i == lb) {
      m.d.loops[la].insert(m.d.loops[la].end(), loop.begin(), loop.end());
    } else {
      m.d.loops.push_back(std::move(loop));
    }
  }
  return m.d;
}

ChordDiagram eta(const TrivalentGraph& g) {
  ChordDiagram d;
  d.trivalent = g.vertex_count();
  const auto edges = g.edges();
  d.mate.assign(3 * d.trivalent + 2 * edges.size(), -1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int h1 = 3 * edges[k][0] + edges[k][1], h2 = 3 * edges[k][2] + edges[k][3];
    const int l1 = d.leg_half_edge(static_cast<int>(2 * k)), l2 = l1 + 1;
    d.mate[h1] = l1;
    d.mate[l1] = h1;
    d.mate[h2] = l2;
    d.mate[l2] = h2;
    d.loops.push_back({static_cast<int>(2 * k), static_cast<int>(2 * k + 1)});
  }
  return d;
}

void DiagramCombination::add(const Rational& c, const ChordDiagram& d) {
  if (c == 0) return;
  const std::string key = structural_key(d);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (keys_[i] != key) continue;
    terms_[i].first += c;
    if (terms_[i].first == 0) {
      terms_.erase(terms_.begin() + static_cast<long>(i));
      keys_.erase(keys_.begin() + static_cast<long>(i));
    }
    return;
  }
  terms_.emplace_back(c, d);
  keys_.push_back(key);
}

DiagramCombination& DiagramCombination::operator+=(const DiagramCombination& other) {
  for (const auto& [c, d] : other.terms_) add(c, d);
  return *this;
}

DiagramCombination& DiagramCombination::operator-=(const DiagramCombination& other) {
  for (const auto& [c, d] : other.terms_) add(-c, d);
  return *this;
}

DiagramCombination& DiagramCombination::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    keys_.clear();
  }
  for (auto& t : terms_) t.first *= s;
  return *this;
}

bool operator==(const DiagramCombination& a, const DiagramCombination& b) {
  auto sorted = [](const DiagramCombination& c) {
    std::vector<std::pair<std::string, Rational>> v;
    for (std::size_t i = 0; i < c.terms_.size(); ++i) v.emplace_back(c.keys_[i], c.terms_[i].first);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };
  return sorted(a) == sorted(b);
}

DiagramCombination epsilon(const ChordDiagram& d, int loop) {
  if (loop < 0 || loop >= static_cast<int>(d.loops.size())) throw std::out_of_range("epsilon: no such loop");
  DiagramCombination out;
  if (!d.loops[loop].empty()) return out;
  ChordDiagram r = d;
  r.loops.erase(r.loops.begin() + loop);
  out.add(1, r);
  return out;
}

DiagramCombination epsilon_tilde(const ChordDiagram& d, int loop) {
  if (loop < 0 || loop >= static_cast<int>(d.loops.size())) throw std::out_of_range("epsilon_tilde: no such loop");
  DiagramCombination out;
  if (!d.loops[loop].empty()) out.add(1, d);
  return out;
}

namespace {

template <class Op>
DiagramCombination apply_linear(const DiagramCombination& c, Op op) {
  DiagramCombination out;
  for (const auto& [coef, d] : c.terms()) {
    DiagramCombination r = op(d);
    r *= coef;
    out += r;
  }
  return out;
}

}  // namespace

DiagramCombination epsilon(const DiagramCombination& c, int loop) {
  return apply_linear(c, [loop](const ChordDiagram& d) { return epsilon(d, loop); });
}

DiagramCombination epsilon_tilde(const DiagramCombination& c, int loop) {
  return apply_linear(c, [loop](const ChordDiagram& d) { return epsilon_tilde(d, loop); });
}

DiagramCombination project_P(const DiagramCombination& c) {
  DiagramCombination out;
  for (const auto& [coef, d] : c.terms())
    if (!d.has_bare_loop()) out.add(coef, d);
  return out;
}

Rational min_grade_bound(int mu) {
  if (mu < 1) throw std::invalid_argument("min_grade_bound: mu must be positive");
  return Rational(mu) + algebra::frac(mu, 3);
}

namespace {

// Representative of one combinatorial type: legs[v] legs on vertex v, the
// remaining vertex half-edges paired in order, and per_loop[i] consecutive
// legs on loop i.
ChordDiagram representative(const std::vector<int>& legs_at, const std::vector<int>& per_loop) {
  ChordDiagram d;
  d.trivalent = static_cast<int>(legs_at.size());
  int leg_total = 0;
  for (int c : legs_at) leg_total += c;
  d.mate.assign(3 * d.trivalent + leg_total, -1);
  int leg = 0;
  std::vector<int> free_half_edges;
  for (int v = 0; v < d.trivalent; ++v) {
    for (int s = 0; s < 3; ++s) {
      const int h = 3 * v + s;
      if (s < legs_at[v]) {
        const int lh = d.leg_half_edge(leg++);
        d.mate[h] = lh;
        d.mate[lh] = h;
      } else {
        free_half_edges.push_back(h);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < free_half_edges.size(); i += 2) {
    d.mate[free_half_edges[i]] = free_half_edges[i + 1];
    d.mate[free_half_edges[i + 1]] = free_half_edges[i];
  }
  leg = 0;
  for (int count : per_loop) {
    std::vector<int> loop;
    for (int k = 0; k < count; ++k) loop.push_back(leg++);
    d.loops.push_back(std::move(loop));
  }
  return d;
}

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 0) {
      if (left == 0) f(cur);
      return;
    }
    for (int x = 1; x <= left - (slots - 1); ++x) {
      cur.push_back(x);
      rec(left - x, slots - 1);
      cur.pop_back();
    }
  };
  rec(total, parts);
}

}  // namespace

GradeBoundReport check_grade_bound(int max_loops, int max_grade) {
  GradeBoundReport report;
  for (int t = 1; t <= 2 * max_grade; ++t) {
    // Nonincreasing leg counts per vertex, each 0..3.
    std::vector<int> legs_at;
    std::function<void(int, int)> rec = [&](int v, int cap) {
      if (v == t) {
        int legs = 0, free = 0;
        for (int c : legs_at) legs += c, free += 3 - c;
        if ((legs + t) % 2 != 0 || (legs + t) / 2 > max_grade || free % 2 != 0) return;
        const int grade = (legs + t) / 2;
        for (int mu = 1; mu <= std::min(max_loops, legs); ++mu) {
          for_each_composition(legs, mu, [&](const std::vector<int>& per_loop) {
            ++report.types;
            const bool two_each = std::all_of(per_loop.begin(), per_loop.end(), [](int c) { return c >= 2; });
            const ChordDiagram d = representative(legs_at, per_loop);
            if (two_each) {
              ++report.two_leg_types;
              if (Rational(grade) < min_grade_bound(mu)) {
                report.violations.push_back("grade " + std::to_string(grade) + " below bound for " +
                                            structural_key(d));
              }
            } else {
              ++report.one_leg_types;
              if (sl2_weight(d) != 0) report.violations.push_back("nonzero weight with a one-leg loop: " + structural_key(d));
            }
          });
        }
        return;
      }
      for (int c = cap; c >= 0; --c) {
        legs_at.push_back(c);
        rec(v + 1, c);
        legs_at.pop_back();
      }
    };
    rec(0, 3);
  }
  return report;
}

}  // namespace zhs::diagrams
