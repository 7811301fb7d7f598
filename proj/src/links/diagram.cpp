#include "zhs/links/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace zhs::links {

namespace {

int max_arc(const FramedLinkDiagram& link) {
  int m = 0;
  for (const auto& c : link.crossings)
    for (int a : c.arcs) m = std::max(m, a);
  for (const auto& comp : link.components)
    for (int a : comp) m = std::max(m, a);
  return m;
}

class UnionFind {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_.emplace(x, x);
      return x;
    }
    if (it->second == x) return x;
    int root = find(it->second);
    parent_[x] = root;
    return root;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::unordered_map<int, int> parent_;
};

std::vector<int> first_arcs(const FramedLinkDiagram& link) {
  std::vector<int> seeds;
  seeds.reserve(link.components.size());
  for (const auto& comp : link.components) seeds.push_back(comp.front());
  return seeds;
}

std::vector<int> all_arcs_of(const FramedLinkDiagram& link) {
  std::vector<int> arcs;
  for (const auto& comp : link.components) arcs.insert(arcs.end(), comp.begin(), comp.end());
  return arcs;
}

}  // namespace

std::optional<std::string> validate(const FramedLinkDiagram& link) {
  if (link.framings.size() != link.components.size()) {
    return "framings count " + std::to_string(link.framings.size()) + " differs from component count " +
           std::to_string(link.components.size());
  }
  std::map<int, std::pair<int, int>> where;  // arc -> (component, position)
  for (std::size_t p = 0; p < link.components.size(); ++p) {
    const auto& comp = link.components[p];
    if (comp.empty()) return "component " + std::to_string(p) + " has no arcs";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i] <= 0) return "arc ids must be positive";
      auto [it, fresh] = where.emplace(comp[i], std::make_pair(static_cast<int>(p), static_cast<int>(i)));
      if (!fresh) return "arc " + std::to_string(comp[i]) + " listed in more than one component position";
    }
  }
  std::map<int, int> uses, heads, tails;
  for (std::size_t k = 0; k < link.crossings.size(); ++k) {
    const auto& c = link.crossings[k];
    if (c.sign != 1 && c.sign != -1) return "crossing " + std::to_string(k) + " has sign other than +-1";
    for (int a : c.arcs) {
      if (!where.count(a)) return "arc " + std::to_string(a) + " of crossing " + std::to_string(k) + " is in no component";
      if (++uses[a] > 2) return "arc " + std::to_string(a) + " used more than twice";
    }
    ++heads[c.under_in()];
    ++heads[c.over_in()];
    ++tails[c.under_out()];
    ++tails[c.over_out()];
  }
  for (const auto& [arc, pos] : where) {
    const int u = uses.count(arc) ? uses[arc] : 0;
    const auto& comp = link.components[pos.first];
    if (u == 0) {
      if (comp.size() != 1) return "arc " + std::to_string(arc) + " appears in no crossing";
      continue;
    }
    if (u != 2) return "arc " + std::to_string(arc) + " used " + std::to_string(u) + " times";
    if (heads[arc] != 1 || tails[arc] != 1) {
      return "arc " + std::to_string(arc) + " is not entered and left exactly once";
    }
  }
  auto consecutive = [&](int in, int out) {
    const auto& [p, i] = where.at(in);
    const auto& [r, j] = where.at(out);
    const int len = static_cast<int>(link.components[p].size());
    return p == r && (i + 1) % len == j;
  };
  for (std::size_t k = 0; k < link.crossings.size(); ++k) {
    const auto& c = link.crossings[k];
    if (!consecutive(c.under_in(), c.under_out()) || !consecutive(c.over_in(), c.over_out())) {
      return "orientation along a component is inconsistent at crossing " + std::to_string(k);
    }
  }
  return std::nullopt;
}

void require_valid(const FramedLinkDiagram& link) {
  if (auto err = validate(link)) throw InvalidDiagram(*err);
}

std::vector<int> component_of_arcs(const FramedLinkDiagram& link) {
  std::vector<int> owner(static_cast<std::size_t>(max_arc(link)) + 1, -1);
  for (std::size_t p = 0; p < link.components.size(); ++p)
    for (int a : link.components[p]) owner[a] = static_cast<int>(p);
  return owner;
}

LinkingMatrix linking_matrix(const FramedLinkDiagram& link) {
  const std::size_t mu = link.size();
  LinkingMatrix m(mu, std::vector<int>(mu, 0));
  const auto owner = component_of_arcs(link);
  for (const auto& c : link.crossings) {
    const int p = owner[c.under_in()];
    const int r = owner[c.over_in()];
    if (p == r) continue;
    m[p][r] += c.sign;
    m[r][p] += c.sign;
  }
  for (std::size_t p = 0; p < mu; ++p) {
    for (std::size_t r = 0; r < mu; ++r) {
      if (p == r) continue;
      if (m[p][r] % 2 != 0) throw InvalidDiagram("odd signed crossing count between two components");
      m[p][r] /= 2;
    }
    m[p][p] = link.framings.at(p);
  }
  return m;
}

bool is_algebraically_split(const FramedLinkDiagram& link) {
  const auto m = linking_matrix(link);
  for (std::size_t p = 0; p < m.size(); ++p)
    for (std::size_t r = 0; r < m.size(); ++r)
      if (p != r && m[p][r] != 0) return false;
  return true;
}

int writhe(const FramedLinkDiagram& link) {
  int w = 0;
  for (const auto& c : link.crossings) w += c.sign;
  return w;
}

int self_writhe(const FramedLinkDiagram& link, std::size_t p) {
  const auto owner = component_of_arcs(link);
  int w = 0;
  for (const auto& c : link.crossings) {
    if (owner[c.under_in()] == static_cast<int>(p) && owner[c.over_in()] == static_cast<int>(p)) w += c.sign;
  }
  return w;
}

namespace detail {

FramedLinkDiagram rebuild(const std::vector<Crossing>& crossings,
                          const std::vector<std::pair<int, int>>& identifications,
                          const std::vector<int>& seeds,
                          const std::vector<int>& all_arcs) {
  UnionFind uf;
  for (const auto& [a, b] : identifications) uf.unite(a, b);

  std::vector<Crossing> cs = crossings;
  for (auto& c : cs)
    for (int& a : c.arcs) a = uf.find(a);

  std::map<int, int> next;
  for (const auto& c : cs) {
    if (!next.emplace(c.under_in(), c.under_out()).second || !next.emplace(c.over_in(), c.over_out()).second) {
      throw InvalidDiagram("arc entered twice while rebuilding diagram");
    }
  }

  std::set<int> visited;
  std::vector<std::vector<int>> comps;
  auto trace = [&](int start) {
    start = uf.find(start);
    if (visited.count(start)) return;
    std::vector<int> seq;
    int x = start;
    do {
      if (!visited.insert(x).second) throw InvalidDiagram("arc traversal does not close up");
      seq.push_back(x);
      auto it = next.find(x);
      if (it == next.end()) break;  // crossingless loop
      x = it->second;
    } while (x != start);
    comps.push_back(std::move(seq));
  };
  for (int s : seeds) trace(s);
  for (const auto& [from, to] : next) trace(from);
  std::vector<int> loose;
  for (int a : all_arcs) loose.push_back(uf.find(a));
  std::sort(loose.begin(), loose.end());
  for (int a : loose) trace(a);

  std::map<int, int> relabel;
  FramedLinkDiagram out;
  for (const auto& seq : comps) {
    std::vector<int> comp;
    for (int a : seq) {
      const int id = static_cast<int>(relabel.size()) + 1;
      relabel.emplace(a, id);
      comp.push_back(id);
    }
    out.components.push_back(std::move(comp));
  }
  for (auto c : cs) {
    for (int& a : c.arcs) a = relabel.at(a);
    out.crossings.push_back(c);
  }
  return out;
}

}  // namespace detail

FramedLinkDiagram sublink(const FramedLinkDiagram& link, const std::vector<std::size_t>& keep) {
  const auto owner = component_of_arcs(link);
  std::vector<char> kept(link.size(), 0);
  std::vector<int> seeds, arcs;
  std::vector<int> framings;
  for (std::size_t p : keep) {
    if (p >= link.size()) throw std::out_of_range("sublink component index");
    if (kept[p]) throw std::invalid_argument("sublink component listed twice");
    kept[p] = 1;
    seeds.push_back(link.components[p].front());
    arcs.insert(arcs.end(), link.components[p].begin(), link.components[p].end());
    framings.push_back(link.framings[p]);
  }
  std::vector<Crossing> cs;
  std::vector<std::pair<int, int>> ids;
  for (const auto& c : link.crossings) {
    const bool under = kept[owner[c.under_in()]];
    const bool over = kept[owner[c.over_in()]];
    if (under && over) {
      cs.push_back(c);
    } else if (under) {
      ids.emplace_back(c.under_in(), c.under_out());
    } else if (over) {
      ids.emplace_back(c.over_in(), c.over_out());
    }
  }
  FramedLinkDiagram out = detail::rebuild(cs, ids, seeds, arcs);
  out.framings = std::move(framings);
  return out;
}

FramedLinkDiagram sublink_mask(const FramedLinkDiagram& link, std::uint64_t mask) {
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < link.size(); ++p)
    if (mask >> p & 1u) keep.push_back(p);
  return sublink(link, keep);
}

FramedLinkDiagram cable(const FramedLinkDiagram& link, const std::vector<int>& copies) {
  if (copies.size() != link.size()) throw std::invalid_argument("cable: copy vector length differs from component count");
  std::vector<std::size_t> keep;
  std::vector<int> j;
  for (std::size_t p = 0; p < link.size(); ++p) {
    if (copies[p] < 0) throw std::invalid_argument("cable: negative copy count");
    if (copies[p] > 0) {
      keep.push_back(p);
      j.push_back(copies[p]);
    }
  }
  const FramedLinkDiagram base = sublink(link, keep);
  const auto owner = component_of_arcs(base);
  const int n_arcs = max_arc(base);

  int next_id = 0;
  auto fresh = [&] { return ++next_id; };
  // head[a][k]: id of copy k where arc a enters its crossing; tail[a][k]: where it leaves.
  std::vector<std::vector<int>> head(n_arcs + 1), tail(n_arcs + 1);
  for (int a = 1; a <= n_arcs; ++a) {
    const int jp = j[owner[a]];
    for (int k = 0; k < jp; ++k) {
      const int id = fresh();
      head[a].push_back(id);
      tail[a].push_back(id);
    }
  }

  std::vector<Crossing> cs;
  std::vector<std::pair<int, int>> ids;

  // Twist region on the first arc of each component with crossings.
  for (std::size_t p = 0; p < base.size(); ++p) {
    const int jp = j[p];
    const int w = self_writhe(base, p);
    if (jp < 2 || w == 0) continue;
    const int a = base.components[p].front();
    for (int k = 0; k < jp; ++k) tail[a][k] = fresh();
    std::vector<int> cur = tail[a];  // position i holds copy i initially
    const bool positive = w < 0;
    for (int twist = 0; twist < std::abs(w); ++twist) {
      for (int rep = 0; rep < jp; ++rep) {
        for (int i = 0; i + 1 < jp; ++i) {
          const int s_in = cur[i], t_in = cur[i + 1];
          const int s_out = fresh(), t_out = fresh();
          if (positive) {
            cs.push_back(Crossing{{s_in, t_out, s_out, t_in}, 1});
          } else {
            cs.push_back(Crossing{{t_in, s_in, t_out, s_out}, -1});
          }
          cur[i] = t_out;
          cur[i + 1] = s_out;
        }
      }
    }
    // A full twist is a pure braid, so position k ends on copy k again.
    for (int k = 0; k < jp; ++k) ids.emplace_back(cur[k], head[a][k]);
  }

  for (const auto& c : base.crossings) {
    const int pu = owner[c.under_in()], po = owner[c.over_in()];
    const int ju = j[pu], jo = j[po];
    // seg(strand copy, position) along the under copies (jo crossings each) and
    // the over copies (ju crossings each).
    auto segments = [&](int in_arc, int out_arc, int copies_here, int crossings_each) {
      std::vector<std::vector<int>> seg(copies_here, std::vector<int>(crossings_each + 1));
      for (int k = 0; k < copies_here; ++k) {
        seg[k][0] = head[in_arc][k];
        seg[k][crossings_each] = tail[out_arc][k];
        for (int t = 1; t < crossings_each; ++t) seg[k][t] = fresh();
      }
      return seg;
    };
    const auto useg = segments(c.under_in(), c.under_out(), ju, jo);
    const auto oseg = segments(c.over_in(), c.over_out(), jo, ju);
    for (int k = 0; k < ju; ++k) {
      for (int m = 0; m < jo; ++m) {
        const int tu = c.sign > 0 ? m : jo - 1 - m;
        const int to = c.sign > 0 ? ju - 1 - k : k;
        const int u_in = useg[k][tu], u_out = useg[k][tu + 1];
        const int o_in = oseg[m][to], o_out = oseg[m][to + 1];
        if (c.sign > 0) {
          cs.push_back(Crossing{{u_in, o_out, u_out, o_in}, 1});
        } else {
          cs.push_back(Crossing{{u_in, o_in, u_out, o_out}, -1});
        }
      }
    }
  }

  std::vector<int> seeds, arcs, framings;
  for (std::size_t p = 0; p < base.size(); ++p) {
    const int a = base.components[p].front();
    for (int k = 0; k < j[p]; ++k) {
      seeds.push_back(head[a][k]);
      framings.push_back(base.framings[p]);
    }
    for (int b : base.components[p]) {
      for (int k = 0; k < j[p]; ++k) {
        arcs.push_back(head[b][k]);
        arcs.push_back(tail[b][k]);
      }
    }
  }
  FramedLinkDiagram out = detail::rebuild(cs, ids, seeds, arcs);
  if (out.size() != seeds.size()) throw InvalidDiagram("cable produced an unexpected component count");
  out.framings = std::move(framings);
  return out;
}

FramedLinkDiagram disjoint_union(const FramedLinkDiagram& a, const FramedLinkDiagram& b) {
  const int shift = max_arc(a);
  FramedLinkDiagram out = a;
  for (auto c : b.crossings) {
    for (int& x : c.arcs) x += shift;
    out.crossings.push_back(c);
  }
  for (auto comp : b.components) {
    for (int& x : comp) x += shift;
    out.components.push_back(std::move(comp));
  }
  out.framings.insert(out.framings.end(), b.framings.begin(), b.framings.end());
  return compacted(out);
}

FramedLinkDiagram crossing_change(const FramedLinkDiagram& link, std::size_t index) {
  FramedLinkDiagram out = link;
  Crossing& c = out.crossings.at(index);
  const auto [a, b, cc, d] = c.arcs;
  if (c.sign > 0) {
    c.arcs = {d, a, b, cc};
  } else {
    c.arcs = {b, cc, d, a};
  }
  c.sign = -c.sign;
  return out;
}

FramedLinkDiagram oriented_smoothing(const FramedLinkDiagram& link, std::size_t index) {
  const Crossing& c = link.crossings.at(index);
  std::vector<Crossing> cs;
  for (std::size_t k = 0; k < link.crossings.size(); ++k)
    if (k != index) cs.push_back(link.crossings[k]);
  std::vector<std::pair<int, int>> ids;
  if (c.sign > 0) {
    ids = {{c.arcs[0], c.arcs[1]}, {c.arcs[3], c.arcs[2]}};
  } else {
    ids = {{c.arcs[0], c.arcs[3]}, {c.arcs[1], c.arcs[2]}};
  }
  FramedLinkDiagram out = detail::rebuild(cs, ids, first_arcs(link), all_arcs_of(link));
  out.framings.assign(out.size(), 0);
  return out;
}

FramedLinkDiagram mirror(const FramedLinkDiagram& link) {
  FramedLinkDiagram out = link;
  for (std::size_t k = 0; k < out.crossings.size(); ++k) out = crossing_change(out, k);
  for (int& f : out.framings) f = -f;
  return out;
}

FramedLinkDiagram compacted(const FramedLinkDiagram& link) {
  FramedLinkDiagram out = detail::rebuild(link.crossings, {}, first_arcs(link), all_arcs_of(link));
  if (out.size() != link.size()) throw InvalidDiagram("component list does not match crossing traversal");
  out.framings = link.framings;
  return out;
}

std::string canonical_key(const FramedLinkDiagram& link) {
  const FramedLinkDiagram c = compacted(link);
  std::ostringstream os;
  for (const auto& comp : c.components) os << comp.size() << ',';
  os << '|';
  for (int f : c.framings) os << f << ',';
  os << '|';
  std::vector<std::array<int, 5>> rows;
  for (const auto& x : c.crossings) rows.push_back({x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3], x.sign});
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) os << r[0] << ' ' << r[1] << ' ' << r[2] << ' ' << r[3] << ' ' << r[4] << ';';
  return os.str();
}

}  // namespace zhs::links
