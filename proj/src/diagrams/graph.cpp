#include "zhs/diagrams/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>

namespace zhs::diagrams {

TrivalentGraph::TrivalentGraph(int vertices, const std::vector<EdgeSpec>& edges) {
  if (vertices < 0) throw InvalidGraph("negative vertex count");
  mate_.assign(3 * vertices, -1);
  for (const auto& e : edges) {
    for (int k : {0, 2}) {
      if (e[k] < 0 || e[k] >= vertices || e[k + 1] < 0 || e[k + 1] > 2) {
        throw InvalidGraph("edge endpoint out of range");
      }
    }
    const int h1 = 3 * e[0] + e[1], h2 = 3 * e[2] + e[3];
    if (h1 == h2) throw InvalidGraph("edge joins a half-edge to itself");
    if (mate_[h1] != -1 || mate_[h2] != -1) throw InvalidGraph("half-edge used twice");
    mate_[h1] = h2;
    mate_[h2] = h1;
  }
  for (int m : mate_)
    if (m == -1) throw InvalidGraph("vertex with fewer than three edges");
}

TrivalentGraph TrivalentGraph::from_mates(std::vector<int> mate) {
  if (mate.size() % 3 != 0) throw InvalidGraph("half-edge count must be a multiple of 3");
  for (std::size_t h = 0; h < mate.size(); ++h) {
    const int m = mate[h];
    if (m < 0 || static_cast<std::size_t>(m) >= mate.size() || static_cast<std::size_t>(m) == h ||
        mate[m] != static_cast<int>(h)) {
      throw InvalidGraph("mate array is not a fixed-point-free involution");
    }
  }
  TrivalentGraph g;
  g.mate_ = std::move(mate);
  return g;
}

std::vector<EdgeSpec> TrivalentGraph::edges() const {
  std::vector<EdgeSpec> out;
  for (int h = 0; h < static_cast<int>(mate_.size()); ++h) {
    const int m = mate_[h];
    if (h < m) out.push_back({h / 3, h % 3, m / 3, m % 3});
  }
  return out;
}

bool TrivalentGraph::is_self_loop(int edge_index) const {
  const auto e = edges().at(edge_index);
  return e[0] == e[2];
}

TrivalentGraph TrivalentGraph::flipped(int vertex) const {
  if (vertex < 0 || vertex >= vertex_count()) throw std::out_of_range("flipped: no such vertex");
  auto relabel = [vertex](int h) {
    if (h / 3 != vertex || h % 3 == 0) return h;
    return 3 * vertex + (3 - h % 3);
  };
  std::vector<int> mate(mate_.size());
  for (std::size_t h = 0; h < mate_.size(); ++h) mate[relabel(static_cast<int>(h))] = relabel(mate_[h]);
  return from_mates(std::move(mate));
}

TrivalentGraph disjoint_union(const TrivalentGraph& a, const TrivalentGraph& b) {
  std::vector<int> mate = a.mates();
  const int shift = static_cast<int>(mate.size());
  for (int m : b.mates()) mate.push_back(m + shift);
  return TrivalentGraph::from_mates(std::move(mate));
}

TrivalentGraph theta() { return TrivalentGraph(2, {{0, 0, 1, 2}, {0, 1, 1, 1}, {0, 2, 1, 0}}); }

namespace {

// Traversal code of the component containing h0, rooted at h0.
std::vector<int> rooted_code(const std::vector<int>& mate, int h0) {
  const int nv = static_cast<int>(mate.size() / 3);
  std::vector<int> label(nv, -1), rot(nv, 0), order;
  label[h0 / 3] = 0;
  rot[h0 / 3] = h0 % 3;
  order.push_back(h0 / 3);
  std::vector<int> code;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int k = 0; k < 3; ++k) {
      const int m = mate[3 * v + (rot[v] + k) % 3];
      const int w = m / 3;
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        rot[w] = m % 3;
        order.push_back(w);
      }
      code.push_back(label[w]);
      code.push_back((m % 3 - rot[w] + 3) % 3);
    }
  }
  return code;
}

std::vector<std::vector<int>> components(const std::vector<int>& mate) {
  const int nv = static_cast<int>(mate.size() / 3);
  std::vector<int> comp(nv, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int k = 0; k < 3; ++k) {
        const int w = mate[3 * v + k] / 3;
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::string canonical_code(const TrivalentGraph& g) {
  std::vector<std::vector<int>> codes;
  for (const auto& members : components(g.mates())) {
    std::vector<int> best;
    for (int v : members)
      for (int s = 0; s < 3; ++s) {
        auto c = rooted_code(g.mates(), 3 * v + s);
        if (best.empty() || c < best) best = std::move(c);
      }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::string out = std::to_string(g.vertex_count()) + ":";
  for (const auto& c : codes) {
    out += '[';
    for (int x : c) out += std::to_string(x) + ',';
    out += ']';
  }
  return out;
}

bool isomorphic_brute_force(const TrivalentGraph& a, const TrivalentGraph& b) {
  const int nv = a.vertex_count();
  if (nv != b.vertex_count()) return false;
  std::vector<int> pi(nv, -1), rot(nv, 0);
  std::vector<char> used(nv, 0);
  auto image = [&](int h) { return 3 * pi[h / 3] + (h % 3 + rot[h / 3]) % 3; };
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == nv) return true;
    for (int w = 0; w < nv; ++w) {
      if (used[w]) continue;
      for (int r = 0; r < 3; ++r) {
        pi[v] = w;
        rot[v] = r;
        bool ok = true;
        for (int s = 0; s < 3 && ok; ++s) {
          const int h = 3 * v + s, m = a.mate(h);
          if (m / 3 <= v && b.mate(image(h)) != image(m)) ok = false;
        }
        if (ok) {
          used[w] = 1;
          if (extend(v + 1)) return true;
          used[w] = 0;
        }
      }
    }
    pi[v] = -1;
    return false;
  };
  return extend(0);
}

std::vector<TrivalentGraph> generate_graphs(int vertices) {
  if (vertices < 0 || vertices % 2 != 0) throw InvalidGraph("a trivalent graph has an even number of vertices");
  const int nh = 3 * vertices;
  std::vector<int> mate(nh, -1);
  std::set<std::string> seen;
  std::vector<TrivalentGraph> out;
  std::function<void()> rec = [&]() {
    int h = 0;
    while (h < nh && mate[h] != -1) ++h;
    if (h == nh) {
      TrivalentGraph g = TrivalentGraph::from_mates(mate);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
      return;
    }
    for (int m = h + 1; m < nh; ++m) {
      if (mate[m] != -1) continue;
      mate[h] = m;
      mate[m] = h;
      rec();
      mate[h] = mate[m] = -1;
    }
  };
  rec();
  return out;
}

nlohmann::json to_json(const TrivalentGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back(e);
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

TrivalentGraph graph_from_json(const nlohmann::json& j) {
  std::vector<EdgeSpec> edges;
  for (const auto& e : j.at("edges")) {
    if (e.size() != 4) throw InvalidGraph("edges must be [v, slot, v', slot']");
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
  }
  return TrivalentGraph(j.at("vertices").get<int>(), edges);
}

TrivalentGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  return graph_from_json(nlohmann::json::parse(in));
}

void GraphCombination::add(const Rational& c, const TrivalentGraph& g) {
  if (c == 0) return;
  const std::string code = canonical_code(g);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (codes_[i] != code) continue;
    terms_[i].first += c;
    if (terms_[i].first == 0) {
      terms_.erase(terms_.begin() + static_cast<long>(i));
      codes_.erase(codes_.begin() + static_cast<long>(i));
    }
    return;
  }
  terms_.emplace_back(c, g);
  codes_.push_back(code);
}

GraphCombination& GraphCombination::operator+=(const GraphCombination& other) {
  for (const auto& [c, g] : other.terms_) add(c, g);
  return *this;
}

GraphCombination& GraphCombination::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    codes_.clear();
  }
  for (auto& t : terms_) t.first *= s;
  return *this;
}

bool operator==(const GraphCombination& a, const GraphCombination& b) {
  auto sorted = [](const GraphCombination& c) {
    std::vector<std::pair<std::string, Rational>> v;
    for (std::size_t i = 0; i < c.terms_.size(); ++i) v.emplace_back(c.codes_[i], c.terms_[i].first);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };
  return sorted(a) == sorted(b);
}

GraphCombination as_relation(const TrivalentGraph& g, int vertex) {
  GraphCombination out(g);
  out.add(1, g.flipped(vertex));
  return out;
}

GraphCombination as_relation(const GraphCombination& c, int vertex) {
  GraphCombination out;
  for (const auto& [coef, g] : c.terms()) {
    GraphCombination r = as_relation(g, vertex);
    r *= coef;
    out += r;
  }
  return out;
}

GraphCombination ihx_relation(const TrivalentGraph& g, int edge_index) {
  const auto e = g.edges().at(edge_index);
  const int u = e[0], su = e[1], v = e[2], sv = e[3];
  if (u == v) throw InvalidGraph("ihx_relation: edge is a self-loop");

  // The four legs around the edge: a, b at u and c, d at v.
  const std::array<int, 4> leg = {3 * u + (su + 1) % 3, 3 * u + (su + 2) % 3, 3 * v + (sv + 1) % 3,
                                  3 * v + (sv + 2) % 3};
  auto leg_index = [&](int h) {
    for (int k = 0; k < 4; ++k)
      if (leg[k] == h) return k;
    return -1;
  };

  // Each pattern lists which leg sits at u slots 1, 2 and v slots 1, 2.
  auto build = [&](const std::array<int, 4>& pattern) {
    std::array<int, 4> pos{};
    const std::array<int, 4> slots = {3 * u + 1, 3 * u + 2, 3 * v + 1, 3 * v + 2};
    for (int k = 0; k < 4; ++k) pos[pattern[k]] = slots[k];
    std::vector<int> mate = g.mates();
    auto at_edge = [&](int h) { return h / 3 == u || h / 3 == v; };
    for (int h = 0; h < static_cast<int>(mate.size()); ++h)
      if (at_edge(h)) mate[h] = -1;
    mate[3 * u] = 3 * v;
    mate[3 * v] = 3 * u;
    for (int k = 0; k < 4; ++k) {
      const int other = g.mate(leg[k]);
      const int j = leg_index(other);
      const int target = j >= 0 ? pos[j] : other;
      mate[pos[k]] = target;
      mate[target] = pos[k];
    }
    return TrivalentGraph::from_mates(std::move(mate));
  };

  GraphCombination out;
  out.add(1, build({0, 1, 2, 3}));   // I: (e, a, b), (e, c, d)
  out.add(-1, build({2, 1, 0, 3}));  // H: (e, c, b), (e, a, d)
  out.add(1, build({2, 0, 1, 3}));   // X: (e, c, a), (e, b, d)
  return out;
}

GraphCombination ihx_relation(const GraphCombination& c, int edge_index) {
  GraphCombination out;
  for (const auto& [coef, g] : c.terms()) {
    GraphCombination r = ihx_relation(g, edge_index);
    r *= coef;
    out += r;
  }
  return out;
}

}  // namespace zhs::diagrams
