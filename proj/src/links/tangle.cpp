#include "zhs/links/tangle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace zhs::links {

namespace {

int max_arc(const Tangle& t) {
  int m = 0;
  for (const auto& c : t.crossings)
    for (int a : c.arcs) m = std::max(m, a);
  for (const auto& s : t.strands)
    for (int a : s) m = std::max(m, a);
  for (const auto& s : t.loops)
    for (int a : s) m = std::max(m, a);
  return m;
}

}  // namespace

std::optional<std::string> validate(const Tangle& t) {
  if (t.boundary.size() != 2 * t.strands.size()) return "boundary size must be twice the strand count";
  std::vector<int> seen(2 * t.strands.size(), 0);
  for (const auto& e : t.boundary) {
    if (e.strand >= t.strands.size()) return "boundary refers to a missing strand";
    if (seen[2 * e.strand + (e.out ? 1 : 0)]++) return "endpoint listed twice on the boundary";
  }
  std::map<int, int> uses;
  for (const auto& c : t.crossings)
    for (int a : c.arcs) ++uses[a];
  for (std::size_t s = 0; s < t.strands.size(); ++s) {
    const auto& st = t.strands[s];
    if (st.empty()) return "empty strand";
    for (std::size_t i = 0; i < st.size(); ++i) {
      const int expected = (st.size() == 1) ? 0 : ((i == 0 || i + 1 == st.size()) ? 1 : 2);
      if (uses[st[i]] != expected) return "strand arc " + std::to_string(st[i]) + " has wrong crossing incidence";
    }
  }
  for (const auto& l : t.loops) {
    if (l.empty()) return "empty loop";
    for (int a : l)
      if (uses[a] != (l.size() == 1 ? 0 : 2)) return "loop arc " + std::to_string(a) + " has wrong crossing incidence";
  }
  return std::nullopt;
}

Tangle juxtapose(const Tangle& a, const Tangle& b) {
  const int shift = max_arc(a);
  Tangle out = a;
  for (auto c : b.crossings) {
    for (int& x : c.arcs) x += shift;
    out.crossings.push_back(c);
  }
  auto shifted = [shift](std::vector<int> v) {
    for (int& x : v) x += shift;
    return v;
  };
  const std::size_t strand_shift = a.strands.size();
  for (const auto& s : b.strands) out.strands.push_back(shifted(s));
  for (const auto& l : b.loops) out.loops.push_back(shifted(l));
  for (auto e : b.boundary) {
    e.strand += strand_shift;
    out.boundary.push_back(e);
  }
  return out;
}

Tangle join(const Tangle& t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t ns = t.strands.size();
  std::vector<std::optional<std::size_t>> succ(ns), pred(ns);
  std::vector<char> used(t.boundary.size(), 0);
  for (auto [i, k] : pairs) {
    if (i >= t.boundary.size() || k >= t.boundary.size() || i == k) {
      throw std::invalid_argument("join: bad boundary position");
    }
    if (used[i]++ || used[k]++) throw std::invalid_argument("join: boundary position used twice");
    Endpoint a = t.boundary[i], b = t.boundary[k];
    if (a.out == b.out) throw InvalidDiagram("join: pairing connects two ends of the same orientation");
    if (!a.out) std::swap(a, b);
    succ[a.strand] = b.strand;
    pred[b.strand] = a.strand;
  }

  // Merge the arc at each junction: last arc of s is the first arc of succ(s).
  std::map<int, int> alias;
  auto resolve = [&](int x) {
    while (alias.count(x)) x = alias.at(x);
    return x;
  };
  for (std::size_t s = 0; s < ns; ++s) {
    if (!succ[s]) continue;
    const int from = resolve(t.strands[*succ[s]].front());
    const int to = resolve(t.strands[s].back());
    if (from != to) alias[std::max(from, to)] = std::min(from, to);
  }

  Tangle out;
  out.crossings = t.crossings;
  for (auto& c : out.crossings)
    for (int& a : c.arcs) a = resolve(a);
  for (const auto& l : t.loops) {
    std::vector<int> loop;
    for (int a : l) loop.push_back(resolve(a));
    out.loops.push_back(std::move(loop));
  }

  auto chain = [&](std::size_t start, std::vector<char>& done) {
    std::vector<int> arcs;
    std::size_t s = start;
    while (true) {
      done[s] = 1;
      for (int a : t.strands[s]) {
        const int r = resolve(a);
        if (arcs.empty() || arcs.back() != r) arcs.push_back(r);
      }
      if (!succ[s] || *succ[s] == start) break;
      s = *succ[s];
    }
    return arcs;
  };

  std::vector<char> done(ns, 0);
  std::vector<std::size_t> new_index(ns, 0);
  for (std::size_t s = 0; s < ns; ++s) {
    if (pred[s]) continue;
    std::size_t x = s;
    while (true) {
      new_index[x] = out.strands.size();
      if (!succ[x]) break;
      x = *succ[x];
    }
    out.strands.push_back(chain(s, done));
  }
  for (std::size_t s = 0; s < ns; ++s) {
    if (done[s]) continue;
    std::vector<int> loop = chain(s, done);
    if (loop.size() > 1 && loop.front() == loop.back()) loop.pop_back();
    out.loops.push_back(std::move(loop));
  }
  for (std::size_t i = 0; i < t.boundary.size(); ++i) {
    if (used[i]) continue;
    Endpoint e = t.boundary[i];
    e.strand = new_index[e.strand];
    out.boundary.push_back(e);
  }
  return out;
}

Tangle connect_sum_strands(const Tangle& t1, const Tangle& t2,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairing) {
  std::vector<std::pair<std::size_t, std::size_t>> shifted;
  for (auto [i, k] : pairing) shifted.emplace_back(i, k + t1.boundary.size());
  return join(juxtapose(t1, t2), shifted);
}

FramedLinkDiagram close(const Tangle& t) {
  if (!t.strands.empty() || !t.boundary.empty()) throw InvalidDiagram("close: tangle still has open strands");
  std::vector<int> seeds, arcs;
  for (const auto& l : t.loops) {
    seeds.push_back(l.front());
    arcs.insert(arcs.end(), l.begin(), l.end());
  }
  FramedLinkDiagram out = detail::rebuild(t.crossings, {}, seeds, arcs);
  if (out.size() != t.loops.size()) throw InvalidDiagram("close: loops do not match crossing traversal");
  out.framings.assign(out.size(), 0);
  return out;
}

Tangle trivial_arc() {
  Tangle t;
  t.strands = {{1}};
  t.boundary = {{0, false}, {0, true}};
  return t;
}

}  // namespace zhs::links
