#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "zhs/jones/bracket.hpp"

namespace zhs::jones {

namespace {

// Open arcs of a partial state, as sorted pairs (x, partner) with x < partner.
using Matching = std::vector<std::pair<int, int>>;

int take_partner(Matching& m, int x) {
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (it->first == x || it->second == x) {
      const int p = it->first == x ? it->second : it->first;
      m.erase(it);
      return p;
    }
  }
  throw std::logic_error("frontier state lost an open arc");
}

void add_pair(Matching& m, int a, int b) {
  if (a > b) std::swap(a, b);
  m.insert(std::lower_bound(m.begin(), m.end(), std::make_pair(a, b)), {a, b});
}

bool paired(const Matching& m, int a, int b) {
  if (a > b) std::swap(a, b);
  return std::binary_search(m.begin(), m.end(), std::make_pair(a, b));
}

// Joins the ends of arcs x and y at the current crossing; returns 1 if that closes a loop.
int join_ends(Matching& m, int x, int y, bool x_open, bool y_open) {
  if (x == y) return 1;
  if (x_open && y_open && paired(m, x, y)) {
    take_partner(m, x);
    return 1;
  }
  const int ex = x_open ? take_partner(m, x) : x;
  const int ey = y_open ? take_partner(m, y) : y;
  add_pair(m, ex, ey);
  return 0;
}

std::vector<std::size_t> greedy_order(const detail::StateSumInput& in) {
  const std::size_t c = in.crossings.size();
  std::vector<int> touched(in.arc_count, 0);
  std::vector<char> done(c, 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < c; ++step) {
    std::size_t best = c;
    int best_score = std::numeric_limits<int>::min();
    for (std::size_t k = 0; k < c; ++k) {
      if (done[k]) continue;
      int score = 0;
      for (int a : in.crossings[k]) score += touched[a] > 0 ? 2 : 0;
      for (int a : in.crossings[k]) score -= touched[a] == 0 ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    done[best] = 1;
    order.push_back(best);
    for (int a : in.crossings[best]) ++touched[a];
  }
  return order;
}

}  // namespace

IntLaurent bracket_frontier(const links::FramedLinkDiagram& link) {
  const auto in = detail::prepare(link);
  std::vector<int> ends_done(in.arc_count, 0);
  std::map<Matching, IntLaurent> states{{Matching{}, IntLaurent::monomial(0)}};

  for (std::size_t k : greedy_order(in)) {
    const auto& x = in.crossings[k];
    const std::array<std::array<int, 4>, 2> smoothings{{{x[0], x[1], x[2], x[3]}, {x[0], x[3], x[1], x[2]}}};
    std::map<Matching, IntLaurent> next;
    for (int s = 0; s < 2; ++s) {
      const auto& pairs = smoothings[s];
      // openness of each arc before each of the two joins; identical for all states
      std::vector<int> ends = ends_done;
      const bool o0 = ends[pairs[0]] == 1, o1 = ends[pairs[1]] == 1;
      ++ends[pairs[0]];
      ++ends[pairs[1]];
      const bool o2 = ends[pairs[2]] == 1, o3 = ends[pairs[3]] == 1;
      for (const auto& [m, poly] : states) {
        Matching mm = m;
        int loops = join_ends(mm, pairs[0], pairs[1], o0, o1);
        loops += join_ends(mm, pairs[2], pairs[3], o2, o3);
        IntLaurent term = poly.shifted(s == 0 ? 1 : -1);
        for (int l = 0; l < loops; ++l) term = term.times_delta();
        auto [it, fresh] = next.try_emplace(std::move(mm), term);
        if (!fresh) it->second += term;
      }
    }
    for (int a : x) ++ends_done[a];
    states = std::move(next);
  }

  IntLaurent total;
  for (const auto& [m, poly] : states) {
    if (!m.empty()) throw std::logic_error("frontier states did not close");
    total += poly;
  }
  for (int l = 0; l < in.free_loops; ++l) total = total.times_delta();
  return total.divided_by_delta();
}

}  // namespace zhs::jones
