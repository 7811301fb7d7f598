#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "zhs/jones/bracket.hpp"

namespace zhs::jones {

namespace detail {

StateSumInput prepare(const links::FramedLinkDiagram& link) {
  if (link.empty()) throw std::invalid_argument("bracket of the empty diagram is not a Laurent polynomial");
  StateSumInput in;
  std::map<int, int> index;
  for (const auto& comp : link.components) {
    bool crossed = false;
    for (const auto& c : link.crossings)
      for (int a : c.arcs) crossed = crossed || a == comp.front();
    if (!crossed && comp.size() == 1) {
      ++in.free_loops;
      continue;
    }
    for (int a : comp) index.emplace(a, static_cast<int>(index.size()));
  }
  in.arc_count = static_cast<int>(index.size());
  for (const auto& c : link.crossings) {
    in.crossings.push_back({index.at(c.arcs[0]), index.at(c.arcs[1]), index.at(c.arcs[2]), index.at(c.arcs[3])});
  }
  return in;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

int count_loops(const StateSumInput& in, std::uint64_t state, std::vector<int>& parent) {
  parent.resize(in.arc_count);
  std::iota(parent.begin(), parent.end(), 0);
  int components = in.arc_count;
  auto unite = [&](int a, int b) {
    a = find(parent, a);
    b = find(parent, b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (std::size_t k = 0; k < in.crossings.size(); ++k) {
    const auto& x = in.crossings[k];
    if (state >> k & 1u) {
      unite(x[0], x[3]);
      unite(x[1], x[2]);
    } else {
      unite(x[0], x[1]);
      unite(x[2], x[3]);
    }
  }
  return components + in.free_loops;
}

IntLaurent assemble(const std::vector<std::vector<std::int64_t>>& hist, int crossings) {
  IntLaurent total;
  IntLaurent delta_power = IntLaurent::monomial(0);
  std::vector<IntLaurent> powers;
  std::size_t max_loops = 0;
  for (const auto& row : hist) max_loops = std::max(max_loops, row.size());
  for (std::size_t l = 0; l < max_loops; ++l) {
    powers.push_back(delta_power);
    delta_power = delta_power.times_delta();
  }
  for (std::size_t a = 0; a < hist.size(); ++a) {
    for (std::size_t l = 1; l < hist[a].size(); ++l) {
      if (hist[a][l] == 0) continue;
      total += powers[l - 1].shifted(2 * static_cast<int>(a) - crossings) * hist[a][l];
    }
  }
  return total;
}

}  // namespace detail

IntLaurent bracket_serial(const links::FramedLinkDiagram& link) {
  const auto in = detail::prepare(link);
  const int c = static_cast<int>(in.crossings.size());
  if (c > 40) throw std::invalid_argument("state sum limited to 40 crossings");
  const int max_loops = in.arc_count + in.free_loops + 1;
  std::vector<std::vector<std::int64_t>> hist(c + 1, std::vector<std::int64_t>(max_loops + 1, 0));
  std::vector<int> scratch;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << c); ++s) {
    const int a = c - std::popcount(s);
    ++hist[a][detail::count_loops(in, s, scratch)];
  }
  return detail::assemble(hist, c);
}

IntLaurent bracket(const links::FramedLinkDiagram& link, BracketKernel kernel) {
  switch (kernel) {
    case BracketKernel::SerialStateSum:
      return bracket_serial(link);
    case BracketKernel::ParallelStateSum:
      return bracket_parallel(link);
    case BracketKernel::Frontier:
      break;
  }
  return bracket_frontier(link);
}

IntLaurent jones_in_A(const links::FramedLinkDiagram& link, BracketKernel kernel) {
  const int w = links::writhe(link);
  IntLaurent b = bracket(link, kernel);
  // (-A^3)^{-w} = (-1)^w A^{-3w}
  return b.shifted(-3 * w) * ((w % 2 == 0) ? 1 : -1);
}

}  // namespace zhs::jones
