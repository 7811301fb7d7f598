#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zhs/links/diagram.hpp"

namespace zhs::links {

/// A free end of a tangle strand: the start (`out == false`, where the strand
/// enters the tangle) or the end (`out == true`).
struct Endpoint {
  std::size_t strand = 0;
  bool out = false;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Diagram fragment in a disc. Strands are open arc chains listed in
/// direction of travel; loops are closed components. `boundary` lists all
/// 2 * strands.size() endpoints counterclockwise around the disc.
struct Tangle {
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> strands;
  std::vector<std::vector<int>> loops;
  std::vector<Endpoint> boundary;
};

std::optional<std::string> validate(const Tangle& t);

/// Side-by-side placement; `b`'s boundary follows `a`'s.
Tangle juxtapose(const Tangle& a, const Tangle& b);

/// Glues pairs of boundary positions of one tangle. Each pair must join an
/// outgoing end to an incoming end. Surviving endpoints keep their relative
/// boundary order. Throws InvalidDiagram on an orientation mismatch.
Tangle join(const Tangle& t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Joins boundary position i of t1 to boundary position k of t2 for every
/// (i, k) in the pairing.
Tangle connect_sum_strands(const Tangle& t1, const Tangle& t2,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairing);

/// Closed tangle (no boundary) as a zero-framed link diagram.
FramedLinkDiagram close(const Tangle& t);

/// Single unknotted arc.
Tangle trivial_arc();

}  // namespace zhs::links
