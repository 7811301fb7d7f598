#pragma once

#include <cstdint>
#include <vector>

#include "zhs/jones/int_laurent.hpp"
#include "zhs/links/diagram.hpp"

namespace zhs::jones {

/// Kauffman bracket normalized so that a crossingless circle has value 1.
/// All kernels need a non-empty diagram.
enum class BracketKernel {
  /// Reference: one pass over all 2^c states, serial.
  SerialStateSum,
  /// The same state sum split over OpenMP threads.
  ParallelStateSum,
  /// Crossing-by-crossing transfer over boundary matchings; the default.
  Frontier,
};

IntLaurent bracket_serial(const links::FramedLinkDiagram& link);
IntLaurent bracket_parallel(const links::FramedLinkDiagram& link);
IntLaurent bracket_frontier(const links::FramedLinkDiagram& link);
IntLaurent bracket(const links::FramedLinkDiagram& link, BracketKernel kernel = BracketKernel::Frontier);

/// (-A^3)^{-w} <D>: the Jones polynomial in the bracket variable.
IntLaurent jones_in_A(const links::FramedLinkDiagram& link, BracketKernel kernel = BracketKernel::Frontier);

namespace detail {

/// Arcs relabelled 0..n-1 with crossings as index quadruples; crossingless
/// components are only counted.
struct StateSumInput {
  int arc_count = 0;
  int free_loops = 0;
  std::vector<std::array<int, 4>> crossings;
};
StateSumInput prepare(const links::FramedLinkDiagram& link);

/// Number of loops of the state whose bit k chooses the B-smoothing at crossing k.
int count_loops(const StateSumInput& in, std::uint64_t state, std::vector<int>& scratch);

/// sum_{a, l} hist[a][l] A^{2a - c} delta^{l - 1}, where hist[a][l] counts
/// states with a A-smoothings and l loops.
IntLaurent assemble(const std::vector<std::vector<std::int64_t>>& hist, int crossings);

}  // namespace detail

}  // namespace zhs::jones
