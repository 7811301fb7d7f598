#pragma once

#include <cstdint>
#include <vector>

#include "zhs/algebra/rational.hpp"
#include "zhs/diagrams/chord_diagram.hpp"
#include "zhs/diagrams/graph.hpp"

namespace zhs::diagrams {

/// Square integer matrix, row-major.
struct IntMatrix {
  int dim = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(int r, int c) const { return entries[r * dim + c]; }
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  std::int64_t trace() const;
  static IntMatrix identity(int dim);
};

/// Metrized Lie algebra given by a basis of matrices in a representation.
/// Metric and structure constants are derived from the matrices:
/// g_ab = Tr(x_a x_b), f_abc = Tr([x_a, x_b] x_c).
struct LieData {
  std::vector<IntMatrix> basis;
  std::vector<std::vector<Rational>> metric;
  std::vector<std::vector<Rational>> inverse_metric;
  /// f[(a * d + b) * d + c]
  std::vector<std::int64_t> structure;
  /// Least positive integer s with s * inverse_metric integral.
  std::int64_t scale = 1;
  /// Label pairs (a, b, s * g^ab) with g^ab nonzero: the choices for one edge.
  struct EdgeChoice {
    int a, b;
    std::int64_t weight;
  };
  std::vector<EdgeChoice> edge_choices;

  int dim() const { return static_cast<int>(basis.size()); }
  std::int64_t f(int a, int b, int c) const { return structure[(a * dim() + b) * dim() + c]; }
};

/// Throws std::invalid_argument when the trace form is degenerate.
LieData make_lie_data(std::vector<IntMatrix> basis);
/// sl2 with basis e, f, h in the 2-dimensional representation.
const LieData& sl2();

enum class WeightKernel {
  /// Every label assignment, no pruning. Kept as the reference.
  Serial,
  /// Depth-first with early exit on zero factors, OpenMP over label prefixes.
  Parallel,
};

/// Full contraction: structure tensor at each vertex in slot order, inverse
/// metric on each edge, trace of the ordered matrix product on each loop.
Rational contract(const LieData& lie, const ChordDiagram& d, WeightKernel kernel = WeightKernel::Parallel);

Rational sl2_weight(const ChordDiagram& d, WeightKernel kernel = WeightKernel::Parallel);
Rational sl2_weight(const TrivalentGraph& g, WeightKernel kernel = WeightKernel::Parallel);
Rational sl2_weight(const DiagramCombination& c, WeightKernel kernel = WeightKernel::Parallel);
Rational sl2_weight(const GraphCombination& c, WeightKernel kernel = WeightKernel::Parallel);

/// (-1)^n gamma(eta(G)); throws InvalidGraph unless G has 2n vertices.
Rational Lambda_n(const TrivalentGraph& g, int n);

namespace detail {

/// Label-independent data shared by both kernels.
struct Contraction {
  const LieData* lie = nullptr;
  int edge_count = 0;
  /// Half-edge ends of edge k, edges listed in assignment order.
  std::vector<std::pair<int, int>> edge_ends;
  /// Edge index of every half-edge and which end of the edge it is.
  std::vector<int> edge_of;
  std::vector<int> end_of;
  int trivalent = 0;
  std::vector<std::vector<int>> loops;
  /// Factors (vertex v as v, loop l as trivalent + l) whose last edge in
  /// assignment order is k. Bare loops need no edge and sit in `constant`.
  std::vector<std::vector<int>> ready_after;
  std::vector<int> constant;
};

Contraction prepare(const LieData& lie, const ChordDiagram& d);
/// Factor value for the given per-half-edge labels.
std::int64_t factor(const Contraction& c, int index, const std::vector<int>& labels);

Rational contract_serial(const Contraction& c);
Rational contract_parallel(const Contraction& c);

}  // namespace detail

}  // namespace zhs::diagrams
