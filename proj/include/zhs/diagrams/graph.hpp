#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zhs/algebra/rational.hpp"

namespace zhs::diagrams {

using algebra::Rational;

class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (vertex, slot, vertex', slot'): one edge joining two half-edges.
using EdgeSpec = std::array<int, 4>;

/// Vertex-oriented trivalent graph. Half-edge h = 3 * vertex + slot; the slots
/// 0, 1, 2 list the half-edges at a vertex in counterclockwise order.
/// Multi-edges and self-loops are allowed.
class TrivalentGraph {
 public:
  TrivalentGraph() = default;
  /// Throws InvalidGraph unless every half-edge is used exactly once.
  TrivalentGraph(int vertices, const std::vector<EdgeSpec>& edges);
  static TrivalentGraph from_mates(std::vector<int> mate);

  int vertex_count() const { return static_cast<int>(mate_.size() / 3); }
  int edge_count() const { return static_cast<int>(mate_.size() / 2); }
  /// n, where the graph has 2n vertices.
  int order() const { return vertex_count() / 2; }
  int mate(int half_edge) const { return mate_.at(half_edge); }
  const std::vector<int>& mates() const { return mate_; }

  /// Edges with the smaller half-edge first, sorted.
  std::vector<EdgeSpec> edges() const;
  bool is_self_loop(int edge_index) const;

  /// Reverses the cyclic order at one vertex (swaps slots 1 and 2).
  TrivalentGraph flipped(int vertex) const;

  friend bool operator==(const TrivalentGraph&, const TrivalentGraph&) = default;

 private:
  std::vector<int> mate_;
};

TrivalentGraph disjoint_union(const TrivalentGraph& a, const TrivalentGraph& b);

/// Two vertices joined by three edges, drawn without crossings.
TrivalentGraph theta();

/// Isomorphism invariant of oriented graphs (rotation-system traversal from
/// every half-edge, minimum taken). Equal codes iff isomorphic.
std::string canonical_code(const TrivalentGraph& g);
/// Independent check by searching vertex bijections and slot rotations.
bool isomorphic_brute_force(const TrivalentGraph& a, const TrivalentGraph& b);

/// One representative per isomorphism class, connected or not.
std::vector<TrivalentGraph> generate_graphs(int vertices);

nlohmann::json to_json(const TrivalentGraph& g);
TrivalentGraph graph_from_json(const nlohmann::json& j);
TrivalentGraph load_graph(const std::filesystem::path& path);

/// Rational combination of graphs; isomorphic terms are merged and zero
/// coefficients dropped.
class GraphCombination {
 public:
  using Term = std::pair<Rational, TrivalentGraph>;

  GraphCombination() = default;
  explicit GraphCombination(const TrivalentGraph& g) { add(1, g); }

  void add(const Rational& c, const TrivalentGraph& g);
  const std::vector<Term>& terms() const& { return terms_; }
  /// By value on temporaries, so `for (auto& t : make().terms())` is safe.
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  GraphCombination& operator+=(const GraphCombination& other);
  GraphCombination& operator*=(const Rational& s);
  friend bool operator==(const GraphCombination& a, const GraphCombination& b);

 private:
  std::vector<Term> terms_;
  std::vector<std::string> codes_;
};

/// G + G' with the cyclic order reversed at `vertex`.
GraphCombination as_relation(const TrivalentGraph& g, int vertex);
GraphCombination as_relation(const GraphCombination& c, int vertex);

/// I - H + X at the edge with the given index in edges(). Throws
/// InvalidGraph for a self-loop.
GraphCombination ihx_relation(const TrivalentGraph& g, int edge_index);
GraphCombination ihx_relation(const GraphCombination& c, int edge_index);

}  // namespace zhs::diagrams
