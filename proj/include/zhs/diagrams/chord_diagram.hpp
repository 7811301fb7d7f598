#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zhs/algebra/rational.hpp"
#include "zhs/diagrams/graph.hpp"

namespace zhs::diagrams {

/// Uni-trivalent graph with its legs attached to Wilson loops. Half-edges
/// 0 .. 3T-1 belong to the trivalent vertices (slot order counterclockwise);
/// half-edge 3T + l is leg l. `mate` pairs all half-edges, so a leg may be
/// joined directly to another leg (a chord). Each loop lists its legs in
/// order around the circle; a loop may be bare.
struct ChordDiagram {
  int trivalent = 0;
  std::vector<std::vector<int>> loops;
  std::vector<int> mate;

  int leg_count() const { return static_cast<int>(mate.size()) - 3 * trivalent; }
  int leg_half_edge(int leg) const { return 3 * trivalent + leg; }
  std::size_t loop_count() const { return loops.size(); }
  /// (legs + trivalent vertices) / 2; throws InvalidGraph when odd.
  int grade() const;
  bool has_bare_loop() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// Throws InvalidGraph when the mate array or the leg placement is malformed.
void require_valid(const ChordDiagram& d);

/// Text form of the data, used as the identity of a term in a combination.
std::string structural_key(const ChordDiagram& d);

/// The graph itself, no loops.
ChordDiagram as_diagram(const TrivalentGraph& g);
/// One Wilson loop, nothing attached.
ChordDiagram bare_loop();
ChordDiagram empty_diagram();
ChordDiagram disjoint_union(const ChordDiagram& a, const ChordDiagram& b);
/// Cuts loop `la` of a and loop `lb` of b at their starting points and splices
/// them into one loop (a's legs, then b's). The merged loop takes a's index.
ChordDiagram connect_sum(const ChordDiagram& a, int la, const ChordDiagram& b, int lb);

/// Cuts every edge of G and inserts a Wilson loop carrying the two new legs.
/// Loop k belongs to edge k of G.edges().
ChordDiagram eta(const TrivalentGraph& g);

/// Rational combination of diagrams; terms with the same structural key are
/// merged and zero coefficients dropped.
class DiagramCombination {
 public:
  using Term = std::pair<Rational, ChordDiagram>;

  DiagramCombination() = default;
  explicit DiagramCombination(const ChordDiagram& d) { add(1, d); }

  void add(const Rational& c, const ChordDiagram& d);
  const std::vector<Term>& terms() const& { return terms_; }
  /// By value on temporaries, so `for (auto& t : make().terms())` is safe.
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  DiagramCombination& operator+=(const DiagramCombination& other);
  DiagramCombination& operator-=(const DiagramCombination& other);
  DiagramCombination& operator*=(const Rational& s);
  friend bool operator==(const DiagramCombination& a, const DiagramCombination& b);

 private:
  std::vector<Term> terms_;
  std::vector<std::string> keys_;
};

/// Zero when the loop carries legs; otherwise the diagram with the loop removed.
DiagramCombination epsilon(const ChordDiagram& d, int loop);
/// The diagram itself when the loop carries legs; otherwise zero.
DiagramCombination epsilon_tilde(const ChordDiagram& d, int loop);
DiagramCombination epsilon(const DiagramCombination& c, int loop);
DiagramCombination epsilon_tilde(const DiagramCombination& c, int loop);

/// Drops every term with a Wilson loop that carries no legs.
DiagramCombination project_P(const DiagramCombination& c);

/// mu + mu/3: the least grade of a chord-free diagram on mu loops with at
/// least two legs per loop.
Rational min_grade_bound(int mu);

struct GradeBoundReport {
  /// Combinatorial types visited (trivalent count, legs per vertex, legs per loop).
  long types = 0;
  /// Types with at least two legs on every loop.
  long two_leg_types = 0;
  /// Types with a one-leg loop; their representative must have weight 0.
  long one_leg_types = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Enumerates chord-free diagrams with 1..max_loops loops, every loop carrying
/// a leg, and grade <= max_grade. Checks the grade bound where every loop has
/// two legs, and a vanishing sl2 weight where some loop has one.
GradeBoundReport check_grade_bound(int max_loops, int max_grade);

}  // namespace zhs::diagrams
