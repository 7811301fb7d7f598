#pragma once

#include <array>
#include <vector>

#include "zhs/diagrams/graph.hpp"
#include "zhs/links/combination.hpp"
#include "zhs/links/diagram.hpp"

namespace zhs::diagrams {

/// Which Borromean tangle replaces a vertex.
enum class Chirality { Standard, Mirror };

/// The chirality for which the end-to-end theta identity holds.
inline constexpr Chirality kBetaChirality = Chirality::Standard;

/// Ties a vertex slot (vertex, slot) off on itself instead of joining an edge.
using Cap = std::array<int, 2>;

/// Places vertex v's three-strand tangle on a line at x = 100 v, with slot s
/// occupying x = 100 v + 30 (2 - s) (entry) and +10 (exit), and joins slots by
/// semicircular bands above the line. Bands that cross are resolved with the
/// earlier band over. Every slot must be used by exactly one edge or cap.
/// Vertex v gets the Borromean tangle when borromean[v], the trivial tangle
/// otherwise. The result is zero-framed.
links::FramedLinkDiagram assemble_bands(int vertices, const std::vector<EdgeSpec>& edges, const std::vector<Cap>& caps,
                                        const std::vector<bool>& borromean, Chirality chirality = kBetaChirality);

/// Sum over all 2^{2n} choices of Borromean or trivial tangle per vertex, with
/// sign (-1)^{#trivial}. Every term is zero-framed.
links::LinkCombination beta(const TrivalentGraph& g, Chirality chirality = kBetaChirality);
/// beta with every framing set to +1.
links::LinkCombination beta_tilde(const TrivalentGraph& g, Chirality chirality = kBetaChirality);

/// Two Borromean vertices joined along two edges, the remaining slot of each
/// capped: a 4-component algebraically split link, +1-framed.
links::FramedLinkDiagram beta_four_component_link(Chirality chirality = kBetaChirality);

}  // namespace zhs::diagrams
