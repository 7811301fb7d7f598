#pragma once

#include <vector>

#include "zhs/links/diagram.hpp"
#include "zhs/links/tangle.hpp"

namespace zhs::links::fixtures {

/// Closure of a braid on `strands` strands. Generator +i / -i crosses
/// positions i-1 and i (1-based i); for +i the strand moving rightwards goes
/// over and the crossing is positive. All framings are 0.
FramedLinkDiagram closed_braid(int strands, const std::vector<int>& word);

FramedLinkDiagram unknot(int framing = 0);
FramedLinkDiagram unlink(int components);
FramedLinkDiagram hopf();
FramedLinkDiagram trefoil_right(int framing = 0);
FramedLinkDiagram trefoil_left(int framing = 0);
FramedLinkDiagram figure_eight(int framing = 0);

/// Six-crossing Borromean rings drawn as three overlapping circles; each ring
/// lies over the next in the cycle A, B, C. Framings all 0.
FramedLinkDiagram borromean();
FramedLinkDiagram borromean_mirror();

/// Borromean rings with one outer arc of each ring cut open. Boundary slots
/// (counterclockwise) carry rings A, C, B, each as (outgoing end, incoming end).
Tangle borromean_tangle();
/// Mirror image of borromean_tangle() with the same boundary layout.
Tangle borromean_tangle_mirror();
/// Three unknotted arcs in the same slot layout as borromean_tangle().
Tangle trivial_tangle();

FramedLinkDiagram with_framings(FramedLinkDiagram link, const std::vector<int>& framings);

}  // namespace zhs::links::fixtures
