#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zhs::links {

/// One crossing of a planar diagram code. The four arcs are listed
/// counterclockwise starting from the incoming under-strand, so the
/// under-strand always runs arcs[0] -> arcs[2]. For sign +1 the over-strand
/// runs arcs[3] -> arcs[1]; for sign -1 it runs arcs[1] -> arcs[3].
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram with an integer framing per component. Each
/// component lists its arcs in traversal order; a component without crossings
/// is a single arc that appears in no crossing. The empty link (no components)
/// is a valid value.
struct FramedLinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> components;
  std::vector<int> framings;

  std::size_t size() const { return components.size(); }
  std::size_t crossing_count() const { return crossings.size(); }
  bool empty() const { return components.empty(); }

  friend bool operator==(const FramedLinkDiagram&, const FramedLinkDiagram&) = default;
};

class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returns the first violated arc-incidence or orientation invariant, or
/// nothing when the diagram is well formed. Planarity is not checked.
std::optional<std::string> validate(const FramedLinkDiagram& link);
void require_valid(const FramedLinkDiagram& link);

using LinkingMatrix = std::vector<std::vector<int>>;

/// Off-diagonal: half the signed crossing count between two components.
/// Diagonal: the stored framing.
LinkingMatrix linking_matrix(const FramedLinkDiagram& link);
bool is_algebraically_split(const FramedLinkDiagram& link);

int writhe(const FramedLinkDiagram& link);
/// Signed count of crossings whose strands both belong to component p.
int self_writhe(const FramedLinkDiagram& link, std::size_t p);
/// Component index of every arc, keyed by arc id.
std::vector<int> component_of_arcs(const FramedLinkDiagram& link);

/// Keeps the listed components (in the listed order); crossings with a dropped
/// strand are erased and the surviving strand's arcs are merged.
FramedLinkDiagram sublink(const FramedLinkDiagram& link, const std::vector<std::size_t>& keep);
/// Keeps component p iff bit p of mask is set.
FramedLinkDiagram sublink_mask(const FramedLinkDiagram& link, std::uint64_t mask);

/// Zero-framed parallel: component p becomes copies[p] blackboard parallels.
/// A twist region of |w_p| full twists (w_p = self-writhe of p) on the first
/// arc of p cancels the blackboard linking between the copies. Each copy keeps
/// framing f_p; copies[p] == 0 deletes the component.
FramedLinkDiagram cable(const FramedLinkDiagram& link, const std::vector<int>& copies);

FramedLinkDiagram disjoint_union(const FramedLinkDiagram& a, const FramedLinkDiagram& b);

/// Switches over and under at one crossing.
FramedLinkDiagram crossing_change(const FramedLinkDiagram& link, std::size_t index);
/// Orientation-preserving smoothing of one crossing. Framings are reset to 0
/// because the component structure can change.
FramedLinkDiagram oriented_smoothing(const FramedLinkDiagram& link, std::size_t index);
FramedLinkDiagram mirror(const FramedLinkDiagram& link);

/// Arc ids relabelled 1..n in traversal order, components in their given order.
FramedLinkDiagram compacted(const FramedLinkDiagram& link);

/// Key that is equal for diagrams with the same code after compaction. Equal
/// keys imply equal diagrams up to arc relabelling; the converse need not hold.
std::string canonical_key(const FramedLinkDiagram& link);

namespace detail {

/// Rebuilds components by traversal after the given arc identifications.
/// Components come out in the order of `seeds` (one arc per wanted
/// component; seeds landing on an already produced component are skipped),
/// followed by any remaining cycles and crossingless arcs from `all_arcs` in
/// order of smallest id. Arcs are relabelled 1..n; framings are left empty.
FramedLinkDiagram rebuild(const std::vector<Crossing>& crossings,
                          const std::vector<std::pair<int, int>>& identifications,
                          const std::vector<int>& seeds,
                          const std::vector<int>& all_arcs);

}  // namespace detail

}  // namespace zhs::links
