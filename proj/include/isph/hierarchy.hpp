#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "isph/filtration.hpp"
#include "isph/scalar_field.hpp"

namespace isph {

enum class HierarchyVariant { Regular, Isph };

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// A rooted tree over the persistence pairs of one field. Nodes are stored
/// in the diagram's canonical order; edges are directed parent -> child and
/// every root is an essential pair.
struct PersistenceHierarchy {
    std::vector<PersistencePair> nodes;
    std::vector<std::size_t> parent;   // kNoParent marks a root
    HierarchyVariant variant = HierarchyVariant::Regular;

    std::size_t size() const { return nodes.size(); }

    std::vector<std::vector<std::size_t>> children() const;
    std::vector<std::size_t> roots() const;
};

/// The merge-tree hierarchy: the pair created at a merge becomes a child of
/// the pair generated by the component it merged into.
PersistenceHierarchy build_regular_hierarchy(const PairingTrace& trace,
                                             const PersistenceDiagram& diagram);

/// True iff cp_a and cp_b are joined by a path inside the interlevel set
/// {v : y_l <= f(v) <= y_u} that crosses no region assigned to a third
/// minimum. Merge vertices lie on region boundaries and never block a path;
/// every other vertex must belong to the basin of cp_a or cp_b.
bool interlevel_connected(const ScalarField& field, const PairingTrace& trace,
                          VertexId cp_a, VertexId cp_b, double y_l, double y_u);

/// The interlevel set persistence hierarchy. Replays the merge events while
/// tracking, per live component, the highest minimum along its current
/// branch; at each merge the interlevel connectivity of the two stored
/// highest minima decides whether the branch is prolonged or closed.
PersistenceHierarchy build_isph(const ScalarField& field, const PairingTrace& trace,
                                const PersistenceDiagram& diagram);

PersistenceHierarchy build_hierarchy(const ScalarField& field, const PairingTrace& trace,
                                     const PersistenceDiagram& diagram,
                                     HierarchyVariant variant);

/// DOT digraph with node labels "(birth,death)". `flip_sign` reports
/// superlevel results in the original orientation.
void write_hierarchy_dot(const PersistenceHierarchy& hierarchy, std::ostream& out,
                         bool flip_sign = false);

/// JSON document with `nodes`, `parent` (null for roots) and `variant`.
std::string hierarchy_to_json(const PersistenceHierarchy& hierarchy, bool flip_sign = false);

}  // namespace isph
