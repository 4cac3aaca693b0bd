#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "isph/scalar_field.hpp"

namespace isph {

/// A creator-destroyer pair of critical vertices. Essential pairs record the
/// component that never dies; by convention their destroyer is the highest
/// vertex of the component and their death its value, so Fig-style diagrams
/// contain the point (global min, global max).
struct PersistencePair {
    VertexId creator = 0;
    VertexId destroyer = 0;
    double birth = 0.0;
    double death = 0.0;
    bool essential = false;

    bool operator==(const PersistencePair&) const = default;
};

inline double persistence(const PersistencePair& pair) {
    return std::abs(pair.death - pair.birth);
}

struct PersistenceDiagram {
    /// Sorted by (birth, death, creator).
    std::vector<PersistencePair> pairs;

    std::size_t size() const { return pairs.size(); }
};

enum class CriticalClass : std::uint8_t { Minimum, Merge, Regular };

/// One binary merge. `at` joins the component generated by
/// `younger_generator` into the one generated by `older_generator`,
/// destroying the younger. k-way joins are decomposed into successive binary
/// events in ascending order of the dying generators' values.
struct MergeEvent {
    VertexId at = 0;
    VertexId older_generator = 0;
    VertexId younger_generator = 0;

    bool operator==(const MergeEvent&) const = default;
};

/// Byproducts of the sweep needed by the hierarchy builders: the descending
/// region each vertex belongs to, the per-vertex critical class, and the
/// ordered merge events.
struct PairingTrace {
    /// basin[v] is the local minimum whose region v joined when it entered
    /// the filtration: a minimum is its own basin, every other vertex
    /// inherits the basin of its lowest neighbor under the total order. The
    /// assignment is frozen at insertion time and never updated by merges.
    std::vector<VertexId> basin;
    std::vector<CriticalClass> critical;
    std::vector<MergeEvent> merge_events;
};

/// Sweeps the vertices in ascending order, maintaining sublevel-set
/// components with union-find and pairing by the elder rule: at a merge the
/// younger component dies and its generator pairs with the merge vertex.
/// Each surviving component contributes one essential pair.
std::pair<PersistenceDiagram, PairingTrace> compute_pairs(const ScalarField& field,
                                                          const VertexOrder& order);

inline std::pair<PersistenceDiagram, PairingTrace> compute_pairs(const ScalarField& field) {
    return compute_pairs(field, total_order(field));
}

/// TSV rows `birth death creator destroyer essential`, full round-trip
/// precision. `flip_sign` reports superlevel results in the original
/// orientation (values computed on a negated field are sign-flipped back).
void write_diagram_tsv(const PersistenceDiagram& diagram, std::ostream& out,
                       bool flip_sign = false);

}  // namespace isph
