#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "isph/hierarchy.hpp"

namespace isph {

/// rank(u) = number of nodes reachable from u along parent -> child edges,
/// excluding u itself. Leaves have rank 0. Computed by one depth-first
/// traversal.
std::vector<std::size_t> ranks(const PersistenceHierarchy& hierarchy);

/// L-infinity distance between the two endpoint pairs of an edge: the
/// smallest perturbation of critical values that can alter the edge.
double edge_stability(const PersistenceHierarchy& hierarchy, std::size_t node_a,
                      std::size_t node_b);

/// stab(v) = min over the stabilities of v's outgoing edges and pers(v).
/// Leaves get their own persistence.
std::vector<double> vertex_stability(const PersistenceHierarchy& hierarchy);

/// TSV rows `birth death rank stability` in node order, the data behind
/// rank/stability-colored persistence diagrams.
void write_analysis_tsv(const PersistenceHierarchy& hierarchy, std::ostream& out,
                        bool flip_sign = false);

}  // namespace isph
