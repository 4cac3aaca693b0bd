#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "isph/filtration.hpp"
#include "isph/hierarchy.hpp"

namespace isph {

/// Minimum total cost of a perfect assignment on a square cost matrix
/// (row-major, n x n), solved in O(n^3) with the Hungarian method.
double solve_assignment(const std::vector<double>& cost, std::size_t n);

/// Ordered tree edit distance between two single-root hierarchies with
/// children canonically ordered by ascending (birth, death). Relabeling
/// costs the L-infinity distance between the pairs; deleting or inserting a
/// node costs its persistence. Roots are always matched to each other.
/// Throws on empty or multi-root hierarchies.
double tree_edit_distance(const PersistenceHierarchy& h1, const PersistenceHierarchy& h2);

/// q-Wasserstein distance between diagrams under the L-infinity ground
/// metric, allowing points to match their diagonal projections. Essential
/// pairs participate with their recorded death values.
double wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                   double q = 2.0);

enum class MeasureKind { IsphTed, Wasserstein };

struct DistanceMeasure {
    MeasureKind kind = MeasureKind::IsphTed;
    double q = 2.0;   // Wasserstein exponent
};

struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> entries;   // row-major n x n

    double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

/// Pairwise distances over a field sequence. Diagrams and hierarchies are
/// computed once per field; the independent pairwise computations run on a
/// small thread pool (`threads` = 0 picks the hardware concurrency).
DistanceMatrix distance_matrix(std::span<const ScalarField> fields, DistanceMeasure measure,
                               std::size_t threads = 0);

/// Dense TSV (one row per line) or sparse triplets `i j d` covering all
/// n^2 cells in row-major order.
void write_distance_matrix(const DistanceMatrix& matrix, std::ostream& out,
                           bool triplets = false);

}  // namespace isph
