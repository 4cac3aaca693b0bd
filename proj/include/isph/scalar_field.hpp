#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isph {

using VertexId = std::uint32_t;

enum class DomainKind { Chain1d, Grid2d };

enum class GridConnectivity : int { Four = 4, Eight = 8 };

struct GridDims {
    std::size_t rows = 0;
    std::size_t cols = 0;

    bool operator==(const GridDims&) const = default;
};

/// A scalar function sampled on a fixed discrete domain: one value per
/// vertex plus a symmetric neighborhood graph. Immutable after
/// construction, so instances can be shared freely across threads.
///
/// Vertex ids are dense. For grids they are row-major: id = row * cols + col.
class ScalarField {
public:
    static ScalarField chain(std::vector<double> values);
    static ScalarField grid(std::vector<double> values, GridDims dims,
                            GridConnectivity connectivity = GridConnectivity::Four);

    std::size_t size() const { return values_.size(); }
    double value(VertexId v) const { return values_[v]; }
    const std::vector<double>& values() const { return values_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbor_data_.data() + neighbor_offsets_[v],
                neighbor_offsets_[v + 1] - neighbor_offsets_[v]};
    }

    DomainKind domain_kind() const { return domain_kind_; }
    GridDims dims() const { return dims_; }
    GridConnectivity connectivity() const { return connectivity_; }

    /// Same domain, values x -> -x. Sublevel analysis of the result is
    /// superlevel analysis of the original.
    ScalarField negated() const;

    bool operator==(const ScalarField&) const = default;

private:
    ScalarField() = default;

    std::vector<double> values_;
    std::vector<std::size_t> neighbor_offsets_;
    std::vector<VertexId> neighbor_data_;
    DomainKind domain_kind_ = DomainKind::Chain1d;
    GridDims dims_;
    GridConnectivity connectivity_ = GridConnectivity::Four;
};

/// Strict total order on vertices: v precedes w iff (f(v), v) < (f(w), w)
/// lexicographically. The id tie-break realizes symbolic perturbation, so
/// plateaus in the data never produce ties.
struct VertexOrder {
    std::vector<VertexId> sorted;         // vertex ids, ascending
    std::vector<std::uint32_t> rank_of;   // inverse permutation

    bool precedes(VertexId v, VertexId w) const { return rank_of[v] < rank_of[w]; }
};

VertexOrder total_order(const ScalarField& field);

inline ScalarField negate(const ScalarField& field) { return field.negated(); }

std::string to_string(DomainKind kind);

}  // namespace isph
