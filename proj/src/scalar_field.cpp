#include "isph/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace isph {

namespace {

void check_values_finite(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("scalar field value at vertex " + std::to_string(i) +
                                        " is not finite");
        }
    }
}

}  // namespace

ScalarField ScalarField::chain(std::vector<double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("degenerate domain: a 1d chain needs at least 2 vertices");
    }
    check_values_finite(values);

    ScalarField field;
    const std::size_t n = values.size();
    field.values_ = std::move(values);
    field.domain_kind_ = DomainKind::Chain1d;
    field.dims_ = {1, n};

    field.neighbor_offsets_.resize(n + 1);
    field.neighbor_data_.reserve(2 * n - 2);
    for (std::size_t v = 0; v < n; ++v) {
        field.neighbor_offsets_[v] = field.neighbor_data_.size();
        if (v > 0) field.neighbor_data_.push_back(static_cast<VertexId>(v - 1));
        if (v + 1 < n) field.neighbor_data_.push_back(static_cast<VertexId>(v + 1));
    }
    field.neighbor_offsets_[n] = field.neighbor_data_.size();
    return field;
}

ScalarField ScalarField::grid(std::vector<double> values, GridDims dims,
                              GridConnectivity connectivity) {
    if (dims.rows == 0 || dims.cols == 0) {
        throw std::invalid_argument("grid extents must be positive");
    }
    if (values.size() != dims.rows * dims.cols) {
        throw std::invalid_argument("grid extents do not match value count");
    }
    if (values.size() < 2) {
        throw std::invalid_argument("degenerate domain: a grid needs at least 2 vertices");
    }
    check_values_finite(values);

    ScalarField field;
    field.values_ = std::move(values);
    field.domain_kind_ = DomainKind::Grid2d;
    field.dims_ = dims;
    field.connectivity_ = connectivity;

    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(dims.rows);
    const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(dims.cols);
    const bool eight = connectivity == GridConnectivity::Eight;

    field.neighbor_offsets_.resize(field.values_.size() + 1);
    field.neighbor_data_.reserve(field.values_.size() * (eight ? 8 : 4));
    std::size_t v = 0;
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
        for (std::ptrdiff_t c = 0; c < cols; ++c, ++v) {
            field.neighbor_offsets_[v] = field.neighbor_data_.size();
            for (std::ptrdiff_t dr = -1; dr <= 1; ++dr) {
                for (std::ptrdiff_t dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    if (!eight && dr != 0 && dc != 0) continue;
                    const std::ptrdiff_t nr = r + dr;
                    const std::ptrdiff_t nc = c + dc;
                    if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
                    field.neighbor_data_.push_back(static_cast<VertexId>(nr * cols + nc));
                }
            }
        }
    }
    field.neighbor_offsets_[field.values_.size()] = field.neighbor_data_.size();
    return field;
}

ScalarField ScalarField::negated() const {
    ScalarField out = *this;
    for (double& x : out.values_) x = -x;
    return out;
}

VertexOrder total_order(const ScalarField& field) {
    VertexOrder order;
    order.sorted.resize(field.size());
    std::iota(order.sorted.begin(), order.sorted.end(), VertexId{0});
    std::sort(order.sorted.begin(), order.sorted.end(), [&](VertexId v, VertexId w) {
        const double fv = field.value(v);
        const double fw = field.value(w);
        return fv < fw || (fv == fw && v < w);
    });
    order.rank_of.resize(field.size());
    for (std::size_t i = 0; i < order.sorted.size(); ++i) {
        order.rank_of[order.sorted[i]] = static_cast<std::uint32_t>(i);
    }
    return order;
}

std::string to_string(DomainKind kind) {
    return kind == DomainKind::Chain1d ? "chain-1d" : "grid-2d";
}

}  // namespace isph
