#include "isph/synthetic.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isph {

namespace {

struct Bump {
    double amplitude;    // negative for craters
    double x_fraction;   // center, as fraction of (cols - 1)
    double y_fraction;   // center, as fraction of (rows - 1)
    double sigma_x;      // widths, as fraction of the extents
    double sigma_y;
};

// Sum of axis-aligned Gaussian bumps evaluated on the grid.
ScalarField gaussian_grid(GridDims dims, const std::vector<Bump>& bumps,
                          GridConnectivity connectivity) {
    const double width = static_cast<double>(dims.cols - 1);
    const double height = static_cast<double>(dims.rows - 1);
    std::vector<double> values(dims.rows * dims.cols, 0.0);
    std::size_t v = 0;
    for (std::size_t r = 0; r < dims.rows; ++r) {
        for (std::size_t c = 0; c < dims.cols; ++c, ++v) {
            double sum = 0.0;
            for (const Bump& bump : bumps) {
                const double dx = (static_cast<double>(c) - bump.x_fraction * width) /
                                  (bump.sigma_x * width);
                const double dy = (static_cast<double>(r) - bump.y_fraction * height) /
                                  (bump.sigma_y * height);
                sum += bump.amplitude * std::exp(-0.5 * (dx * dx + dy * dy));
            }
            values[v] = sum;
        }
    }
    return ScalarField::grid(std::move(values), dims, connectivity);
}

// Three peak ridges anchored on the bottom edge row. Every column decreases
// strictly away from that row, so the sublevel minima are exactly the top-row
// valleys and corners (3 finite pairs + 1 essential pair), and the superlevel
// maxima are exactly the three peaks.
ScalarField three_peaks_grid(GridDims dims, const std::vector<double>& amplitudes,
                             GridConnectivity connectivity) {
    std::vector<Bump> bumps;
    const double x_fractions[] = {0.2, 0.5, 0.8};
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        bumps.push_back({amplitudes[k], x_fractions[k], 0.0, 0.09, 0.7});
    }
    return gaussian_grid(dims, bumps, connectivity);
}

ScalarField oscillate_grid(GridDims dims, double t, double period,
                           GridConnectivity connectivity) {
    if (period <= 0.0) {
        throw std::invalid_argument("oscillate period must be positive");
    }
    // Fold t into [0, period) first so that t and t + period produce
    // bit-identical fields.
    double folded = std::fmod(t, period);
    if (folded < 0.0) folded += period;
    const double phase = 2.0 * std::numbers::pi * folded / period;
    std::vector<Bump> bumps;
    const double x_fractions[] = {0.15, 0.4, 0.65, 0.9};
    for (int k = 0; k < 4; ++k) {
        const double amplitude =
            0.6 + 0.3 * std::sin(phase + k * std::numbers::pi / 2.0);
        bumps.push_back({amplitude, x_fractions[k], 0.0, 0.055, 0.7});
    }
    return gaussian_grid(dims, bumps, connectivity);
}

ScalarField peaks_craters_grid(GridDims dims, bool peak_on_ridge,
                               GridConnectivity connectivity) {
    std::vector<Bump> bumps = {
        {-0.9, 0.30, 0.35, 0.10, 0.12},   // crater
        {-0.7, 0.75, 0.30, 0.10, 0.12},   // crater
        {0.95, 0.20, 0.75, 0.10, 0.12},   // peak
        {0.80, 0.60, 0.72, 0.10, 0.12},   // peak
    };
    // The small peak either sits on the ridge between the two large peaks or
    // on the plateau in the foreground; only its position differs.
    if (peak_on_ridge) {
        bumps.push_back({0.6, 0.40, 0.74, 0.07, 0.09});
    } else {
        bumps.push_back({0.6, 0.90, 0.80, 0.07, 0.09});
    }
    return gaussian_grid(dims, bumps, connectivity);
}

bool parse_oscillate(const std::string& name, double& t, double& period) {
    if (name.rfind("oscillate(", 0) != 0 || name.back() != ')') return false;
    const std::string args = name.substr(10, name.size() - 11);
    const auto comma = args.find(',');
    if (comma == std::string::npos) return false;
    const auto parse = [](const std::string& text, double& out) {
        const char* begin = text.data();
        const char* end = begin + text.size();
        const auto result = std::from_chars(begin, end, out);
        return result.ec == std::errc{} && result.ptr == end;
    };
    return parse(args.substr(0, comma), t) && parse(args.substr(comma + 1), period);
}

GridDims grid_resolution(GridDims requested) {
    if (requested.rows == 0 || requested.cols == 0) return {50, 100};
    return requested;
}

}  // namespace

std::vector<double> chain_profile(const std::string& name) {
    // Domain-order critical values; minima and maxima alternate. The fig1
    // pair shares one persistence diagram, as does the reeb pair, while the
    // arrangement of the valleys differs between the variants.
    if (name == "fig1-blue") return {0, 2, 1, 4, 3};
    if (name == "fig1-red") return {1, 2, 0, 4, 3};
    if (name == "reeb-1" || name == "stable") return {5, 2, 6, 3, 4, 1};
    if (name == "reeb-2" || name == "unstable") return {6, 3, 4, 2, 5, 1};
    throw std::invalid_argument(fmt::format("unknown chain case '{}'", name));
}

ScalarField field_from_profile(const std::vector<double>& profile,
                               std::size_t subdivisions) {
    if (profile.size() < 2) {
        throw std::invalid_argument("profile needs at least 2 critical values");
    }
    if (subdivisions == 0) subdivisions = 1;
    std::vector<double> values;
    values.reserve((profile.size() - 1) * subdivisions + 1);
    for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
        for (std::size_t step = 0; step < subdivisions; ++step) {
            const double s = static_cast<double>(step) / static_cast<double>(subdivisions);
            values.push_back(profile[i] + s * (profile[i + 1] - profile[i]));
        }
    }
    values.push_back(profile.back());
    return ScalarField::chain(std::move(values));
}

ScalarField synth_case(const std::string& name, GridDims resolution,
                       GridConnectivity connectivity) {
    if (name == "fig1-red" || name == "fig1-blue" || name == "reeb-1" ||
        name == "reeb-2" || name == "stable" || name == "unstable") {
        const std::size_t subdivisions = resolution.cols == 0 ? 1 : resolution.cols;
        return field_from_profile(chain_profile(name), subdivisions);
    }
    const GridDims dims = grid_resolution(resolution);
    if (name == "three-peaks") {
        return three_peaks_grid(dims, {0.8, 1.0, 0.9}, connectivity);
    }
    if (name == "three-peaks-ridge") {
        return three_peaks_grid(dims, {1.0, 0.9, 0.8}, connectivity);
    }
    if (name == "peaks-craters-1") {
        return peaks_craters_grid(dims, false, connectivity);
    }
    if (name == "peaks-craters-2") {
        return peaks_craters_grid(dims, true, connectivity);
    }
    double t = 0.0;
    double period = 0.0;
    if (parse_oscillate(name, t, period)) {
        return oscillate_grid(dims, t, period, connectivity);
    }
    throw std::invalid_argument(
        fmt::format("unknown synthetic case '{}'; known cases: {}", name,
                    fmt::join(synth_case_names(), ", ")));
}

const std::vector<std::string>& synth_case_names() {
    static const std::vector<std::string> names = {
        "fig1-red",       "fig1-blue",         "reeb-1",
        "reeb-2",         "stable",            "unstable",
        "three-peaks",    "three-peaks-ridge", "peaks-craters-1",
        "peaks-craters-2", "oscillate(t,period)",
    };
    return names;
}

}  // namespace isph
