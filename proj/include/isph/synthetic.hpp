#pragma once

#include <string>
#include <vector>

#include "isph/scalar_field.hpp"

namespace isph {

/// Deterministic benchmark fields. `name` is one of
///
///   fig1-red, fig1-blue, reeb-1, reeb-2, stable, unstable      (chain-1d)
///   three-peaks, three-peaks-ridge,
///   peaks-craters-1, peaks-craters-2, oscillate(t,period)      (grid-2d)
///
/// For chain cases `resolution.cols` is the number of samples per monotone
/// segment (1 = critical points only, the default). For grid cases
/// `resolution` is rows x cols and defaults to 50 x 100 (5,000 cells).
/// Repeated generation is bit-identical. Unknown names throw.
ScalarField synth_case(const std::string& name, GridDims resolution = {},
                       GridConnectivity connectivity = GridConnectivity::Four);

/// The critical values of a chain case in domain order. Tests use this to
/// perturb a single critical value and regenerate the field.
std::vector<double> chain_profile(const std::string& name);

/// Builds a chain field from a critical-value profile, subdividing each
/// monotone segment with `subdivisions` linear steps. Monotone interpolation
/// guarantees that no critical points appear beyond the profile entries.
ScalarField field_from_profile(const std::vector<double>& profile,
                               std::size_t subdivisions = 1);

const std::vector<std::string>& synth_case_names();

}  // namespace isph
