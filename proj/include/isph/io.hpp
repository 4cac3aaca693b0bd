#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "isph/scalar_field.hpp"

namespace isph {

/// Input that cannot be parsed. `line` is 1-based and refers to the line
/// where the problem was detected (0 when no line applies).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads a 1d function from plain text: one or two whitespace-separated
/// numbers per line, `#` starts a comment. With two columns the first is the
/// abscissa and must be strictly increasing; the last column is the value.
ScalarField load_field_1d(std::istream& in);

/// Reads a legacy ASCII VTK structured-points dataset with a single scalar
/// point-data array. The third dimension extent must be 1.
ScalarField load_grid_vtk(std::istream& in,
                          GridConnectivity connectivity = GridConnectivity::Four);

/// Writes a grid field as legacy ASCII VTK structured points with full
/// round-trip decimal precision.
void write_grid_vtk(const ScalarField& field, std::ostream& out,
                    const std::string& array_name = "scalars");

/// Writes a chain field as plain text, one value per line.
void write_field_1d(const ScalarField& field, std::ostream& out);

// Path-based conveniences. load_field auto-detects the format from content.
ScalarField load_field(const std::string& path,
                       GridConnectivity connectivity = GridConnectivity::Four);
void write_field(const ScalarField& field, const std::string& path);

}  // namespace isph
