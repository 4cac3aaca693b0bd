#include "isph/io.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace isph {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}", line, message) : message),
      line_(line) {}

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

double parse_number(const std::string& token, std::size_t line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ParseError(line, fmt::format("cannot parse number '{}'", token));
    }
    return value;
}

}  // namespace

ScalarField load_field_1d(std::istream& in) {
    std::vector<double> values;
    bool has_abscissa = false;
    double previous_abscissa = 0.0;

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) continue;
        if (tokens.size() > 2) {
            throw ParseError(line_number, "expected one or two columns");
        }
        if (values.empty()) {
            has_abscissa = tokens.size() == 2;
        } else if (has_abscissa != (tokens.size() == 2)) {
            throw ParseError(line_number, "inconsistent column count");
        }
        if (has_abscissa) {
            const double abscissa = parse_number(tokens[0], line_number);
            if (!values.empty() && abscissa <= previous_abscissa) {
                throw ParseError(line_number, "abscissa must be strictly increasing");
            }
            previous_abscissa = abscissa;
        }
        values.push_back(parse_number(tokens.back(), line_number));
    }
    if (values.size() < 2) {
        throw ParseError(line_number, "degenerate domain: need at least 2 samples");
    }
    return ScalarField::chain(std::move(values));
}

namespace {

// Line-oriented reader that tracks the current line number for error
// reporting and skips blank lines.
class VtkReader {
public:
    explicit VtkReader(std::istream& in) : in_(in) {}

    bool next_line(std::string& line) {
        while (std::getline(in_, line)) {
            ++line_number_;
            if (!tokenize(line).empty()) return true;
        }
        return false;
    }

    std::size_t line_number() const { return line_number_; }

private:
    std::istream& in_;
    std::size_t line_number_ = 0;
};

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

ScalarField load_grid_vtk(std::istream& in, GridConnectivity connectivity) {
    VtkReader reader(in);
    std::string line;

    if (!reader.next_line(line) || line.rfind("# vtk DataFile", 0) != 0) {
        throw ParseError(reader.line_number(), "missing '# vtk DataFile' header");
    }
    if (!reader.next_line(line)) {
        throw ParseError(reader.line_number(), "missing title line");
    }
    if (!reader.next_line(line)) {
        throw ParseError(reader.line_number(), "missing encoding line");
    }
    const std::string encoding = upper(tokenize(line)[0]);
    if (encoding == "BINARY") {
        throw ParseError(reader.line_number(), "binary VTK encoding is not supported");
    }
    if (encoding != "ASCII") {
        throw ParseError(reader.line_number(), fmt::format("unknown encoding '{}'", line));
    }

    if (!reader.next_line(line)) {
        throw ParseError(reader.line_number(), "missing DATASET line");
    }
    auto tokens = tokenize(line);
    if (upper(tokens[0]) != "DATASET" || tokens.size() < 2 ||
        upper(tokens[1]) != "STRUCTURED_POINTS") {
        throw ParseError(reader.line_number(), "expected DATASET STRUCTURED_POINTS");
    }

    std::size_t nx = 0;
    std::size_t ny = 0;
    bool have_dimensions = false;
    std::size_t point_count = 0;
    bool have_point_data = false;

    // DIMENSIONS / ORIGIN / SPACING may appear in any order before POINT_DATA.
    while (reader.next_line(line)) {
        tokens = tokenize(line);
        const std::string keyword = upper(tokens[0]);
        if (keyword == "DIMENSIONS") {
            if (tokens.size() != 4) {
                throw ParseError(reader.line_number(), "DIMENSIONS needs three extents");
            }
            nx = static_cast<std::size_t>(parse_number(tokens[1], reader.line_number()));
            ny = static_cast<std::size_t>(parse_number(tokens[2], reader.line_number()));
            const auto nz = static_cast<std::size_t>(parse_number(tokens[3], reader.line_number()));
            if (nz != 1) {
                throw ParseError(reader.line_number(), "third dimension extent must be 1");
            }
            have_dimensions = true;
        } else if (keyword == "ORIGIN" || keyword == "SPACING" || keyword == "ASPECT_RATIO") {
            // Geometry does not affect the topology; accept and ignore.
        } else if (keyword == "POINT_DATA") {
            if (tokens.size() != 2) {
                throw ParseError(reader.line_number(), "POINT_DATA needs a point count");
            }
            point_count = static_cast<std::size_t>(parse_number(tokens[1], reader.line_number()));
            have_point_data = true;
            break;
        } else if (keyword == "CELL_DATA") {
            throw ParseError(reader.line_number(), "CELL_DATA is not supported; need POINT_DATA");
        } else {
            throw ParseError(reader.line_number(), fmt::format("unexpected keyword '{}'", tokens[0]));
        }
    }

    if (!have_dimensions) throw ParseError(reader.line_number(), "missing DIMENSIONS");
    if (!have_point_data) throw ParseError(reader.line_number(), "missing POINT_DATA");
    if (point_count != nx * ny) {
        throw ParseError(reader.line_number(),
                         fmt::format("POINT_DATA count {} does not match extents {}x{}",
                                     point_count, nx, ny));
    }

    if (!reader.next_line(line)) throw ParseError(reader.line_number(), "missing SCALARS");
    tokens = tokenize(line);
    if (upper(tokens[0]) != "SCALARS" || tokens.size() < 3) {
        throw ParseError(reader.line_number(), "expected SCALARS <name> <type> [components]");
    }
    if (tokens.size() >= 4 && tokens[3] != "1") {
        throw ParseError(reader.line_number(), "only single-component scalars are supported");
    }

    if (!reader.next_line(line)) throw ParseError(reader.line_number(), "missing LOOKUP_TABLE");
    tokens = tokenize(line);
    if (upper(tokens[0]) != "LOOKUP_TABLE") {
        throw ParseError(reader.line_number(), "expected LOOKUP_TABLE after SCALARS");
    }

    std::vector<double> values;
    values.reserve(point_count);
    while (values.size() < point_count && reader.next_line(line)) {
        tokens = tokenize(line);
        if (upper(tokens[0]) == "SCALARS") {
            throw ParseError(reader.line_number(), "expected exactly one SCALARS array");
        }
        for (const auto& token : tokens) {
            values.push_back(parse_number(token, reader.line_number()));
        }
    }
    if (values.size() != point_count) {
        throw ParseError(reader.line_number(),
                         fmt::format("expected {} scalar values, found {}", point_count,
                                     values.size()));
    }
    if (reader.next_line(line) && upper(tokenize(line)[0]) == "SCALARS") {
        throw ParseError(reader.line_number(), "expected exactly one SCALARS array");
    }

    return ScalarField::grid(std::move(values), GridDims{ny, nx}, connectivity);
}

void write_grid_vtk(const ScalarField& field, std::ostream& out, const std::string& array_name) {
    if (field.domain_kind() != DomainKind::Grid2d) {
        throw std::invalid_argument("write_grid_vtk needs a grid-2d field");
    }
    const auto dims = field.dims();
    out << "# vtk DataFile Version 3.0\n";
    out << "scalar field\n";
    out << "ASCII\n";
    out << "DATASET STRUCTURED_POINTS\n";
    out << fmt::format("DIMENSIONS {} {} 1\n", dims.cols, dims.rows);
    out << "ORIGIN 0 0 0\n";
    out << "SPACING 1 1 1\n";
    out << fmt::format("POINT_DATA {}\n", field.size());
    out << fmt::format("SCALARS {} double 1\n", array_name);
    out << "LOOKUP_TABLE default\n";
    for (double value : field.values()) {
        out << fmt::format("{}\n", value);
    }
}

void write_field_1d(const ScalarField& field, std::ostream& out) {
    if (field.domain_kind() != DomainKind::Chain1d) {
        throw std::invalid_argument("write_field_1d needs a chain-1d field");
    }
    for (double value : field.values()) {
        out << fmt::format("{}\n", value);
    }
}

ScalarField load_field(const std::string& path, GridConnectivity connectivity) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot open '{}'", path));
    }
    std::string first_line;
    std::getline(in, first_line);
    in.seekg(0);
    if (first_line.rfind("# vtk DataFile", 0) == 0) {
        return load_grid_vtk(in, connectivity);
    }
    return load_field_1d(in);
}

void write_field(const ScalarField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
    }
    if (field.domain_kind() == DomainKind::Grid2d) {
        write_grid_vtk(field, out);
    } else {
        write_field_1d(field, out);
    }
}

}  // namespace isph
