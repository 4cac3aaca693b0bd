// Command-line front end: computes persistence diagrams, hierarchies,
// rank/stability tables and pairwise distance matrices for scalar fields.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "isph/analysis.hpp"
#include "isph/dissimilarity.hpp"
#include "isph/filtration.hpp"
#include "isph/hierarchy.hpp"
#include "isph/io.hpp"
#include "isph/synthetic.hpp"

namespace {

struct Options {
    std::vector<std::string> inputs;
    std::string synth;
    std::string mode = "sublevel";
    std::string variant = "isph";
    int connectivity = 4;
    std::string resolution;
    std::string measure = "isph-ted";
    double q = 2.0;
    int steps = 12;
    double period = 4.0;
    std::string output;
    std::string format;
    long long seed = 20240811;   // reserved for randomized tooling
};

isph::GridDims parse_resolution(const std::string& text) {
    if (text.empty()) return {};
    const auto sep = text.find_first_of("xX");
    try {
        if (sep == std::string::npos) {
            return {0, static_cast<std::size_t>(std::stoul(text))};
        }
        return {static_cast<std::size_t>(std::stoul(text.substr(0, sep))),
                static_cast<std::size_t>(std::stoul(text.substr(sep + 1)))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--resolution", "expected N or ROWSxCOLS");
    }
}

isph::GridConnectivity connectivity_of(const Options& options) {
    return options.connectivity == 8 ? isph::GridConnectivity::Eight
                                     : isph::GridConnectivity::Four;
}

bool superlevel(const Options& options) { return options.mode == "superlevel"; }

isph::ScalarField make_field(const Options& options) {
    isph::ScalarField field =
        !options.inputs.empty()
            ? isph::load_field(options.inputs.front(), connectivity_of(options))
            : isph::synth_case(options.synth, parse_resolution(options.resolution),
                               connectivity_of(options));
    return superlevel(options) ? isph::negate(field) : field;
}

std::vector<isph::ScalarField> make_field_list(const Options& options) {
    std::vector<isph::ScalarField> fields;
    if (!options.inputs.empty()) {
        for (const auto& path : options.inputs) {
            fields.push_back(isph::load_field(path, connectivity_of(options)));
        }
    } else {
        if (options.steps < 2) throw CLI::ValidationError("--steps", "need at least 2 steps");
        for (int t = 0; t < options.steps; ++t) {
            fields.push_back(isph::synth_case(
                fmt::format("{}({},{})", options.synth, t, options.period),
                parse_resolution(options.resolution), connectivity_of(options)));
        }
    }
    if (superlevel(options)) {
        for (auto& field : fields) field = isph::negate(field);
    }
    return fields;
}

// Writes to --output or standard output.
class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void add_field_options(CLI::App* cmd, Options& options, bool multiple_inputs = false) {
    auto* input = cmd->add_option("--input", options.inputs,
                                  multiple_inputs ? "input field file(s)" : "input field file");
    if (!multiple_inputs) input->expected(1);
    auto* synth = cmd->add_option("--synth", options.synth, "synthetic case name");
    input->excludes(synth);
    synth->excludes(input);
    cmd->add_option("--mode", options.mode, "sublevel or superlevel")
        ->check(CLI::IsMember({"sublevel", "superlevel"}))
        ->capture_default_str();
    cmd->add_option("--connectivity", options.connectivity, "grid connectivity")
        ->check(CLI::IsMember({4, 8}))
        ->capture_default_str();
    cmd->add_option("--resolution", options.resolution,
                    "ROWSxCOLS for grids, samples per segment for chains");
    cmd->add_option("--output", options.output, "output path (default: stdout)");
    cmd->add_option("--seed", options.seed, "seed for randomized tooling")
        ->capture_default_str();
    cmd->callback([cmd, &options] {
        if (options.inputs.empty() && options.synth.empty()) {
            throw CLI::RequiredError(cmd->get_name() + " needs --input or --synth");
        }
    });
}

isph::HierarchyVariant variant_of(const Options& options) {
    return options.variant == "regular" ? isph::HierarchyVariant::Regular
                                        : isph::HierarchyVariant::Isph;
}

int run_diagram(const Options& options) {
    const auto field = make_field(options);
    const auto [diagram, trace] = isph::compute_pairs(field);
    OutputStream out(options.output);
    isph::write_diagram_tsv(diagram, out.get(), superlevel(options));
    return 0;
}

int run_hierarchy(const Options& options) {
    const auto field = make_field(options);
    const auto [diagram, trace] = isph::compute_pairs(field);
    const auto hierarchy = isph::build_hierarchy(field, trace, diagram, variant_of(options));
    OutputStream out(options.output);
    if (options.format == "json") {
        out.get() << isph::hierarchy_to_json(hierarchy, superlevel(options)) << "\n";
    } else {
        isph::write_hierarchy_dot(hierarchy, out.get(), superlevel(options));
    }
    return 0;
}

int run_analyze(const Options& options) {
    const auto field = make_field(options);
    const auto [diagram, trace] = isph::compute_pairs(field);
    const auto hierarchy = isph::build_hierarchy(field, trace, diagram, variant_of(options));
    OutputStream out(options.output);
    isph::write_analysis_tsv(hierarchy, out.get(), superlevel(options));
    return 0;
}

int run_distmat(const Options& options) {
    const auto fields = make_field_list(options);
    isph::DistanceMeasure measure;
    measure.kind = options.measure == "wasserstein" ? isph::MeasureKind::Wasserstein
                                                    : isph::MeasureKind::IsphTed;
    measure.q = options.q;
    const auto matrix = isph::distance_matrix(fields, measure);
    OutputStream out(options.output);
    isph::write_distance_matrix(matrix, out.get(), options.format == "triplets");
    return 0;
}

int run_field(const Options& options) {
    const auto field = make_field(options);
    OutputStream out(options.output);
    if (field.domain_kind() == isph::DomainKind::Grid2d) {
        isph::write_grid_vtk(field, out.get());
    } else {
        isph::write_field_1d(field, out.get());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistence pairs, interlevel set persistence hierarchies and "
                 "hierarchy-based dissimilarities for scalar fields"};
    app.require_subcommand(1);
    Options options;

    auto* diagram = app.add_subcommand("diagram", "write the persistence diagram as TSV");
    add_field_options(diagram, options);

    auto* hierarchy = app.add_subcommand("hierarchy", "write the persistence hierarchy");
    add_field_options(hierarchy, options);
    hierarchy->add_option("--variant", options.variant, "regular or isph")
        ->check(CLI::IsMember({"regular", "isph"}))
        ->capture_default_str();
    hierarchy->add_option("--format", options.format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->default_str("dot");

    auto* analyze = app.add_subcommand("analyze", "write the birth/death/rank/stability table");
    add_field_options(analyze, options);
    analyze->add_option("--variant", options.variant, "regular or isph")
        ->check(CLI::IsMember({"regular", "isph"}))
        ->capture_default_str();

    auto* distmat = app.add_subcommand("distmat", "pairwise distance matrix over fields");
    add_field_options(distmat, options, /*multiple_inputs=*/true);
    distmat->add_option("--measure", options.measure, "isph-ted or wasserstein")
        ->check(CLI::IsMember({"isph-ted", "wasserstein"}))
        ->capture_default_str();
    distmat->add_option("--q", options.q, "Wasserstein exponent")->capture_default_str();
    distmat->add_option("--steps", options.steps, "number of synthetic timesteps")
        ->capture_default_str();
    distmat->add_option("--period", options.period, "synthetic oscillation period")
        ->capture_default_str();
    distmat->add_option("--format", options.format, "tsv (dense) or triplets")
        ->check(CLI::IsMember({"tsv", "triplets"}))
        ->default_str("tsv");

    auto* field = app.add_subcommand("field", "write the field itself (VTK for grids)");
    add_field_options(field, options);

    CLI11_PARSE(app, argc, argv);

    try {
        if (diagram->parsed()) return run_diagram(options);
        if (hierarchy->parsed()) return run_hierarchy(options);
        if (analyze->parsed()) return run_analyze(options);
        if (distmat->parsed()) return run_distmat(options);
        if (field->parsed()) return run_field(options);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
