// Python bindings for the core operations: field construction and IO,
// pairing, hierarchies, ranks/stability, and the dissimilarity measures.

#include <fmt/format.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "isph/analysis.hpp"
#include "isph/dissimilarity.hpp"
#include "isph/filtration.hpp"
#include "isph/hierarchy.hpp"
#include "isph/io.hpp"
#include "isph/synthetic.hpp"

namespace py = pybind11;
using namespace isph;

namespace {

GridConnectivity connectivity_from(int value) {
    if (value != 4 && value != 8) {
        throw std::invalid_argument("connectivity must be 4 or 8");
    }
    return value == 8 ? GridConnectivity::Eight : GridConnectivity::Four;
}

std::vector<std::optional<std::size_t>> parents_of(const PersistenceHierarchy& hierarchy) {
    std::vector<std::optional<std::size_t>> result;
    result.reserve(hierarchy.parent.size());
    for (const std::size_t p : hierarchy.parent) {
        result.push_back(p == kNoParent ? std::nullopt : std::optional<std::size_t>(p));
    }
    return result;
}

}  // namespace

PYBIND11_MODULE(isph, m) {
    m.doc() = "Zero-dimensional persistence pairs, interlevel set persistence "
              "hierarchies, and hierarchy-based dissimilarities for scalar fields";

    py::class_<PersistencePair>(m, "PersistencePair")
        .def_readonly("creator", &PersistencePair::creator)
        .def_readonly("destroyer", &PersistencePair::destroyer)
        .def_readonly("birth", &PersistencePair::birth)
        .def_readonly("death", &PersistencePair::death)
        .def_readonly("essential", &PersistencePair::essential)
        .def("__repr__", [](const PersistencePair& pair) {
            return fmt::format("PersistencePair(birth={}, death={}, creator={}, destroyer={}{})",
                               pair.birth, pair.death, pair.creator, pair.destroyer,
                               pair.essential ? ", essential" : "");
        });
    m.def("persistence", [](const PersistencePair& pair) { return persistence(pair); });

    py::class_<PersistenceDiagram>(m, "PersistenceDiagram")
        .def_property_readonly(
            "pairs", [](const PersistenceDiagram& diagram) { return diagram.pairs; })
        .def("__len__", &PersistenceDiagram::size);

    py::class_<PairingTrace>(m, "PairingTrace")
        .def_readonly("basin", &PairingTrace::basin)
        .def_property_readonly("merge_count",
                               [](const PairingTrace& trace) { return trace.merge_events.size(); });

    py::class_<ScalarField>(m, "ScalarField")
        .def_property_readonly("values", &ScalarField::values)
        .def_property_readonly("domain_kind",
                               [](const ScalarField& field) {
                                   return to_string(field.domain_kind());
                               })
        .def_property_readonly("dims",
                               [](const ScalarField& field) {
                                   return std::make_pair(field.dims().rows, field.dims().cols);
                               })
        .def("neighbors",
             [](const ScalarField& field, VertexId v) {
                 const auto view = field.neighbors(v);
                 return std::vector<VertexId>(view.begin(), view.end());
             })
        .def("__len__", &ScalarField::size)
        .def("__eq__", [](const ScalarField& a, const ScalarField& b) { return a == b; });

    m.def("chain_field", &ScalarField::chain, py::arg("values"));
    m.def(
        "grid_field",
        [](std::vector<double> values, std::size_t rows, std::size_t cols, int connectivity) {
            return ScalarField::grid(std::move(values), {rows, cols},
                                     connectivity_from(connectivity));
        },
        py::arg("values"), py::arg("rows"), py::arg("cols"), py::arg("connectivity") = 4);
    m.def("negate", &negate, py::arg("field"));
    m.def(
        "total_order",
        [](const ScalarField& field) { return total_order(field).sorted; },
        py::arg("field"));
    m.def(
        "synth_case",
        [](const std::string& name, std::size_t rows, std::size_t cols, int connectivity) {
            return synth_case(name, {rows, cols}, connectivity_from(connectivity));
        },
        py::arg("name"), py::arg("rows") = 0, py::arg("cols") = 0, py::arg("connectivity") = 4);

    m.def(
        "load_field",
        [](const std::string& path, int connectivity) {
            return load_field(path, connectivity_from(connectivity));
        },
        py::arg("path"), py::arg("connectivity") = 4);
    m.def(
        "write_field",
        [](const ScalarField& field, const std::string& path) { write_field(field, path); },
        py::arg("field"), py::arg("path"));

    m.def(
        "compute_pairs",
        [](const ScalarField& field) { return compute_pairs(field); },
        py::arg("field"));

    py::enum_<HierarchyVariant>(m, "HierarchyVariant")
        .value("REGULAR", HierarchyVariant::Regular)
        .value("ISPH", HierarchyVariant::Isph);

    py::class_<PersistenceHierarchy>(m, "PersistenceHierarchy")
        .def_property_readonly(
            "nodes", [](const PersistenceHierarchy& hierarchy) { return hierarchy.nodes; })
        .def_property_readonly("parent", &parents_of)
        .def_property_readonly("variant",
                               [](const PersistenceHierarchy& hierarchy) {
                                   return hierarchy.variant == HierarchyVariant::Isph
                                              ? "isph"
                                              : "regular";
                               })
        .def("__len__", &PersistenceHierarchy::size)
        .def("to_json", [](const PersistenceHierarchy& hierarchy, bool flip_sign) {
            return hierarchy_to_json(hierarchy, flip_sign);
        }, py::arg("flip_sign") = false);

    m.def("build_regular_hierarchy", &build_regular_hierarchy, py::arg("trace"),
          py::arg("diagram"));
    m.def("build_isph", &build_isph, py::arg("field"), py::arg("trace"), py::arg("diagram"));
    m.def("interlevel_connected", &interlevel_connected, py::arg("field"), py::arg("trace"),
          py::arg("cp_a"), py::arg("cp_b"), py::arg("y_l"), py::arg("y_u"));

    m.def("ranks", &ranks, py::arg("hierarchy"));
    m.def("edge_stability", &edge_stability, py::arg("hierarchy"), py::arg("node_a"),
          py::arg("node_b"));
    m.def("vertex_stability", &vertex_stability, py::arg("hierarchy"));

    m.def("tree_edit_distance", &tree_edit_distance, py::arg("h1"), py::arg("h2"));
    m.def("wasserstein", &wasserstein, py::arg("d1"), py::arg("d2"), py::arg("q") = 2.0);
    m.def(
        "distance_matrix",
        [](const std::vector<ScalarField>& fields, const std::string& measure, double q,
           std::size_t threads) {
            DistanceMeasure config;
            if (measure == "isph-ted") {
                config.kind = MeasureKind::IsphTed;
            } else if (measure == "wasserstein") {
                config.kind = MeasureKind::Wasserstein;
            } else {
                throw std::invalid_argument("measure must be 'isph-ted' or 'wasserstein'");
            }
            config.q = q;
            const auto matrix = distance_matrix(fields, config, threads);
            std::vector<std::vector<double>> rows(matrix.n, std::vector<double>(matrix.n));
            for (std::size_t i = 0; i < matrix.n; ++i) {
                for (std::size_t j = 0; j < matrix.n; ++j) rows[i][j] = matrix.at(i, j);
            }
            return rows;
        },
        py::arg("fields"), py::arg("measure") = "isph-ted", py::arg("q") = 2.0,
        py::arg("threads") = 0);
}
