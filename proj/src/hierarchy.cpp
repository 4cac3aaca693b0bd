#include "isph/hierarchy.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace isph {

std::vector<std::vector<std::size_t>> PersistenceHierarchy::children() const {
    std::vector<std::vector<std::size_t>> result(nodes.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
        if (parent[i] != kNoParent) result[parent[i]].push_back(i);
    }
    return result;
}

std::vector<std::size_t> PersistenceHierarchy::roots() const {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        if (parent[i] == kNoParent) result.push_back(i);
    }
    return result;
}

namespace {

std::unordered_map<VertexId, std::size_t> node_by_creator(const PersistenceDiagram& diagram) {
    std::unordered_map<VertexId, std::size_t> index;
    index.reserve(diagram.size());
    for (std::size_t i = 0; i < diagram.pairs.size(); ++i) {
        index.emplace(diagram.pairs[i].creator, i);
    }
    return index;
}

PersistenceHierarchy hierarchy_skeleton(const PersistenceDiagram& diagram,
                                        HierarchyVariant variant) {
    PersistenceHierarchy hierarchy;
    hierarchy.nodes = diagram.pairs;
    hierarchy.parent.assign(diagram.size(), kNoParent);
    hierarchy.variant = variant;
    return hierarchy;
}

}  // namespace

PersistenceHierarchy build_regular_hierarchy(const PairingTrace& trace,
                                             const PersistenceDiagram& diagram) {
    PersistenceHierarchy hierarchy = hierarchy_skeleton(diagram, HierarchyVariant::Regular);
    const auto node_of = node_by_creator(diagram);
    for (const MergeEvent& event : trace.merge_events) {
        hierarchy.parent[node_of.at(event.younger_generator)] =
            node_of.at(event.older_generator);
    }
    return hierarchy;
}

bool interlevel_connected(const ScalarField& field, const PairingTrace& trace,
                          VertexId cp_a, VertexId cp_b, double y_l, double y_u) {
    if (cp_a == cp_b) return true;

    const auto admissible = [&](VertexId v) {
        const double value = field.value(v);
        if (value < y_l || value > y_u) return false;
        if (trace.critical[v] == CriticalClass::Merge) return true;
        return trace.basin[v] == cp_a || trace.basin[v] == cp_b;
    };
    if (!admissible(cp_a) || !admissible(cp_b)) return false;

    std::vector<bool> seen(field.size(), false);
    std::deque<VertexId> queue;
    seen[cp_a] = true;
    queue.push_back(cp_a);
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const VertexId w : field.neighbors(v)) {
            if (seen[w] || !admissible(w)) continue;
            if (w == cp_b) return true;
            seen[w] = true;
            queue.push_back(w);
        }
    }
    return false;
}

PersistenceHierarchy build_isph(const ScalarField& field, const PairingTrace& trace,
                                const PersistenceDiagram& diagram) {
    PersistenceHierarchy hierarchy = hierarchy_skeleton(diagram, HierarchyVariant::Isph);
    const auto node_of = node_by_creator(diagram);

    // highest[g] is the highest minimum along the branch of the live
    // component generated by g; the assignment is trivial while highest == g.
    std::unordered_map<VertexId, VertexId> highest;
    highest.reserve(diagram.size());
    for (const PersistencePair& pair : diagram.pairs) highest.emplace(pair.creator, pair.creator);

    for (const MergeEvent& event : trace.merge_events) {
        const VertexId older = event.older_generator;
        const VertexId younger = event.younger_generator;
        const std::size_t node = node_of.at(younger);

        const VertexId h_old = highest.at(older);
        const VertexId h_young = highest.at(younger);
        if (h_old == older && h_young == younger) {
            hierarchy.parent[node] = node_of.at(older);
            highest[older] = younger;
            continue;
        }

        const double y_l = std::min(field.value(h_old), field.value(h_young));
        const double y_u = field.value(event.at);
        if (interlevel_connected(field, trace, h_old, h_young, y_l, y_u)) {
            // The branch is prolonged below the previous highest minimum.
            hierarchy.parent[node] = node_of.at(h_old);
            highest[older] = h_young;
        } else {
            // Two branches close at the merge vertex; the surviving
            // component starts over with a trivial assignment.
            hierarchy.parent[node] = node_of.at(older);
            highest[older] = older;
        }
    }
    return hierarchy;
}

PersistenceHierarchy build_hierarchy(const ScalarField& field, const PairingTrace& trace,
                                     const PersistenceDiagram& diagram,
                                     HierarchyVariant variant) {
    return variant == HierarchyVariant::Regular ? build_regular_hierarchy(trace, diagram)
                                                : build_isph(field, trace, diagram);
}

void write_hierarchy_dot(const PersistenceHierarchy& hierarchy, std::ostream& out,
                         bool flip_sign) {
    const double sign = flip_sign ? -1.0 : 1.0;
    out << "digraph hierarchy {\n";
    for (std::size_t i = 0; i < hierarchy.nodes.size(); ++i) {
        const PersistencePair& pair = hierarchy.nodes[i];
        out << fmt::format("  n{} [label=\"({},{})\"];\n", i, sign * pair.birth,
                           sign * pair.death);
    }
    for (std::size_t i = 0; i < hierarchy.parent.size(); ++i) {
        if (hierarchy.parent[i] != kNoParent) {
            out << fmt::format("  n{} -> n{};\n", hierarchy.parent[i], i);
        }
    }
    out << "}\n";
}

std::string hierarchy_to_json(const PersistenceHierarchy& hierarchy, bool flip_sign) {
    const double sign = flip_sign ? -1.0 : 1.0;
    nlohmann::json doc;
    doc["variant"] = hierarchy.variant == HierarchyVariant::Isph ? "isph" : "regular";
    doc["nodes"] = nlohmann::json::array();
    for (const PersistencePair& pair : hierarchy.nodes) {
        doc["nodes"].push_back({{"birth", sign * pair.birth},
                                {"death", sign * pair.death},
                                {"creator", pair.creator},
                                {"destroyer", pair.destroyer},
                                {"essential", pair.essential}});
    }
    doc["parent"] = nlohmann::json::array();
    for (const std::size_t p : hierarchy.parent) {
        if (p == kNoParent) {
            doc["parent"].push_back(nullptr);
        } else {
            doc["parent"].push_back(p);
        }
    }
    return doc.dump(2);
}

}  // namespace isph
