#include "isph/analysis.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <ostream>

namespace isph {

std::vector<std::size_t> ranks(const PersistenceHierarchy& hierarchy) {
    const auto children = hierarchy.children();
    std::vector<std::size_t> result(hierarchy.size(), 0);

    // Iterative post-order: accumulate descendant counts child -> parent.
    std::vector<std::pair<std::size_t, bool>> stack;
    for (const std::size_t root : hierarchy.roots()) {
        stack.emplace_back(root, false);
        while (!stack.empty()) {
            auto [node, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                for (const std::size_t child : children[node]) {
                    result[node] += result[child] + 1;
                }
            } else {
                stack.emplace_back(node, true);
                for (const std::size_t child : children[node]) {
                    stack.emplace_back(child, false);
                }
            }
        }
    }
    return result;
}

double edge_stability(const PersistenceHierarchy& hierarchy, std::size_t node_a,
                      std::size_t node_b) {
    const PersistencePair& a = hierarchy.nodes[node_a];
    const PersistencePair& b = hierarchy.nodes[node_b];
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

std::vector<double> vertex_stability(const PersistenceHierarchy& hierarchy) {
    std::vector<double> result(hierarchy.size());
    for (std::size_t i = 0; i < hierarchy.size(); ++i) {
        result[i] = persistence(hierarchy.nodes[i]);
    }
    for (std::size_t child = 0; child < hierarchy.parent.size(); ++child) {
        const std::size_t parent = hierarchy.parent[child];
        if (parent == kNoParent) continue;
        result[parent] = std::min(result[parent], edge_stability(hierarchy, parent, child));
    }
    return result;
}

void write_analysis_tsv(const PersistenceHierarchy& hierarchy, std::ostream& out,
                        bool flip_sign) {
    const double sign = flip_sign ? -1.0 : 1.0;
    const auto rank_map = ranks(hierarchy);
    const auto stability = vertex_stability(hierarchy);
    for (std::size_t i = 0; i < hierarchy.size(); ++i) {
        const PersistencePair& pair = hierarchy.nodes[i];
        out << fmt::format("{}\t{}\t{}\t{}\n", sign * pair.birth, sign * pair.death,
                           rank_map[i], stability[i]);
    }
}

}  // namespace isph
