#include "isph/filtration.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <ostream>

namespace isph {

namespace {

// Union-find over vertex ids where every root is the generator (the oldest
// minimum) of its component. Unions must therefore always keep the older
// root; path compression is safe because only roots carry state.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n, kUnset) {}

    void make_set(VertexId v) { parent_[v] = v; }

    bool contains(VertexId v) const { return parent_[v] != kUnset; }

    VertexId find(VertexId v) {
        VertexId root = v;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[v] != root) {
            const VertexId next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    void attach(VertexId v, VertexId root) { parent_[v] = root; }

private:
    static constexpr VertexId kUnset = static_cast<VertexId>(-1);
    std::vector<VertexId> parent_;
};

}  // namespace

std::pair<PersistenceDiagram, PairingTrace> compute_pairs(const ScalarField& field,
                                                          const VertexOrder& order) {
    const std::size_t n = field.size();
    UnionFind uf(n);
    std::vector<VertexId> component_max(n);

    PersistenceDiagram diagram;
    PairingTrace trace;
    trace.basin.resize(n);
    trace.critical.resize(n);

    std::vector<VertexId> roots;
    for (const VertexId v : order.sorted) {
        roots.clear();
        VertexId lowest_neighbor = v;
        for (const VertexId w : field.neighbors(v)) {
            if (!uf.contains(w)) continue;
            if (lowest_neighbor == v || order.precedes(w, lowest_neighbor)) {
                lowest_neighbor = w;
            }
            const VertexId root = uf.find(w);
            if (std::find(roots.begin(), roots.end(), root) == roots.end()) {
                roots.push_back(root);
            }
        }

        if (roots.empty()) {
            uf.make_set(v);
            component_max[v] = v;
            trace.basin[v] = v;
            trace.critical[v] = CriticalClass::Minimum;
            continue;
        }

        trace.basin[v] = trace.basin[lowest_neighbor];
        if (roots.size() == 1) {
            trace.critical[v] = CriticalClass::Regular;
        } else {
            trace.critical[v] = CriticalClass::Merge;
            // Elder rule: the oldest generator survives every sub-merge; the
            // others die at v in ascending order of their own value.
            std::sort(roots.begin(), roots.end(),
                      [&](VertexId a, VertexId b) { return order.precedes(a, b); });
            for (std::size_t i = 1; i < roots.size(); ++i) {
                diagram.pairs.push_back({roots[i], v, field.value(roots[i]), field.value(v), false});
                trace.merge_events.push_back({v, roots[0], roots[i]});
                uf.attach(roots[i], roots[0]);
            }
        }
        uf.attach(v, roots[0]);
        component_max[roots[0]] = v;
    }

    for (const VertexId v : order.sorted) {
        if (trace.critical[v] == CriticalClass::Minimum && uf.find(v) == v) {
            const VertexId top = component_max[v];
            diagram.pairs.push_back({v, top, field.value(v), field.value(top), true});
        }
    }

    std::sort(diagram.pairs.begin(), diagram.pairs.end(),
              [](const PersistencePair& a, const PersistencePair& b) {
                  if (a.birth != b.birth) return a.birth < b.birth;
                  if (a.death != b.death) return a.death < b.death;
                  return a.creator < b.creator;
              });
    return {std::move(diagram), std::move(trace)};
}

void write_diagram_tsv(const PersistenceDiagram& diagram, std::ostream& out, bool flip_sign) {
    const double sign = flip_sign ? -1.0 : 1.0;
    for (const PersistencePair& pair : diagram.pairs) {
        out << fmt::format("{}\t{}\t{}\t{}\t{}\n", sign * pair.birth, sign * pair.death,
                           pair.creator, pair.destroyer, pair.essential ? 1 : 0);
    }
}

}  // namespace isph
