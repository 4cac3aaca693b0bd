#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace isph::oracle {

namespace {

// Connected components of the currently inserted vertex subset; each
// component is represented by its oldest vertex under `precedes`.
std::vector<VertexId> component_reps(const ScalarField& field, const VertexOrder& order,
                                     const std::vector<bool>& inserted,
                                     std::vector<VertexId>& rep_of) {
    const std::size_t n = field.size();
    rep_of.assign(n, static_cast<VertexId>(-1));
    std::vector<VertexId> reps;
    for (VertexId seed = 0; seed < n; ++seed) {
        if (!inserted[seed] || rep_of[seed] != static_cast<VertexId>(-1)) continue;
        std::deque<VertexId> queue{seed};
        std::vector<VertexId> members;
        rep_of[seed] = seed;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            members.push_back(v);
            for (const VertexId w : field.neighbors(v)) {
                if (!inserted[w] || rep_of[w] != static_cast<VertexId>(-1)) continue;
                rep_of[w] = seed;
                queue.push_back(w);
            }
        }
        VertexId oldest = members.front();
        for (const VertexId v : members) {
            if (order.precedes(v, oldest)) oldest = v;
        }
        for (const VertexId v : members) rep_of[v] = oldest;
        reps.push_back(oldest);
    }
    return reps;
}

void sort_canonically(std::vector<PersistencePair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death != b.death) return a.death < b.death;
        return a.creator < b.creator;
    });
}

}  // namespace

std::vector<PersistencePair> brute_force_pairs(const ScalarField& field) {
    const VertexOrder order = total_order(field);
    const std::size_t n = field.size();
    std::vector<bool> inserted(n, false);
    std::vector<VertexId> rep_before(n);
    std::vector<VertexId> rep_after(n);
    std::vector<PersistencePair> pairs;

    for (const VertexId u : order.sorted) {
        component_reps(field, order, inserted, rep_before);
        inserted[u] = true;
        component_reps(field, order, inserted, rep_after);

        // Representatives of the old components that u's new component absorbed.
        std::set<VertexId> merged;
        for (VertexId v = 0; v < n; ++v) {
            if (v != u && inserted[v] && rep_after[v] == rep_after[u]) {
                merged.insert(rep_before[v]);
            }
        }
        if (merged.empty()) continue;   // u created a component
        std::vector<VertexId> mins(merged.begin(), merged.end());
        std::sort(mins.begin(), mins.end(),
                  [&](VertexId a, VertexId b) { return order.precedes(a, b); });
        for (std::size_t i = 1; i < mins.size(); ++i) {
            pairs.push_back({mins[i], u, field.value(mins[i]), field.value(u), false});
        }
    }

    component_reps(field, order, inserted, rep_after);
    std::map<VertexId, VertexId> component_top;
    for (VertexId v = 0; v < n; ++v) {
        auto [it, added] = component_top.emplace(rep_after[v], v);
        if (!added && order.precedes(it->second, v)) it->second = v;
    }
    for (const auto& [rep, top] : component_top) {
        pairs.push_back({rep, top, field.value(rep), field.value(top), true});
    }
    sort_canonically(pairs);
    return pairs;
}

std::vector<PersistencePair> direct_superlevel_pairs(const ScalarField& field) {
    // Descending sweep with a plain parent map; pairs reported in original
    // orientation: creators are maxima, deaths are merge values.
    const std::size_t n = field.size();
    std::vector<VertexId> ids(n);
    for (VertexId v = 0; v < n; ++v) ids[v] = v;
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
        const double fa = field.value(a);
        const double fb = field.value(b);
        return fa > fb || (fa == fb && a > b);
    });
    std::vector<std::uint32_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[ids[i]] = static_cast<std::uint32_t>(i);

    std::vector<VertexId> parent(n, static_cast<VertexId>(-1));
    const std::function<VertexId(VertexId)> find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    std::vector<PersistencePair> pairs;
    std::vector<VertexId> lowest(n);
    for (const VertexId u : ids) {
        std::vector<VertexId> roots;
        for (const VertexId w : field.neighbors(u)) {
            if (position[w] > position[u]) continue;
            const VertexId root = find(w);
            if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
        }
        if (roots.empty()) {
            parent[u] = u;
            lowest[u] = u;
            continue;
        }
        std::sort(roots.begin(), roots.end(),
                  [&](VertexId a, VertexId b) { return position[a] < position[b]; });
        for (std::size_t i = 1; i < roots.size(); ++i) {
            pairs.push_back({roots[i], u, field.value(roots[i]), field.value(u), false});
            parent[roots[i]] = roots[0];
        }
        parent[u] = roots[0];
        lowest[roots[0]] = u;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (parent[v] == v) {
            pairs.push_back({v, lowest[v], field.value(v), field.value(lowest[v]), true});
        }
    }
    sort_canonically(pairs);
    return pairs;
}

bool interval_connected_1d(const ScalarField& field, const PairingTrace& trace,
                           VertexId cp_a, VertexId cp_b, double y_l, double y_u) {
    const VertexId lo = std::min(cp_a, cp_b);
    const VertexId hi = std::max(cp_a, cp_b);
    for (VertexId v = lo; v <= hi; ++v) {
        if (field.value(v) < y_l || field.value(v) > y_u) return false;
        if (v == cp_a || v == cp_b) continue;
        if (trace.critical[v] == CriticalClass::Merge) continue;
        if (trace.basin[v] != cp_a && trace.basin[v] != cp_b) return false;
    }
    return true;
}

std::vector<std::size_t> closure_ranks(const PersistenceHierarchy& hierarchy) {
    const std::size_t n = hierarchy.size();
    std::vector<std::size_t> result(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t a = hierarchy.parent[v];
        while (a != kNoParent) {
            ++result[a];
            a = hierarchy.parent[a];
        }
    }
    return result;
}

namespace {

struct FlatTree {
    std::vector<PersistencePair> label;       // by postorder index
    std::vector<std::vector<bool>> ancestor;  // ancestor[a][d]
    std::size_t root = 0;
};

FlatTree flatten(const PersistenceHierarchy& hierarchy) {
    const auto roots = hierarchy.roots();
    if (hierarchy.size() == 0 || roots.size() != 1) {
        throw std::invalid_argument("enumerate_ted needs single-root hierarchies");
    }
    auto children = hierarchy.children();
    for (auto& list : children) {
        std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
            const auto& pa = hierarchy.nodes[a];
            const auto& pb = hierarchy.nodes[b];
            if (pa.birth != pb.birth) return pa.birth < pb.birth;
            return pa.death < pb.death;
        });
    }

    FlatTree tree;
    std::vector<std::size_t> postorder_of(hierarchy.size());
    const std::function<void(std::size_t)> walk = [&](std::size_t node) {
        for (const std::size_t child : children[node]) walk(child);
        postorder_of[node] = tree.label.size();
        tree.label.push_back(hierarchy.nodes[node]);
    };
    walk(roots[0]);

    const std::size_t n = tree.label.size();
    tree.ancestor.assign(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < hierarchy.size(); ++v) {
        std::size_t a = hierarchy.parent[v];
        while (a != kNoParent) {
            tree.ancestor[postorder_of[a]][postorder_of[v]] = true;
            a = hierarchy.parent[a];
        }
    }
    tree.root = postorder_of[roots[0]];
    return tree;
}

double linf(const PersistencePair& a, const PersistencePair& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

}  // namespace

double enumerate_ted(const PersistenceHierarchy& h1, const PersistenceHierarchy& h2) {
    const FlatTree t1 = flatten(h1);
    const FlatTree t2 = flatten(h2);
    const std::size_t n1 = t1.label.size();
    const std::size_t n2 = t2.label.size();

    constexpr std::size_t kSkip = static_cast<std::size_t>(-1);
    std::vector<std::size_t> image(n1, kSkip);
    std::vector<bool> used(n2, false);
    double best = std::numeric_limits<double>::infinity();

    const auto valid_with = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < i; ++k) {
            if (image[k] == kSkip) continue;
            if (image[k] >= j) return false;   // postorder must be preserved
            if (t1.ancestor[i][k] != t2.ancestor[j][image[k]]) return false;
            if (t1.ancestor[k][i] != t2.ancestor[image[k]][j]) return false;
        }
        return true;
    };

    const std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == n1) {
            if (image[t1.root] != t2.root) return;   // roots must be matched
            double cost = 0.0;
            for (std::size_t k = 0; k < n1; ++k) {
                cost += image[k] == kSkip ? persistence(t1.label[k])
                                          : linf(t1.label[k], t2.label[image[k]]);
            }
            for (std::size_t j = 0; j < n2; ++j) {
                if (!used[j]) cost += persistence(t2.label[j]);
            }
            best = std::min(best, cost);
            return;
        }
        image[i] = kSkip;
        assign(i + 1);
        for (std::size_t j = 0; j < n2; ++j) {
            if (used[j] || !valid_with(i, j)) continue;
            image[i] = j;
            used[j] = true;
            assign(i + 1);
            used[j] = false;
            image[i] = kSkip;
        }
    };
    assign(0);
    return best;
}

double enumerate_wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                             double q) {
    const std::size_t n = d1.size();
    const std::size_t m = d2.size();
    std::vector<bool> used(m, false);
    double best = std::numeric_limits<double>::infinity();

    const std::function<void(std::size_t, double)> assign = [&](std::size_t i, double cost) {
        if (i == n) {
            for (std::size_t j = 0; j < m; ++j) {
                if (!used[j]) cost += std::pow(persistence(d2.pairs[j]) / 2.0, q);
            }
            best = std::min(best, cost);
            return;
        }
        assign(i + 1, cost + std::pow(persistence(d1.pairs[i]) / 2.0, q));
        for (std::size_t j = 0; j < m; ++j) {
            if (used[j]) continue;
            used[j] = true;
            assign(i + 1, cost + std::pow(linf(d1.pairs[i], d2.pairs[j]), q));
            used[j] = false;
        }
    };
    assign(0, 0.0);
    return n + m == 0 ? 0.0 : std::pow(best, 1.0 / q);
}

ScalarField random_chain_field(Rng& rng, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_dist(2, max_size);
    std::uniform_real_distribution<double> value_dist(-1.0, 1.0);
    std::bernoulli_distribution quantize(0.5);

    const std::size_t n = size_dist(rng);
    const bool ties = quantize(rng);
    std::vector<double> values(n);
    for (double& x : values) {
        x = value_dist(rng);
        if (ties) x = std::round(x * 4.0) / 4.0;
    }
    return ScalarField::chain(std::move(values));
}

ScalarField random_grid_field(Rng& rng, std::size_t max_extent, GridConnectivity connectivity) {
    std::uniform_int_distribution<std::size_t> extent_dist(2, max_extent);
    std::uniform_real_distribution<double> value_dist(-1.0, 1.0);
    std::bernoulli_distribution quantize(0.5);

    const GridDims dims{extent_dist(rng), extent_dist(rng)};
    const bool ties = quantize(rng);
    std::vector<double> values(dims.rows * dims.cols);
    for (double& x : values) {
        x = value_dist(rng);
        if (ties) x = std::round(x * 4.0) / 4.0;
    }
    return ScalarField::grid(std::move(values), dims, connectivity);
}

PersistenceHierarchy random_hierarchy(Rng& rng, std::size_t max_nodes) {
    std::uniform_int_distribution<std::size_t> count_dist(1, max_nodes);
    std::uniform_real_distribution<double> gap_dist(0.25, 1.5);

    const std::size_t n = count_dist(rng);
    std::vector<double> births(n);
    double birth = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        birth += gap_dist(rng);
        births[i] = birth;
    }

    PersistenceHierarchy hierarchy;
    hierarchy.variant = HierarchyVariant::Isph;
    hierarchy.parent.resize(n);
    const double top = births.back() + gap_dist(rng) + 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        PersistencePair pair;
        pair.creator = static_cast<VertexId>(2 * i);
        pair.destroyer = static_cast<VertexId>(2 * i + 1);
        pair.birth = births[i];
        pair.death = i == 0 ? top : births[i] + gap_dist(rng);
        pair.essential = i == 0;
        hierarchy.nodes.push_back(pair);
        if (i == 0) {
            hierarchy.parent[i] = kNoParent;
        } else {
            hierarchy.parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        }
    }
    return hierarchy;
}

PersistenceHierarchy random_field_hierarchy(Rng& rng, std::size_t max_nodes) {
    for (;;) {
        const auto field = random_chain_field(rng, 4 * max_nodes);
        const auto [diagram, trace] = compute_pairs(field);
        if (diagram.size() <= max_nodes) {
            return build_isph(field, trace, diagram);
        }
    }
}

PersistenceDiagram random_diagram(Rng& rng, std::size_t max_points) {
    std::uniform_int_distribution<std::size_t> count_dist(0, max_points);
    std::uniform_real_distribution<double> value_dist(0.0, 4.0);
    std::uniform_real_distribution<double> gap_dist(0.0, 3.0);

    PersistenceDiagram diagram;
    const std::size_t n = count_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        PersistencePair pair;
        pair.creator = static_cast<VertexId>(2 * i);
        pair.destroyer = static_cast<VertexId>(2 * i + 1);
        pair.birth = value_dist(rng);
        pair.death = pair.birth + gap_dist(rng);
        diagram.pairs.push_back(pair);
    }
    return diagram;
}

}  // namespace isph::oracle
