#include "isph/dissimilarity.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace isph {

double solve_assignment(const std::vector<double>& cost, std::size_t n) {
    if (n == 0) return 0.0;
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // Shortest augmenting paths with potentials; column 0 is a virtual slot.
    std::vector<double> u(n + 1, 0.0);
    std::vector<double> v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0);   // match[j] = row assigned to column j
    std::vector<std::size_t> way(n + 1, 0);

    for (std::size_t row = 1; row <= n; ++row) {
        match[0] = row;
        std::size_t j0 = 0;
        std::vector<double> min_slack(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double reduced = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (reduced < min_slack[j]) {
                    min_slack[j] = reduced;
                    way[j] = j0;
                }
                if (min_slack[j] < delta) {
                    delta = min_slack[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    double total = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        total += cost[(match[j] - 1) * n + (j - 1)];
    }
    return total;
}

namespace {

double linf(const PersistencePair& a, const PersistencePair& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Postorder representation used by the Zhang-Shasha dynamic program.
struct OrderedTree {
    std::vector<PersistencePair> label;   // by postorder index
    std::vector<std::size_t> lmd;         // leftmost leaf descendant
    std::vector<std::size_t> keyroots;    // ascending
};

OrderedTree to_ordered_tree(const PersistenceHierarchy& hierarchy) {
    if (hierarchy.size() == 0) {
        throw std::invalid_argument("tree edit distance needs non-empty hierarchies");
    }
    const auto roots = hierarchy.roots();
    if (roots.size() != 1) {
        throw std::invalid_argument("tree edit distance needs a single-root hierarchy");
    }
    auto children = hierarchy.children();
    for (auto& list : children) {
        std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
            const PersistencePair& pa = hierarchy.nodes[a];
            const PersistencePair& pb = hierarchy.nodes[b];
            if (pa.birth != pb.birth) return pa.birth < pb.birth;
            return pa.death < pb.death;
        });
    }

    OrderedTree tree;
    tree.label.reserve(hierarchy.size());
    tree.lmd.reserve(hierarchy.size());

    // Iterative postorder over the canonical child order.
    std::vector<std::pair<std::size_t, bool>> stack{{roots[0], false}};
    std::vector<std::size_t> lmd_of_node(hierarchy.size());
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            const std::size_t postorder = tree.label.size();
            lmd_of_node[node] =
                children[node].empty() ? postorder : lmd_of_node[children[node].front()];
            tree.label.push_back(hierarchy.nodes[node]);
            tree.lmd.push_back(lmd_of_node[node]);
        } else {
            stack.emplace_back(node, true);
            for (auto it = children[node].rbegin(); it != children[node].rend(); ++it) {
                stack.emplace_back(*it, false);
            }
        }
    }

    for (std::size_t i = 0; i < tree.lmd.size(); ++i) {
        bool is_keyroot = true;
        for (std::size_t j = i + 1; j < tree.lmd.size(); ++j) {
            if (tree.lmd[j] == tree.lmd[i]) {
                is_keyroot = false;
                break;
            }
        }
        if (is_keyroot) tree.keyroots.push_back(i);
    }
    return tree;
}

}  // namespace

double tree_edit_distance(const PersistenceHierarchy& h1, const PersistenceHierarchy& h2) {
    const OrderedTree t1 = to_ordered_tree(h1);
    const OrderedTree t2 = to_ordered_tree(h2);
    const std::size_t n1 = t1.label.size();
    const std::size_t n2 = t2.label.size();

    const auto del = [&](std::size_t i) { return persistence(t1.label[i]); };
    const auto ins = [&](std::size_t j) { return persistence(t2.label[j]); };
    const auto rel = [&](std::size_t i, std::size_t j) { return linf(t1.label[i], t2.label[j]); };

    std::vector<double> treedist(n1 * n2, 0.0);
    double root_pinned = 0.0;

    std::vector<double> fd((n1 + 1) * (n2 + 1));
    for (const std::size_t k1 : t1.keyroots) {
        for (const std::size_t k2 : t2.keyroots) {
            const std::size_t l1 = t1.lmd[k1];
            const std::size_t l2 = t2.lmd[k2];
            const std::size_t m = k1 - l1 + 1;
            const std::size_t n = k2 - l2 + 1;
            const auto at = [&](std::size_t a, std::size_t b) -> double& {
                return fd[a * (n + 1) + b];
            };

            at(0, 0) = 0.0;
            for (std::size_t a = 1; a <= m; ++a) at(a, 0) = at(a - 1, 0) + del(l1 + a - 1);
            for (std::size_t b = 1; b <= n; ++b) at(0, b) = at(0, b - 1) + ins(l2 + b - 1);

            for (std::size_t a = 1; a <= m; ++a) {
                const std::size_t i = l1 + a - 1;
                for (std::size_t b = 1; b <= n; ++b) {
                    const std::size_t j = l2 + b - 1;
                    const double erase = at(a - 1, b) + del(i);
                    const double insert = at(a, b - 1) + ins(j);
                    if (t1.lmd[i] == l1 && t2.lmd[j] == l2) {
                        // Both prefixes are whole subtrees rooted at i and j.
                        const double match = at(a - 1, b - 1) + rel(i, j);
                        at(a, b) = std::min({erase, insert, match});
                        treedist[i * n2 + j] = at(a, b);
                        if (i == n1 - 1 && j == n2 - 1) root_pinned = match;
                    } else {
                        const double sub = at(t1.lmd[i] - l1, t2.lmd[j] - l2) + treedist[i * n2 + j];
                        at(a, b) = std::min({erase, insert, sub});
                    }
                }
            }
        }
    }

    // Roots are always matched to each other, so the result is the relabel
    // cost of the roots plus the distance of their child forests.
    return root_pinned;
}

double wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2, double q) {
    if (q < 1.0) {
        throw std::invalid_argument("wasserstein exponent must be >= 1");
    }
    const std::size_t n = d1.size();
    const std::size_t m = d2.size();
    const std::size_t total = n + m;
    if (total == 0) return 0.0;

    const auto diagonal_gap = [](const PersistencePair& pair) {
        return persistence(pair) / 2.0;
    };

    std::vector<double> cost(total * total, 0.0);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            double ground = 0.0;
            if (i < n && j < m) {
                ground = linf(d1.pairs[i], d2.pairs[j]);
            } else if (i < n) {
                ground = diagonal_gap(d1.pairs[i]);
            } else if (j < m) {
                ground = diagonal_gap(d2.pairs[j]);
            }
            cost[i * total + j] = std::pow(ground, q);
        }
    }
    return std::pow(solve_assignment(cost, total), 1.0 / q);
}

DistanceMatrix distance_matrix(std::span<const ScalarField> fields, DistanceMeasure measure,
                               std::size_t threads) {
    if (fields.size() < 2) {
        throw std::invalid_argument("distance matrix needs at least 2 fields");
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].domain_kind() != fields[0].domain_kind()) {
            throw std::invalid_argument(
                fmt::format("field {}: domain kind differs from field 0", i));
        }
    }

    const std::size_t count = fields.size();
    std::vector<PersistenceDiagram> diagrams(count);
    std::vector<PersistenceHierarchy> hierarchies(count);
    for (std::size_t i = 0; i < count; ++i) {
        try {
            auto [diagram, trace] = compute_pairs(fields[i]);
            if (measure.kind == MeasureKind::IsphTed) {
                hierarchies[i] = build_isph(fields[i], trace, diagram);
            }
            diagrams[i] = std::move(diagram);
        } catch (const std::exception& error) {
            throw std::runtime_error(fmt::format("field {}: {}", i, error.what()));
        }
    }

    DistanceMatrix matrix;
    matrix.n = count;
    matrix.entries.assign(count * count, 0.0);

    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) tasks.emplace_back(i, j);
    }

    const auto run_task = [&](std::size_t index) {
        const auto [i, j] = tasks[index];
        const double d = measure.kind == MeasureKind::IsphTed
                             ? tree_edit_distance(hierarchies[i], hierarchies[j])
                             : wasserstein(diagrams[i], diagrams[j], measure.q);
        matrix.at(i, j) = d;
        matrix.at(j, i) = d;
    };

    if (threads == 0) threads = std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(1, std::min(threads, tasks.size()));
    if (threads == 1) {
        for (std::size_t index = 0; index < tasks.size(); ++index) run_task(index);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t index = next.fetch_add(1); index < tasks.size();
                     index = next.fetch_add(1)) {
                    run_task(index);
                }
            });
        }
        for (auto& worker : pool) worker.join();
    }
    return matrix;
}

void write_distance_matrix(const DistanceMatrix& matrix, std::ostream& out, bool triplets) {
    if (triplets) {
        for (std::size_t i = 0; i < matrix.n; ++i) {
            for (std::size_t j = 0; j < matrix.n; ++j) {
                out << fmt::format("{}\t{}\t{}\n", i, j, matrix.at(i, j));
            }
        }
        return;
    }
    for (std::size_t i = 0; i < matrix.n; ++i) {
        for (std::size_t j = 0; j < matrix.n; ++j) {
            out << fmt::format("{}{}", j == 0 ? "" : "\t", matrix.at(i, j));
        }
        out << "\n";
    }
}

}  // namespace isph
