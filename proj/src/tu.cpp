#include "qspectral/tu.hpp"

#include <algorithm>
#include <set>

namespace qspectral {

BigInt tu_weight(const TUSubgraph& h) {
    BigInt w = 1;
    for (int c = 0; c < h.odd_unicyclic_count; ++c) w *= 4;
    for (int e : h.tree_edge_counts) w *= 1 + e;
    return w;
}

std::optional<TUSubgraph> classify_tu(const Graph& g, std::span<const Edge> edge_subset) {
    const int n = g.vertex_count();
    std::set<Edge> subset;
    for (const Edge& e : edge_subset) {
        const Edge norm = make_edge(e.u, e.v);
        if (!g.has_edge(norm.u, norm.v))
            throw std::invalid_argument("edge (" + std::to_string(norm.u) + "," +
                                        std::to_string(norm.v) + ") is not in the host graph");
        subset.insert(norm);
    }
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : subset) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    TUSubgraph out;
    out.edges.assign(subset.begin(), subset.end());
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        // DFS one component, checking bipartiteness and counting edges.
        std::vector<int> stack{s};
        side[s] = 0;
        int vertices = 0, edge_ends = 0;
        bool bipartite = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++vertices;
            for (int u : adj[v]) {
                ++edge_ends;
                if (side[u] < 0) {
                    side[u] = side[v] ^ 1;
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    bipartite = false;
                }
            }
        }
        const int edges = edge_ends / 2;
        if (edges == vertices - 1) {
            out.tree_edge_counts.push_back(edges);
        } else if (edges == vertices && !bipartite) {
            ++out.odd_unicyclic_count;
        } else {
            return std::nullopt;  // even cycle, or more than one cycle
        }
    }
    std::sort(out.tree_edge_counts.begin(), out.tree_edge_counts.end());
    return out;
}

namespace {

// Union-find over the growing edge subset with rollback; tracks per
// component the bipartition parity, edge count and whether it already
// carries its one (odd) cycle.
struct Forest {
    std::vector<int> parent, parity, size, edges;
    std::vector<char> cyclic;

    struct Undo {
        int kind;  // 0 = union, 1 = cycle closed
        int child = -1;
        int root;
        char root_was_cyclic;
    };
    std::vector<Undo> log;

    explicit Forest(int n)
        : parent(n, -1), parity(n, 0), size(n, 1), edges(n, 0), cyclic(n, 0) {}

    std::pair<int, int> find(int v) const {
        int p = 0;
        while (parent[v] >= 0) {
            p ^= parity[v];
            v = parent[v];
        }
        return {v, p};
    }

    // Adds edge (u, v) if every component stays a tree or odd-unicyclic;
    // returns false with the state untouched otherwise.
    bool add(int u, int v) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) {
            if (cyclic[ru]) return false;  // would be a second cycle
            if (pu != pv) return false;    // closing path odd -> even cycle
            log.push_back({1, -1, ru, cyclic[ru]});
            cyclic[ru] = 1;
            ++edges[ru];
            return true;
        }
        if (cyclic[ru] && cyclic[rv]) return false;
        if (size[ru] < size[rv]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        log.push_back({0, rv, ru, cyclic[ru]});
        parent[rv] = ru;
        parity[rv] = pu ^ pv ^ 1;
        size[ru] += size[rv];
        edges[ru] += edges[rv] + 1;
        cyclic[ru] = cyclic[ru] || cyclic[rv];
        return true;
    }

    void undo() {
        const Undo u = log.back();
        log.pop_back();
        if (u.kind == 1) {
            cyclic[u.root] = u.root_was_cyclic;
            --edges[u.root];
            return;
        }
        parent[u.child] = -1;
        parity[u.child] = 0;
        size[u.root] -= size[u.child];
        edges[u.root] -= edges[u.child] + 1;
        cyclic[u.root] = u.root_was_cyclic;
    }

    long long weight() const {
        long long w = 1;
        for (std::size_t v = 0; v < parent.size(); ++v) {
            if (parent[v] >= 0) continue;
            w *= cyclic[v] ? 4 : 1 + edges[v];
        }
        return w;
    }
};

struct Enumerator {
    std::vector<Edge> all;
    int m = 0;
    int max_edges = 0;
    long long max_subsets = 0;
    long long visited = 0;
    Forest forest;
    std::vector<BigInt> sums;
    std::vector<long long> counts;

    Enumerator(const Graph& g, int max_edges_, long long max_subsets_)
        : all(g.edges()),
          m(static_cast<int>(all.size())),
          max_edges(std::max(max_edges_, 0)),
          max_subsets(max_subsets_),
          forest(g.vertex_count()),
          sums(static_cast<std::size_t>(max_edges) + 1, 0),
          counts(static_cast<std::size_t>(max_edges) + 1, 0) {}

    void run() {
        sums[0] += 1;  // empty subgraph: n isolated 0-edge trees
        counts[0] = 1;
        visited = 1;
        dfs(0, 0);
    }

    void dfs(int start, int depth) {
        if (depth >= max_edges) return;
        for (int k = start; k < m; ++k) {
            if (!forest.add(all[k].u, all[k].v)) continue;
            if (++visited > max_subsets) {
                forest.undo();
                throw BudgetExceeded("TU enumeration exceeded the subset budget of " +
                                     std::to_string(max_subsets));
            }
            sums[depth + 1] += forest.weight();
            ++counts[depth + 1];
            dfs(k + 1, depth + 1);
            forest.undo();
        }
    }
};

// Sums of TU weights per subset size, enumerated by extending edge subsets
// in index order. Every prefix of a TU subgraph is itself TU, so the search
// tree visits each TU subgraph exactly once.
std::vector<BigInt> tu_weight_sums(const Graph& g, int max_edges, long long max_subsets) {
    Enumerator e(g, max_edges, max_subsets);
    e.run();
    return e.sums;
}

BigInt binomial(int m, int j) {
    if (j < 0 || j > m) return 0;
    BigInt r = 1;
    for (int t = 1; t <= j; ++t) r = r * (m - j + t) / t;
    return r;
}

}  // namespace

BigInt coefficient_via_tu(const Graph& g, int j, const TuBudget& budget) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (j < 0 || j > n)
        throw std::invalid_argument("coefficient index must satisfy 0 <= j <= n");
    const BigInt bound = binomial(m, j);
    if (bound > budget.max_subsets)
        throw BudgetExceeded("C(" + std::to_string(m) + "," + std::to_string(j) + ") = " +
                             bound.str() + " exceeds the subset budget of " +
                             std::to_string(budget.max_subsets));
    // The precondition is on C(m, j); the walk also visits the smaller
    // subsets, so the hard stop gets headroom.
    const long long hard =
        budget.max_subsets < (1LL << 58) ? 16 * budget.max_subsets : budget.max_subsets;
    const auto sums = tu_weight_sums(g, j, hard);
    const BigInt total = j < static_cast<int>(sums.size()) ? sums[j] : BigInt(0);
    return j % 2 == 0 ? total : -total;
}

QPolynomial tu_polynomial(const Graph& g, const TuBudget& budget) {
    const int n = g.vertex_count();
    const auto sums = tu_weight_sums(g, n, budget.max_subsets);
    QPolynomial out;
    out.n = n;
    out.coeffs.assign(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        const BigInt total = j < static_cast<int>(sums.size()) ? sums[j] : BigInt(0);
        out.coeffs[j] = j % 2 == 0 ? total : -total;
    }
    return out;
}

TuExpansion tu_expansion(const Graph& g, const TuBudget& budget) {
    const int n = g.vertex_count();
    Enumerator e(g, n, budget.max_subsets);
    e.run();
    TuExpansion out;
    out.poly.n = n;
    out.poly.coeffs.assign(n + 1, 0);
    out.counts.assign(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        const BigInt total = j < static_cast<int>(e.sums.size()) ? e.sums[j] : BigInt(0);
        out.poly.coeffs[j] = j % 2 == 0 ? total : -total;
        if (j < static_cast<int>(e.counts.size())) out.counts[j] = e.counts[j];
    }
    return out;
}

bool are_comparable(const Graph& a, const Graph& b, int j, const TuBudget& budget) {
    if (j < 0) throw std::invalid_argument("coefficient index must be non-negative");
    for (const Graph* g : {&a, &b}) {
        const BigInt bound = binomial(g->edge_count(), j);
        if (bound > budget.max_subsets)
            throw BudgetExceeded("C(" + std::to_string(g->edge_count()) + "," +
                                 std::to_string(j) + ") exceeds the subset budget");
    }
    const long long hard =
        budget.max_subsets < (1LL << 58) ? 16 * budget.max_subsets : budget.max_subsets;
    const auto sa = tu_weight_sums(a, j, hard);
    const auto sb = tu_weight_sums(b, j, hard);
    const BigInt ta = j < static_cast<int>(sa.size()) ? sa[j] : BigInt(0);
    const BigInt tb = j < static_cast<int>(sb.size()) ? sb[j] : BigInt(0);
    return ta == tb;
}

}  // namespace qspectral
