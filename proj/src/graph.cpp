#include "qspectral/graph.hpp"

#include <bit>
#include <stdexcept>

namespace qspectral {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v)
            throw std::invalid_argument("self-loop (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") rejected");
        set_edge(e.u, e.v);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " out of range 0.." + std::to_string(n_ - 1));
}

void Graph::set_edge(int u, int v) {
    std::uint64_t& a = adj_[static_cast<std::size_t>(u) * words_ + v / 64];
    if (!(a >> (v % 64) & 1)) {
        a |= std::uint64_t{1} << (v % 64);
        adj_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        ++m_;
    }
}

void Graph::clear_edge(int u, int v) {
    std::uint64_t& a = adj_[static_cast<std::size_t>(u) * words_ + v / 64];
    if (a >> (v % 64) & 1) {
        a &= ~(std::uint64_t{1} << (v % 64));
        adj_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
        --m_;
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(adj_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64) & 1)
                out.push_back({u, v});
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && (adj_[static_cast<std::size_t>(v) * words_ + u / 64] >> (u % 64) & 1))
            out.push_back(u);
    return out;
}

std::uint64_t Graph::row64(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v) * words_];
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
    Graph g = *this;
    for (const Edge& e : extra) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop rejected");
        g.set_edge(e.u, e.v);
    }
    return g;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    Graph g = *this;
    for (const Edge& e : removed) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        g.clear_edge(e.u, e.v);
    }
    return g;
}

ClusteredGraph::ClusteredGraph(int q) : Graph(2 * q), q_(q) {
    if (q < 0) throw std::invalid_argument("cluster size must be non-negative");
}

ClusteredGraph::ClusteredGraph(int q, std::span<const Edge> edges)
    : Graph(2 * q, edges), q_(q) {
    if (q < 0) throw std::invalid_argument("cluster size must be non-negative");
}

ClusteredGraph ClusteredGraph::from_graph(const Graph& g) {
    if (g.vertex_count() % 2 != 0)
        throw std::invalid_argument("clustered view needs an even vertex count, got " +
                                    std::to_string(g.vertex_count()));
    auto es = g.edges();
    return ClusteredGraph(g.vertex_count() / 2, es);
}

int ClusteredGraph::slot(int mu, int i) const {
    if (mu != 1 && mu != 2) throw std::invalid_argument("cluster must be 1 or 2");
    if (i < 1 || i > q_)
        throw std::invalid_argument("cluster index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(q_));
    return (mu - 1) * q_ + (i - 1);
}

ClusteredGraph partial_transpose(const ClusteredGraph& g) {
    const int q = g.cluster_size();
    // Collect the moved edges against the original graph before touching
    // anything; the rule quantifies over the input edge set.
    std::vector<Edge> drop, add;
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= q; ++j) {
            if (i == j) continue;
            const int u = g.slot(1, i), v = g.slot(2, j);
            if (!g.has_edge(u, v)) continue;
            const int mu = g.slot(1, j), mv = g.slot(2, i);
            if (g.has_edge(mu, mv)) continue;
            drop.push_back(make_edge(u, v));
            add.push_back(make_edge(mu, mv));
        }
    }
    Graph out = g.without_edges(drop).with_edges(add);
    return ClusteredGraph::from_graph(out);
}

std::vector<Edge> asymmetric_edge_set(const ClusteredGraph& g) {
    const int q = g.cluster_size();
    std::vector<Edge> out;
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) {
            if (i == j) continue;
            if (g.has_edge(g.slot(1, i), g.slot(2, j)) &&
                !g.has_edge(g.slot(1, j), g.slot(2, i)))
                out.push_back(make_edge(g.slot(1, i), g.slot(2, j)));
        }
    return out;
}

bool is_partially_symmetric(const ClusteredGraph& g) {
    return asymmetric_edge_set(g).empty();
}

BigInt count_partially_symmetric(int q) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    return BigInt(1) << (q * (3 * q - 1) / 2);
}

BigInt brute_count_partially_symmetric(int q) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    if (q > 4)
        throw std::invalid_argument("brute-force count supports q <= 4 (q=" +
                                    std::to_string(q) + " would enumerate 2^" +
                                    std::to_string(q * (2 * q - 1)) + " graphs)");
    const int n = 2 * q;
    // Bit index per unordered pair (u < v), row-major.
    std::vector<std::vector<int>> bit(n, std::vector<int>(n, -1));
    int nbits = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) bit[u][v] = bit[v][u] = nbits++;
    // A labelled graph is fixed by the switching exactly when each mirrored
    // cross pair has both or neither edge present.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            pairs.emplace_back(bit[i][q + j], bit[j][q + i]);
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << nbits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool fixed = true;
        for (const auto& [a, b] : pairs) {
            if (((mask >> a ^ mask >> b) & 1) != 0) {
                fixed = false;
                break;
            }
        }
        count += fixed;
    }
    return BigInt(count);
}

EdgePartition edge_partition(const ClusteredGraph& g) {
    EdgePartition part;
    const int q = g.cluster_size();
    for (const Edge& e : g.edges()) {
        if (e.u < q && e.v < q)
            part.intra1.push_back(e);
        else if (e.u >= q && e.v >= q)
            part.intra2.push_back(e);
        else
            part.cross.push_back(e);
    }
    return part;
}

ClusteredGraph disjoint_union(const ClusteredGraph& a, const ClusteredGraph& b) {
    const int qa = a.cluster_size(), qb = b.cluster_size();
    const int q = qa + qb;
    auto remap_a = [&](int v) { return v < qa ? v : q + (v - qa); };
    auto remap_b = [&](int v) { return v < qb ? qa + v : q + qa + (v - qb); };
    std::vector<Edge> es;
    for (const Edge& e : a.edges()) es.push_back(make_edge(remap_a(e.u), remap_a(e.v)));
    for (const Edge& e : b.edges()) es.push_back(make_edge(remap_b(e.u), remap_b(e.v)));
    return ClusteredGraph(q, es);
}

ClusteredGraph swap_clusters(const ClusteredGraph& g) {
    const int q = g.cluster_size();
    auto flip = [&](int v) { return v < q ? v + q : v - q; };
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.push_back(make_edge(flip(e.u), flip(e.v)));
    return ClusteredGraph(q, es);
}

}  // namespace qspectral
