#pragma once

// Simple undirected graphs plus the two-cluster view used by the partial
// transpose switching. Vertices of a clustered graph live on a 2 x q grid:
// vertex (mu, i) with mu in {1,2} and i in 1..q sits at linear index
// (mu-1)*q + (i-1). All graph values are immutable after construction.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qspectral/bigint.hpp"

namespace qspectral {

struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Normalized edge with u < v.
inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<Edge> edges() const;
    std::vector<int> neighbors(int v) const;

    // Adjacency row as a bitmask; only valid while n <= 64 (all the
    // algorithmic modules guard their sizes well below that).
    std::uint64_t row64(int v) const;

    Graph with_edges(std::span<const Edge> extra) const;
    Graph without_edges(std::span<const Edge> removed) const;

    bool operator==(const Graph&) const = default;

  protected:
    void set_edge(int u, int v);
    void clear_edge(int u, int v);
    void check_vertex(int v) const;

  private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
};

class ClusteredGraph : public Graph {
  public:
    ClusteredGraph() = default;
    explicit ClusteredGraph(int q);
    ClusteredGraph(int q, std::span<const Edge> edges);

    // Reinterprets a plain graph with an even vertex count.
    static ClusteredGraph from_graph(const Graph& g);

    int cluster_size() const { return q_; }

    // (mu, i) -> linear index, mu in {1, 2}, i in 1..q.
    int slot(int mu, int i) const;
    int cluster_of(int v) const { check_vertex(v); return v < q_ ? 1 : 2; }
    int index_of(int v) const { check_vertex(v); return v % q_ + 1; }

  private:
    int q_ = 0;
};

struct EdgePartition {
    std::vector<Edge> intra1;
    std::vector<Edge> intra2;
    std::vector<Edge> cross;
};

ClusteredGraph partial_transpose(const ClusteredGraph& g);

// Cross edges (v_{1,i}, v_{2,j}) with i != j whose mirror (v_{1,j}, v_{2,i})
// is absent; exactly the edges moved by the partial transpose.
std::vector<Edge> asymmetric_edge_set(const ClusteredGraph& g);

// G equals its partial transpose under the identity labelling.
bool is_partially_symmetric(const ClusteredGraph& g);

// 2^(q(3q-1)/2), the number of labelled edge combinations fixed by the
// partial transpose on a 2 x q grid.
BigInt count_partially_symmetric(int q);

// Same count by direct enumeration of all labelled graphs; q <= 4.
BigInt brute_count_partially_symmetric(int q);

EdgePartition edge_partition(const ClusteredGraph& g);

// Clusters concatenate: cluster k of the result is cluster k of a followed by
// cluster k of b, so the partial transpose commutes with the union.
ClusteredGraph disjoint_union(const ClusteredGraph& a, const ClusteredGraph& b);

// Swap the two clusters in place: (1,i) <-> (2,i).
ClusteredGraph swap_clusters(const ClusteredGraph& g);

}  // namespace qspectral
