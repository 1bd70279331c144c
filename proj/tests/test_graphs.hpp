#pragma once

// Reference instances shared across the test suites. Vertices use the
// linear convention: (mu, i) -> (mu-1)*q + (i-1).

#include <vector>

#include "qspectral/graph.hpp"

namespace testdata {

using qspectral::ClusteredGraph;
using qspectral::Edge;
using qspectral::Graph;

// q=2 star whose partial transpose is a triangle plus an isolated vertex;
// the smallest graph that is non-isomorphic and Q-cospectral to its
// transpose.
inline ClusteredGraph star_k() {
    return ClusteredGraph(2, std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}});
}

inline ClusteredGraph star_k_transpose() {
    return ClusteredGraph(2, std::vector<Edge>{{0, 2}, {0, 3}, {2, 3}});
}

// Six-vertex path labelled so that the transpose is a star plus an edge:
// edges (v12,v13), (v12,v21), (v21,v22), (v22,v23).
inline ClusteredGraph path_copy6() {
    return ClusteredGraph(3, std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}, {4, 5}});
}

// Same path with the labelling that keeps it fixed under the transpose:
// (v11,v12), (v11,v21), (v21,v22), (v22,v23).
inline ClusteredGraph path_fixed6() {
    return ClusteredGraph(3, std::vector<Edge>{{0, 1}, {0, 3}, {3, 4}, {4, 5}});
}

// Six-vertex graph whose transpose is not cospectral; spectra
// {0.6277, 1, 1, 2, 3, 6.3723} vs {0.3542, 0.5858, 2, 2, 3.4142, 5.6458}.
inline ClusteredGraph noncospectral6() {
    return ClusteredGraph(
        3, std::vector<Edge>{{0, 3}, {0, 4}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

// A cospectral 6-vertex pair (one isolated vertex each) for which no
// cluster labelling turns one into the transpose of the other.
inline Graph stubborn_pair_a() {
    return Graph(6, std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}});
}

inline Graph stubborn_pair_b() {
    return Graph(6, std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {3, 4}});
}

// Eight-vertex switching comparison: the same graph switched two ways.
// Cluster 1 is the bottom path, cluster 2 the top row.
inline ClusteredGraph switching_base8() {
    return ClusteredGraph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {5, 6}, {1, 4}, {1, 7}});
}

// The alternative switched graph, transcribed vertex by vertex.
inline ClusteredGraph switching_gm8() {
    return ClusteredGraph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {5, 6}, {1, 5}, {1, 6}});
}

// Base for the grown-family tests: maps onto its own transpose under the
// cluster swap and has asymmetric edge set {(v12, v23)}.
inline ClusteredGraph swap_symmetric6() {
    return ClusteredGraph(
        3, std::vector<Edge>{{0, 1}, {0, 2}, {3, 4}, {3, 5}, {0, 3}, {1, 4}, {1, 5}});
}

// The four small graphs that equal their own transpose.
inline std::vector<ClusteredGraph> partially_symmetric4() {
    return {
        ClusteredGraph(2, std::vector<Edge>{{1, 3}}),                          // diagonal
        ClusteredGraph(2, std::vector<Edge>{{0, 1}}),                          // intra
        ClusteredGraph(2, std::vector<Edge>{{0, 3}, {1, 2}}),                  // mirror pair
        ClusteredGraph(2, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {2, 3}}),  // mixed
    };
}

}  // namespace testdata
