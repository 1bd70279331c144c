#pragma once

// Constructive families of clustered graphs designed to be Q-cospectral to
// their partial transpose. Constructors never assert success: every instance
// is routed through the spectral and isomorphism modules and returned as a
// GeneratorReport with recomputed flags.

#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qspectral/bigint.hpp"
#include "qspectral/graph.hpp"

namespace qspectral {

struct GeneratorReport {
    std::string family;
    std::string params;
    ClusteredGraph graph;
    ClusteredGraph transpose;
    bool cospectral = false;
    bool isomorphic = false;
    // Distinguished cross indices (i, j) carried by the cycle-based families;
    // 0 when the family has none.
    int seed_i = 0;
    int seed_j = 0;
};

// Recomputes the transpose and both flags for an arbitrary graph.
GeneratorReport make_report(std::string family, std::string params, ClusteredGraph g,
                            int seed_i = 0, int seed_j = 0);

// Two q-cycles plus the chord (v1i, v1j) and cross edges (v1i, v2i),
// (v1i, v2j); requires 1 <= i < j <= q with v1i, v1j non-adjacent on the
// cycle.
GeneratorReport theorem1_graph(int q, int i, int j);

// Two q-cycles plus (v1i, v2i), (v1i, v2(i+1)) with (v2i, v2(i+1)) removed;
// indices wrap modulo q.
GeneratorReport corollary1_graph(int q, int i);

// Variant that keeps the (v2i, v2(i+1)) edge; isomorphic to its transpose.
GeneratorReport corollary1_keep_edge(int q, int i);

// Cycle on cluster 1 (path closed by (v11, v1q)), path on cluster 2, cross
// edges (v11, v21) and (v11, v2q), plus optional diagonals (v1k, v2k) for
// k in diagonal_set, a subset of {2..q}.
GeneratorReport corollary2_graph(int q, const std::set<int>& diagonal_set);

// Disjoint union with a partially symmetric partner (default hypothesis) or,
// when allow_isomorphic_partner is set, any partner isomorphic to its own
// transpose.
GeneratorReport procedure1_union(const ClusteredGraph& g, const ClusteredGraph& partner,
                                 bool allow_isomorphic_partner = false);

// Adds chord pairs {(v1k, v1l), (v2k, v2l)} with k, l avoiding the base's
// distinguished indices.
GeneratorReport procedure2_add_pairs(const GeneratorReport& base,
                                     const std::vector<std::pair<int, int>>& pairs);

// Adds a mirror-closed set of cross edges (v1k, v2l) with k, l avoiding the
// distinguished indices.
GeneratorReport procedure3_add_psym_cross(const GeneratorReport& base,
                                          const std::vector<std::pair<int, int>>& cross_edges);

// Edge within one cluster, 1-based cluster coordinates of the extended graph.
struct IntraEdge {
    int mu;  // 1 or 2
    int a;
    int b;
};

// Grows the base by r new vertices per cluster. intra_new joins new vertices
// within a cluster, attach joins an old vertex (away from the four
// distinguished ones) to a new vertex of its cluster, and cross_new is a
// mirror-closed set of cross edges (v1a, v2b) between new vertices.
GeneratorReport procedure4_extend(const GeneratorReport& base, int r,
                                  const std::vector<IntraEdge>& intra_new,
                                  const std::vector<IntraEdge>& attach,
                                  const std::vector<std::pair<int, int>>& cross_new);

// Grows a base graph that maps onto its own transpose under the cluster swap
// (v1i <-> v2i) and has a non-empty asymmetric edge set. attach_vertex is a
// (mu, k) pair not incident to any asymmetric edge; attach_targets lists the
// new indices of its cluster it gets joined to.
GeneratorReport procedure5_extend(const ClusteredGraph& g0, int r,
                                  const std::vector<IntraEdge>& intra_new,
                                  std::pair<int, int> attach_vertex,
                                  const std::vector<int>& attach_targets,
                                  const std::vector<std::pair<int, int>>& cross_new);

// Family sizes as claimed by the source constructions. These counts are
// reported verbatim and are not certified by this library.
BigInt family_count(const std::string& family, int q);

}  // namespace qspectral
