#pragma once

// Spanning subgraphs whose components are trees or odd-unicyclic graphs
// ("TU subgraphs"), their weights, and the coefficient expansion they induce
// for the signless-Laplacian characteristic polynomial. This is an
// independent route to the same coefficients as q_polynomial and serves as a
// cross-validation oracle.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qspectral/bigint.hpp"
#include "qspectral/graph.hpp"
#include "qspectral/spectral.hpp"

namespace qspectral {

struct TUSubgraph {
    std::vector<Edge> edges;
    int odd_unicyclic_count = 0;        // c
    std::vector<int> tree_edge_counts;  // |E(T_i)| per tree component, isolated
                                        // vertices included as 0-edge trees
};

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct TuBudget {
    long long max_subsets = 10'000'000;
};

// 4^c * prod(1 + |E(T_i)|).
BigInt tu_weight(const TUSubgraph& h);

// Component analysis of the spanning subgraph on the given edge subset.
// Returns nullopt when some component carries an even cycle or more than one
// cycle. Throws if the subset is not contained in E(G).
std::optional<TUSubgraph> classify_tu(const Graph& g, std::span<const Edge> edge_subset);

// p_j = (-1)^j * sum of W(H) over all TU subgraphs with exactly j edges.
// Guarded by C(m, j) <= budget.max_subsets.
BigInt coefficient_via_tu(const Graph& g, int j, const TuBudget& budget = {});

// All coefficients at once from a single pruned enumeration.
QPolynomial tu_polynomial(const Graph& g, const TuBudget& budget = {});

// Coefficients together with the number of TU subgraphs per edge count.
struct TuExpansion {
    QPolynomial poly;
    std::vector<long long> counts;  // counts[j] = number of j-edge TU subgraphs
};
TuExpansion tu_expansion(const Graph& g, const TuBudget& budget = {});

// Equal total j-edge TU weight in both graphs.
bool are_comparable(const Graph& a, const Graph& b, int j, const TuBudget& budget = {});

}  // namespace qspectral
