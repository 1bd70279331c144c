#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "qspectral/iso.hpp"
#include "qspectral/survey.hpp"
#include "test_graphs.hpp"

using namespace qspectral;

namespace {

// Reference oracle: isomorphism by exhaustive permutation search.
bool brute_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = a.edges();
    do {
        bool match = true;
        for (const Edge& e : edges)
            if (!b.has_edge(perm[e.u], perm[e.v])) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("relabelling invariance of the path on 3 vertices") {
    const Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
    const Graph p3b(3, std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(canonical_form(p3) == canonical_form(p3b));
    CHECK(are_isomorphic(p3, p3b));
}

TEST_CASE("the star pair is non-isomorphic") {
    CHECK(canonical_form(testdata::star_k()) != canonical_form(testdata::star_k_transpose()));
    CHECK_FALSE(are_isomorphic(testdata::star_k(), testdata::star_k_transpose()));
    CHECK(are_isomorphic(testdata::star_k(), testdata::star_k()));
}

TEST_CASE("isomorphic copies share a canonical form") {
    CHECK(canonical_form(testdata::path_copy6()) == canonical_form(testdata::path_fixed6()));
    CHECK(are_isomorphic(testdata::path_copy6(), testdata::path_fixed6()));
}

TEST_CASE("the two switched graphs differ") {
    const auto tau = partial_transpose(testdata::switching_base8());
    CHECK_FALSE(are_isomorphic(tau, testdata::switching_gm8()));
}

TEST_CASE("canonical equality matches brute-force isomorphism on random pairs") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + int(rng() % 5);  // up to 6
        auto sample = [&]() {
            std::vector<Edge> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2 == 0) es.push_back({u, v});
            return Graph(n, es);
        };
        const Graph a = sample();
        const Graph b = sample();
        CAPTURE(trial);
        CHECK((canonical_form(a) == canonical_form(b)) == brute_isomorphic(a, b));
        CHECK(are_isomorphic(a, b) == brute_isomorphic(a, b));
    }
}

TEST_CASE("canonical equality agrees with brute-force isomorphism over all pairs, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto graphs = enumerate_graphs(n);
        // group by edge count: pairs with different sizes are trivially
        // non-isomorphic and already covered by the fingerprint reject
        std::map<int, std::vector<const Graph*>> by_m;
        for (const Graph& g : graphs) by_m[g.edge_count()].push_back(&g);
        for (const auto& [m, group] : by_m)
            for (std::size_t i = 0; i < group.size(); ++i)
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    // representatives are pairwise non-isomorphic by construction
                    CHECK_FALSE(brute_isomorphic(*group[i], *group[j]));
                    CHECK(canonical_form(*group[i]) != canonical_form(*group[j]));
                }
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(static_cast<void>(canonical_form(Graph(17))), std::invalid_argument);
}

TEST_CASE("hex encoding is stable") {
    const auto h = canonical_form(testdata::star_k()).hex();
    CHECK(h == canonical_form(testdata::star_k()).hex());
    CHECK(h.size() >= 2);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
}
