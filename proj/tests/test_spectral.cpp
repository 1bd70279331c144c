#include <doctest.h>

#include <cmath>

#include "qspectral/spectral.hpp"
#include "test_graphs.hpp"

using namespace qspectral;

namespace {

QPolynomial poly_of(std::vector<BigInt> coeffs) {
    QPolynomial p;
    p.n = static_cast<int>(coeffs.size()) - 1;
    p.coeffs = std::move(coeffs);
    return p;
}

}  // namespace

TEST_CASE("signless Laplacian entries") {
    const auto q = signless_laplacian(testdata::star_k());
    // degrees 1,1,3,1 on the diagonal
    CHECK(q[0 * 4 + 0] == 1);
    CHECK(q[1 * 4 + 1] == 1);
    CHECK(q[2 * 4 + 2] == 3);
    CHECK(q[3 * 4 + 3] == 1);
    CHECK(q[0 * 4 + 2] == 1);
    CHECK(q[2 * 4 + 0] == 1);
    CHECK(q[0 * 4 + 1] == 0);

    const auto zero = signless_laplacian(Graph(2));
    CHECK(std::all_of(zero.begin(), zero.end(), [](long long x) { return x == 0; }));

    const auto edge = signless_laplacian(Graph(2, std::vector<Edge>{{0, 1}}));
    CHECK(edge == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("exact polynomial of the small star pair") {
    const auto pk = q_polynomial(testdata::star_k());
    CHECK(pk.coeffs == std::vector<BigInt>{1, -6, 9, -4, 0});
    CHECK(q_polynomial(testdata::star_k_transpose()) == pk);
}

TEST_CASE("empty graphs have monomial polynomials") {
    for (int n : {0, 1, 4, 7}) {
        const auto p = q_polynomial(Graph(n));
        CHECK(p.n == n);
        CHECK(p.coeffs[0] == 1);
        for (int j = 1; j <= n; ++j) CHECK(p.coeffs[j] == 0);
    }
}

TEST_CASE("cospectrality decisions") {
    CHECK(are_q_cospectral(testdata::star_k(), testdata::star_k_transpose()));
    CHECK(are_q_cospectral(testdata::star_k(), testdata::star_k()));
    CHECK_FALSE(are_q_cospectral(testdata::noncospectral6(),
                                 partial_transpose(testdata::noncospectral6())));
    CHECK_FALSE(are_q_cospectral(Graph(4), Graph(5)));
}

TEST_CASE("approximate spectrum matches the pinned six-vertex values") {
    const auto g = testdata::noncospectral6();
    const std::vector<double> expect_g{0.6277, 1, 1, 2, 3, 6.3723};
    const auto sg = q_spectrum(g);
    REQUIRE(sg.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(sg[i] - expect_g[i]) < 5e-4);

    const auto st = q_spectrum(partial_transpose(g));
    const std::vector<double> expect_t{0.3542, 0.5858, 2, 2, 3.4142, 5.6458};
    for (int i = 0; i < 6; ++i) CHECK(std::abs(st[i] - expect_t[i]) < 5e-4);

    const auto se = q_spectrum(Graph(2, std::vector<Edge>{{0, 1}}));
    CHECK(std::abs(se[0] - 0) < 1e-9);
    CHECK(std::abs(se[1] - 2) < 1e-9);
}

TEST_CASE("polynomial multiplication") {
    const auto isolated = poly_of({1, 0});
    const auto two = poly_multiply(isolated, isolated);
    CHECK(two.coeffs == std::vector<BigInt>{1, 0, 0});

    // multiplicativity over a disjoint union, both sides computed separately
    const ClusteredGraph single(1, std::vector<Edge>{{0, 1}});
    const auto u = disjoint_union(testdata::star_k(), single);
    CHECK(q_polynomial(u) ==
          poly_multiply(q_polynomial(testdata::star_k()), q_polynomial(single)));

    CHECK(poly_multiply(q_polynomial(testdata::star_k()), q_polynomial(single)).coeffs[0] == 1);
}

TEST_CASE("trace identity p1 = -2m") {
    for (const Graph& g : {Graph(testdata::star_k()), Graph(testdata::noncospectral6()),
                           Graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})}) {
        const auto p = q_polynomial(g);
        CHECK(p.coeffs[1] == -2 * g.edge_count());
    }
}

TEST_CASE("spectrum sums to twice the edge count") {
    for (const Graph& g : {Graph(testdata::star_k()), Graph(testdata::noncospectral6()),
                           Graph(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}})}) {
        const auto spec = q_spectrum(g);
        double sum = 0;
        for (double v : spec) {
            CHECK(v > -1e-9);  // positive semidefinite
            sum += v;
        }
        CHECK(std::abs(sum - 2.0 * g.edge_count()) < 1e-6 * g.vertex_count());
    }
}

TEST_CASE("polynomial residuals at approximate eigenvalues stay small") {
    const auto g = testdata::noncospectral6();
    const auto p = q_polynomial(g);
    const auto spec = q_spectrum(g);
    const double radius = std::max(1.0, spec.back());
    const double bound = 1e-4 * std::pow(radius, g.vertex_count());
    for (double lambda : spec) CHECK(std::abs(p.eval(lambda)) < bound);
}
