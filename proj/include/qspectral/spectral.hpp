#pragma once

// Exact signless-Laplacian characteristic polynomials and the cospectrality
// decision. Polynomials are stored monic as det(lambda*I - Q) with integer
// coefficients p_0..p_n for sum_j p_j lambda^(n-j); cospectrality is always
// decided on exact coefficients, never on floating point.

#include <vector>

#include "qspectral/bigint.hpp"
#include "qspectral/graph.hpp"

namespace qspectral {

struct QPolynomial {
    int n = 0;
    std::vector<BigInt> coeffs;  // size n+1, coeffs[0] == 1

    const BigInt& p(int j) const { return coeffs.at(j); }
    bool operator==(const QPolynomial&) const = default;
    BigInt eval(const BigInt& x) const;
    double eval(double x) const;
    std::string to_string() const;
};

// Q(G) = D(G) + A(G), row-major n x n.
std::vector<long long> signless_laplacian(const Graph& g);

QPolynomial q_polynomial(const Graph& g);

bool are_q_cospectral(const Graph& a, const Graph& b);

// Floating eigenvalues of Q(G), ascending; for display and cross-checks only.
std::vector<double> q_spectrum(const Graph& g);

QPolynomial poly_multiply(const QPolynomial& a, const QPolynomial& b);

}  // namespace qspectral
