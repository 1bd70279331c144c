#include "qspectral/spectral.hpp"

#include <Eigen/Dense>

#include <sstream>
#include <stdexcept>

namespace qspectral {

BigInt QPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (const BigInt& c : coeffs) acc = acc * x + c;
    return acc;
}

double QPolynomial::eval(double x) const {
    double acc = 0;
    for (const BigInt& c : coeffs) acc = acc * x + c.convert_to<double>();
    return acc;
}

std::string QPolynomial::to_string() const {
    std::ostringstream out;
    for (int j = 0; j <= n; ++j) {
        if (j) out << " ";
        out << coeffs[j];
    }
    return out.str();
}

std::vector<long long> signless_laplacian(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<long long> q(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        q[static_cast<std::size_t>(u) * n + u] = g.degree(u);
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v))
                q[static_cast<std::size_t>(u) * n + v] =
                    q[static_cast<std::size_t>(v) * n + u] = 1;
    }
    return q;
}

namespace {

// Fraction-free (Bareiss) determinant; exact over big integers.
BigInt det_bareiss(std::vector<BigInt> m, int n) {
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n + j]; };
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

QPolynomial q_polynomial(const Graph& g) {
    const int n = g.vertex_count();
    const auto q = signless_laplacian(g);

    // Values of det(k*I - Q) at k = 0..n.
    std::vector<BigInt> y(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i) * n + j] =
                    (i == j ? BigInt(k) : BigInt(0)) - q[static_cast<std::size_t>(i) * n + j];
        y[k] = det_bareiss(std::move(m), n);
    }

    // Forward differences, then the falling-factorial (Newton) coefficients.
    // Both divisions are exact for an integer-coefficient polynomial sampled
    // at consecutive integers.
    for (int i = 1; i <= n; ++i)
        for (int k = n; k >= i; --k) y[k] -= y[k - 1];
    BigInt fact = 1;
    for (int k = 2; k <= n; ++k) {
        fact *= k;
        if (y[k] % fact != 0) throw std::logic_error("inexact Newton coefficient");
        y[k] /= fact;
    }

    // Expand sum_k y[k] * x(x-1)...(x-k+1) into monomial coefficients.
    std::vector<BigInt> poly(n + 1, 0);  // poly[d] multiplies x^d
    std::vector<BigInt> ff{1};           // falling factorial, ff[d] for x^d
    poly[0] = y[0];
    for (int k = 1; k <= n; ++k) {
        // ff *= (x - (k-1))
        ff.push_back(0);
        for (int d = static_cast<int>(ff.size()) - 1; d >= 1; --d)
            ff[d] = ff[d - 1] - ff[d] * (k - 1);
        ff[0] *= -(k - 1);
        for (int d = 0; d <= k; ++d) poly[d] += y[k] * ff[d];
    }

    QPolynomial result;
    result.n = n;
    result.coeffs.resize(n + 1);
    for (int j = 0; j <= n; ++j) result.coeffs[j] = poly[n - j];
    if (result.coeffs[0] != 1) throw std::logic_error("characteristic polynomial not monic");
    return result;
}

bool are_q_cospectral(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return q_polynomial(a) == q_polynomial(b);
}

std::vector<double> q_spectrum(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    const auto m = signless_laplacian(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q(i, j) = static_cast<double>(m[static_cast<std::size_t>(i) * n + j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q, Eigen::EigenvaluesOnly);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

QPolynomial poly_multiply(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out;
    out.n = a.n + b.n;
    out.coeffs.assign(out.n + 1, 0);
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; j <= b.n; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

}  // namespace qspectral
