// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from exact computation and, where they
// contradict the published baseline, re-derived here through independent
// routes (TU-subgraph expansion for the polynomials, brute-force permutation
// search for isomorphism) before the difference is reported.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "qspectral/generators.hpp"
#include "qspectral/graph.hpp"
#include "qspectral/graph_io.hpp"
#include "qspectral/iso.hpp"
#include "qspectral/sampling.hpp"
#include "qspectral/spectral.hpp"
#include "qspectral/survey.hpp"
#include "qspectral/tu.hpp"

using namespace qspectral;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    int id;
    const char* title;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::vector<std::string> notes;

    Criterion(int id_, const char* title_) : id(id_), title(title_) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }

    void note(const std::string& what) { notes.push_back(what); }

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("criterion %d: %s - %s (%.2fs)\n", id, ok ? "PASS" : "FAIL", title, secs);
        for (const auto& n : notes) std::printf("    %s\n", n.c_str());
        if (!ok) ++failures;
        std::fflush(stdout);
    }
};

ClusteredGraph star_k() { return ClusteredGraph(2, std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}}); }

ClusteredGraph noncospectral6() {
    return ClusteredGraph(
        3, std::vector<Edge>{{0, 3}, {0, 4}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::uniform_real_distribution<> unit(0, 1);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) es.push_back({u, v});
    return Graph(n, es);
}

// Brute-force isomorphism by permutation search; the independent oracle used
// to confirm class members are genuinely distinct.
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

struct ExpectedRow {
    int m;
    long long cospectral;
    long long pt;
};

// Frozen from exact computation (and confirmed by the independent routes in
// criterion 4): the full nontrivial-class tables.
const std::map<int, std::vector<ExpectedRow>> kExpectedTable = {
    {4, {{3, 2, 2}}},
    {5, {{3, 2, 2}, {7, 2, 0}}},
    {6, {{3, 2, 2}, {4, 2, 2}, {7, 4, 2}, {8, 4, 2}, {11, 2, 2}, {12, 2, 2}}},
    {7,
     {{3, 2, 2},
      {4, 2, 2},
      {5, 2, 2},
      {6, 2, 0},
      {7, 6, 4},
      {8, 12, 8},
      {9, 14, 10},
      {10, 11, 9},
      {11, 11, 11},
      {12, 14, 14},
      {13, 12, 10},
      {14, 6, 2},
      {15, 2, 0},
      {16, 2, 0},
      {17, 2, 0},
      {18, 2, 0}}},
    {8, {{3, 2, 2}, {4, 2, 2}, {5, 4, 4}, {6, 7, 6}, {7, 16, 12}, {8, 36, 24}, {9, 58, 41}}},
};

}  // namespace

// 1. The 4-vertex pair: exact coefficients and non-isomorphism.
static void criterion1() {
    Criterion c(1, "4-vertex star/triangle pair: exact coefficients, non-isomorphic");
    const auto k = star_k();
    const auto kt = partial_transpose(k);
    const std::vector<BigInt> expect{1, -6, 9, -4, 0};
    c.require(q_polynomial(k).coeffs == expect, "polynomial of the star");
    c.require(q_polynomial(kt).coeffs == expect, "polynomial of the transpose");
    c.require(!are_isomorphic(k, kt), "pair must be non-isomorphic");
    const double secs = std::chrono::duration<double>(Clock::now() - c.start).count();
    c.require(secs < 1.0, "runtime under one second");
}

// 2. TU expansion equals the determinant route everywhere it is feasible.
static void criterion2() {
    Criterion c(2, "TU-expansion oracle equals the exact polynomial");
    long long graphs = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            ++graphs;
            if (tu_polynomial(g) != q_polynomial(g)) {
                c.require(false, "mismatch at n=" + std::to_string(n) + " graph " + to_graph6(g));
                return;
            }
        }
    c.require(graphs == 208, "exhaustive coverage of the 208 classes up to n=6");
    std::mt19937 rng(20240607);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = trial % 2 == 0 ? 7 : 8;
        const double p = trial < 20 ? 0.12 : (trial % 3 == 0 ? 0.3 : (trial % 3 == 1 ? 0.5 : 0.75));
        const Graph g = random_graph(n, p, rng);
        if (tu_polynomial(g) != q_polynomial(g)) {
            c.require(false, "mismatch on random graph " + to_graph6(g));
            return;
        }
    }
    c.note("208 exhaustive + 100 random graphs checked, all coefficients equal");
}

// 3. The six-vertex counterexample spectra.
static void criterion3() {
    Criterion c(3, "six-vertex counterexample: pinned spectra, not cospectral");
    const auto g = noncospectral6();
    const auto t = partial_transpose(g);
    const std::vector<double> sg{0.6277, 1, 1, 2, 3, 6.3723};
    const std::vector<double> st{0.3542, 0.5858, 2, 2, 3.4142, 5.6458};
    const auto cg = q_spectrum(g);
    const auto ct = q_spectrum(t);
    for (int i = 0; i < 6; ++i) {
        c.require(std::abs(cg[i] - sg[i]) < 5e-4, "eigenvalue " + std::to_string(i) + " of G");
        c.require(std::abs(ct[i] - st[i]) < 5e-4, "eigenvalue " + std::to_string(i) + " of Gt");
    }
    c.require(!are_q_cospectral(g, t), "pair must not be cospectral");
}

// 4. Survey tables: frozen computed rows, baseline comparison with
// independent re-verification of every disputed row.
static void criterion4() {
    Criterion c(4, "survey tables for n=4..8 (m<=9 at n=8)");
    std::map<int, std::vector<SurveyRow>> computed;
    std::map<int, std::vector<Graph>> reps;
    for (int n = 4; n <= 8; ++n) {
        SurveyOptions opts;
        if (n == 8) opts.max_pt_edges = 9;
        reps[n] = enumerate_graphs(n);
        computed[n] = survey_table_for(reps[n], n, opts);
    }

    // frozen expectations
    for (const auto& [n, rows] : kExpectedTable) {
        for (const auto& expect : rows) {
            if (n == 8 && expect.m > 9) continue;
            bool found = false;
            for (const auto& row : computed[n])
                if (row.m == expect.m) {
                    found = true;
                    c.require(row.cospectral_count == expect.cospectral &&
                                  row.pt_count == expect.pt,
                              "row n=" + std::to_string(n) + " m=" + std::to_string(expect.m) +
                                  " drifted from the frozen values");
                }
            c.require(found, "missing row n=" + std::to_string(n) + " m=" + std::to_string(expect.m));
        }
        // and no unexpected extra rows (pt-computed ones)
        for (const auto& row : computed[n]) {
            if (!row.pt_computed) continue;
            bool known = false;
            for (const auto& expect : kExpectedTable.at(n))
                if (expect.m == row.m) known = true;
            c.require(known, "unexpected computed row n=" + std::to_string(n) + " m=" +
                                 std::to_string(row.m));
        }
    }

    // baseline comparison; disagreements must be flagged and re-verified
    int reported = 0;
    for (const BaselineRow& base : baseline_rows()) {
        const SurveyRow* row = nullptr;
        for (const auto& r : computed[base.n])
            if (r.m == base.m) row = &r;
        c.require(row != nullptr,
                  "baseline row n=" + std::to_string(base.n) + " m=" + std::to_string(base.m) +
                      " missing from the computed table");
        if (!row) continue;
        const bool agree =
            row->cospectral_count == base.cospectral_count && row->pt_count == base.pt_count;
        if (agree) {
            c.require(!base.counts_suspect, "row n=" + std::to_string(base.n) + " m=" +
                                                std::to_string(base.m) +
                                                " agrees but is marked suspect");
            continue;
        }
        c.require(base.counts_suspect,
                  "non-suspect baseline row n=" + std::to_string(base.n) + " m=" +
                      std::to_string(base.m) + " disagrees with the computed table");
        if (!base.counts_suspect) continue;

        // Independent re-derivation of the computed cospectral count at this
        // (n, m): group by the TU-expansion polynomial and certify members
        // pairwise non-isomorphic by permutation search.
        std::map<std::vector<BigInt>, std::vector<const Graph*>> groups;
        for (const Graph& g : reps[base.n])
            if (g.edge_count() == base.m) groups[tu_polynomial(g).coeffs].push_back(&g);
        long long count = 0;
        bool distinct = true;
        for (const auto& [coeffs, members] : groups) {
            if (members.size() < 2) continue;
            count += static_cast<long long>(members.size());
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (brute_isomorphic(*members[i], *members[j])) distinct = false;
        }
        c.require(distinct, "class members not distinct at n=" + std::to_string(base.n) +
                                " m=" + std::to_string(base.m));
        c.require(count == row->cospectral_count,
                  "independent re-derivation disagrees at n=" + std::to_string(base.n) + " m=" +
                      std::to_string(base.m));
        ++reported;
        std::ostringstream msg;
        msg << "verified discrepancy n=" << base.n << " m=" << base.m << ": computed "
            << row->cospectral_count << "/" << row->pt_count << " vs published "
            << base.cospectral_count << "/" << base.pt_count;
        c.note(msg.str());
    }
    // rows the baseline omits entirely
    for (const auto& [n, rows] : computed)
        for (const auto& row : rows) {
            if (!row.pt_computed) continue;
            bool in_baseline = false;
            for (const BaselineRow& base : baseline_rows())
                if (base.n == n && base.m == row.m) in_baseline = true;
            if (!in_baseline) {
                std::ostringstream msg;
                msg << "row absent from the published table: n=" << n << " m=" << row.m << " ("
                    << row.cospectral_count << "/" << row.pt_count << ")";
                c.note(msg.str());
            }
        }

    // the published ratio anomaly at n=8 m=5
    for (const auto& row : computed[8])
        if (row.m == 5) {
            const auto [num, den] = row.ratio();
            std::ostringstream msg;
            msg << "n=8 m=5 ratio: computed " << num << "/" << den
                << ", published 0 (inconsistent with its own counts 4/4)";
            c.note(msg.str());
            c.require(num == 1 && den == 1, "n=8 m=5 computed ratio");
        }

    // aggregates
    long long c6 = 0, p6 = 0, c7 = 0, p7 = 0;
    for (const auto& row : computed[6]) {
        c6 += row.cospectral_count;
        p6 += row.pt_count;
    }
    for (const auto& row : computed[7]) {
        c7 += row.cospectral_count;
        p7 += row.pt_count;
    }
    c.require(4 * p6 == 3 * c6, "aggregate ratio at n=6 must be exactly 3/4");
    c.require(p7 == 74, "aggregate realizable count at n=7 must match the published total 74");
    {
        std::ostringstream msg;
        msg << "n=7 aggregate: computed " << p7 << "/" << c7 << " = " << (double)p7 / c7
            << "; published 74/104 = 0.7115 rests on the erroneous rows above";
        c.note(msg.str());
    }

    // structural consistency of the labelling search at n=8: within a class
    // of two, realizability is all-or-nothing
    {
        std::vector<Graph> small;
        for (const Graph& g : reps[8])
            if (g.edge_count() <= 9) small.push_back(g);
        for (const auto& cls : cospectral_classes(small)) {
            int pt = 0;
            for (const Graph& g : cls.members) pt += pt_realizable(g) ? 1 : 0;
            if (cls.members.size() == 2)
                c.require(pt == 0 || pt == 2, "witness pairing violated in a class of two");
            if (cls.members.size() == 3)
                c.require(pt != 1, "witness pairing violated in a class of three");
        }
    }
    c.note(std::to_string(reported) + " published rows fail exact recomputation and were "
                                      "re-verified independently");
}

// 5. Generator soundness.
static void criterion5() {
    Criterion c(5, "generator families verify across the parameter sweeps");
    int checked = 0;

    for (int q = 4; q <= 7; ++q)
        for (int i = 1; i <= q; ++i)
            for (int j = i + 2; j <= q; ++j) {
                if (j - i == q - 1) continue;
                const auto rep = theorem1_graph(q, i, j);
                ++checked;
                c.require(rep.cospectral && !rep.isomorphic,
                          "two-cycle chord family at " + rep.params);
            }

    for (int q = 3; q <= 7; ++q)
        for (int i = 1; i <= q; ++i) {
            const auto rep = corollary1_graph(q, i);
            ++checked;
            c.require(rep.cospectral && !rep.isomorphic, "cycle-pair family at " + rep.params);
        }

    for (int q = 4; q <= 6; ++q) {
        // exhaustive over diagonal subsets of {2..q} (8, 16 and 32 sets)
        const int count = 1 << (q - 1);
        for (int mask = 0; mask < count; ++mask) {
            std::set<int> diag;
            for (int k = 2; k <= q; ++k)
                if (mask >> (k - 2) & 1) diag.insert(k);
            const auto rep = corollary2_graph(q, diag);
            ++checked;
            c.require(rep.cospectral, "cycle-path family at " + rep.params);
        }
    }

    // growth procedures: seeded samplers shared with the CLI
    const std::uint32_t seed = 5150;
    for (const auto& rep : sample_procedure_instances(1, 24, seed)) {
        ++checked;
        c.require(rep.cospectral, "union growth at " + rep.params);
        c.require(!rep.isomorphic, "union growth keeps the pair distinct at " + rep.params);
    }
    for (const auto& rep : sample_procedure_instances(2, 24, seed)) {
        ++checked;
        c.require(rep.cospectral && !rep.isomorphic, "chord-pair growth at " + rep.params);
    }
    for (const auto& rep : sample_procedure_instances(3, 24, seed)) {
        ++checked;
        c.require(rep.cospectral, "cross growth at " + rep.params);
    }
    for (const auto& rep : sample_procedure_instances(4, 24, seed)) {
        ++checked;
        c.require(rep.cospectral && !rep.isomorphic, "vertex growth at " + rep.params);
    }
    for (const auto& rep : sample_procedure_instances(5, 24, seed)) {
        ++checked;
        c.require(rep.cospectral, "swap-symmetric growth at " + rep.params);
        c.require(!rep.isomorphic, "swap-symmetric growth keeps the pair distinct");
    }

    c.note(std::to_string(checked) + " generator instances verified");
}

// 6. Counting formula versus enumeration.
static void criterion6() {
    Criterion c(6, "partially symmetric counts: closed form equals enumeration");
    const long long expect[] = {2, 32, 4096};
    for (int q = 1; q <= 3; ++q) {
        c.require(count_partially_symmetric(q) == expect[q - 1],
                  "closed form at q=" + std::to_string(q));
        c.require(brute_count_partially_symmetric(q) == expect[q - 1],
                  "enumeration at q=" + std::to_string(q));
    }
}

// 7. Randomized property suite.
static void criterion7() {
    Criterion c(7, "randomized property suite");
    std::mt19937 rng(424241);
    std::uniform_real_distribution<> unit(0, 1);
    long long cases = 0;

    auto random_clustered = [&](int max_q, double p) {
        const int q = 1 + int(rng() % max_q);
        std::vector<Edge> es;
        for (int u = 0; u < 2 * q; ++u)
            for (int v = u + 1; v < 2 * q; ++v)
                if (unit(rng) < p) es.push_back({u, v});
        return ClusteredGraph(q, es);
    };

    for (int trial = 0; trial < 3000; ++trial) {
        const auto g = random_clustered(4, 0.35);
        const auto t = partial_transpose(g);
        ++cases;
        if (partial_transpose(t) != g) {
            c.require(false, "involution violated");
            return;
        }
        const int q = g.cluster_size();
        for (int mu = 1; mu <= 2; ++mu) {
            int dg = 0, dt = 0;
            for (int i = 1; i <= q; ++i) {
                dg += g.degree(g.slot(mu, i));
                dt += t.degree(t.slot(mu, i));
            }
            if (dg != dt) {
                c.require(false, "cluster degree sum violated");
                return;
            }
        }
    }

    for (int trial = 0; trial < 1500; ++trial) {
        const auto a = random_clustered(3, 0.4);
        const auto b = random_clustered(3, 0.4);
        ++cases;
        if (partial_transpose(disjoint_union(a, b)) !=
            disjoint_union(partial_transpose(a), partial_transpose(b))) {
            c.require(false, "transpose does not commute with the union");
            return;
        }
    }

    for (int trial = 0; trial < 600; ++trial) {
        const auto a = random_clustered(3, 0.4);
        const auto b = random_clustered(3, 0.4);
        ++cases;
        if (q_polynomial(disjoint_union(a, b)) !=
            poly_multiply(q_polynomial(a), q_polynomial(b))) {
            c.require(false, "polynomial multiplicativity violated");
            return;
        }
    }

    for (int graph_trial = 0; graph_trial < 50; ++graph_trial) {
        const int n = 3 + int(rng() % 6);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < 0.4) es.push_back({u, v});
        const Graph g(n, es);
        const auto canon = canonical_form(g);
        const auto poly = q_polynomial(g);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int t = 0; t < 100; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> res;
            for (const Edge& e : g.edges()) res.push_back(make_edge(perm[e.u], perm[e.v]));
            const Graph h(n, res);
            ++cases;
            if (canonical_form(h) != canon) {
                c.require(false, "canonical form not invariant under relabelling");
                return;
            }
            // isomorphic graphs must be cospectral
            if (q_polynomial(h) != poly) {
                c.require(false, "isomorphic graphs with different polynomials");
                return;
            }
        }
    }

    c.require(cases >= 10000, "at least ten thousand randomized cases");
    c.note(std::to_string(cases) + " randomized cases, zero violations");
}

// 8. Pinned fixture pairs including the negative controls.
static void criterion8() {
    Criterion c(8, "pinned fixtures (positives and negative controls)");
    int positives = 0, negatives = 0;
    for (const auto& fc : fixture_suite()) {
        c.require(fc.ok(), "fixture " + fc.name);
        (fc.expect_pair ? positives : negatives) += 1;
    }
    c.require(positives == 8 && negatives == 14, "fixture inventory");
}

// 9. The two switchings of the same eight-vertex graph differ.
static void criterion9() {
    Criterion c(9, "eight-vertex switching comparison");
    const ClusteredGraph g(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {5, 6}, {1, 4}, {1, 7}});
    const ClusteredGraph gm(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {5, 6}, {1, 5}, {1, 6}});
    const auto tau = partial_transpose(g);
    const ClusteredGraph tau_expected(
        4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {5, 6}, {0, 5}, {3, 5}});
    c.require(tau == tau_expected, "the transpose must match the transcribed figure");
    c.require(!are_isomorphic(tau, gm), "the transpose must differ from the other switching");
}

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
