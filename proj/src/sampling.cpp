#include "qspectral/sampling.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace qspectral {

namespace {

struct Sampler {
    std::mt19937 rng;
    explicit Sampler(std::uint32_t seed) : rng(seed) {}

    bool coin(double p) { return std::uniform_real_distribution<>(0, 1)(rng) < p; }
    int pick(int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }

    GeneratorReport random_base() {
        if (coin(0.5)) {
            const int q = pick(4, 7);
            std::vector<std::pair<int, int>> opts;
            for (int i = 1; i <= q; ++i)
                for (int j = i + 2; j <= q; ++j)
                    if (j - i != q - 1) opts.emplace_back(i, j);
            const auto [i, j] = opts[rng() % opts.size()];
            return theorem1_graph(q, i, j);
        }
        const int q = pick(3, 7);
        return corollary1_graph(q, pick(1, q));
    }

    // reflection of 1..q exchanging the distinguished indices
    static int axis(int i, int j, int q, int x) {
        const int r = (i + j - x) % q;
        return r <= 0 ? r + q : r;
    }
};

GeneratorReport sample_p1(Sampler& s) {
    const auto base = s.coin(0.5) ? theorem1_graph(s.pick(4, 6), 1, 3)
                                  : corollary1_graph(s.pick(3, 6), 1);
    const int pq = s.pick(1, 3);
    ClusteredGraph ref(pq);
    std::vector<Edge> pes;
    for (int a = 1; a <= pq; ++a) {
        if (s.coin(0.5)) pes.push_back(make_edge(ref.slot(1, a), ref.slot(2, a)));
        for (int b = a + 1; b <= pq; ++b) {
            if (s.coin(0.3)) pes.push_back(make_edge(ref.slot(1, a), ref.slot(1, b)));
            if (s.coin(0.3)) pes.push_back(make_edge(ref.slot(2, a), ref.slot(2, b)));
            if (s.coin(0.25)) {
                pes.push_back(make_edge(ref.slot(1, a), ref.slot(2, b)));
                pes.push_back(make_edge(ref.slot(1, b), ref.slot(2, a)));
            }
        }
    }
    return procedure1_union(base.graph, ClusteredGraph(pq, pes));
}

GeneratorReport sample_p2(Sampler& s) {
    for (;;) {
        const auto base = s.random_base();
        const int q = base.graph.cluster_size();
        const int i = base.seed_i, j = base.seed_j;
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> fixed;
        for (int k = 1; k <= q; ++k) {
            if (k == i || k == j) continue;
            const int l = Sampler::axis(i, j, q, k);
            if (l == k) fixed.push_back(k);
            if (k < l && l != i && l != j) {
                const auto& g = base.graph;
                if (!g.has_edge(g.slot(1, k), g.slot(1, l)) &&
                    !g.has_edge(g.slot(2, k), g.slot(2, l)) && s.coin(0.7))
                    pairs.emplace_back(k, l);
            }
        }
        if (fixed.size() == 2) {
            const auto& g = base.graph;
            if (!g.has_edge(g.slot(1, fixed[0]), g.slot(1, fixed[1])) && s.coin(0.7))
                pairs.emplace_back(fixed[0], fixed[1]);
        }
        if (pairs.empty()) continue;
        return procedure2_add_pairs(base, pairs);
    }
}

GeneratorReport sample_p3(Sampler& s) {
    for (;;) {
        const int q = s.pick(4, 6);
        const auto base =
            s.coin(0.5) ? theorem1_graph(q, 1, 3) : corollary1_graph(q, s.pick(1, q));
        const int i = base.seed_i, j = base.seed_j;
        std::set<std::pair<int, int>> cross;
        for (int k = 1; k <= q; ++k)
            for (int l = k; l <= q; ++l) {
                if (k == i || k == j || l == i || l == j) continue;
                if (!s.coin(0.25)) continue;
                const int rk = Sampler::axis(i, j, q, k), rl = Sampler::axis(i, j, q, l);
                cross.insert({k, l});
                cross.insert({l, k});
                cross.insert({rk, rl});
                cross.insert({rl, rk});
            }
        if (cross.empty()) continue;
        return procedure3_add_psym_cross(
            base, std::vector<std::pair<int, int>>(cross.begin(), cross.end()));
    }
}

GeneratorReport sample_p4(Sampler& s) {
    const auto base = s.random_base();
    const int q = base.graph.cluster_size();
    const int i = base.seed_i, j = base.seed_j;
    const int r = s.pick(1, 3);
    std::vector<IntraEdge> intra, attach;
    std::vector<std::pair<int, int>> cross;
    for (int mu = 1; mu <= 2; ++mu)
        for (int a = q + 1; a <= q + r; ++a)
            for (int b = a + 1; b <= q + r; ++b)
                if (s.coin(0.4)) intra.push_back({mu, a, b});
    for (int k = 1; k <= q; ++k) {
        if (k == i || k == j || Sampler::axis(i, j, q, k) != k) continue;
        for (int mu = 1; mu <= 2; ++mu)
            for (int t = q + 1; t <= q + r; ++t)
                if (s.coin(0.35)) attach.push_back({mu, k, t});
    }
    for (int a = q + 1; a <= q + r; ++a) {
        if (s.coin(0.3)) cross.push_back({a, a});
        for (int b = a + 1; b <= q + r; ++b)
            if (s.coin(0.25)) {
                cross.push_back({a, b});
                cross.push_back({b, a});
            }
    }
    return procedure4_extend(base, r, intra, attach, cross);
}

GeneratorReport sample_p5(Sampler& s) {
    // the pinned swap-symmetric base with asymmetric edge (v12, v23)
    const ClusteredGraph g0(
        3, std::vector<Edge>{{0, 1}, {0, 2}, {3, 4}, {3, 5}, {0, 3}, {1, 4}, {1, 5}});
    const int q = 3;
    const int r = s.pick(1, 3);
    const std::pair<int, int> av = s.coin(0.5) ? std::pair{1, 1} : std::pair{2, 1};
    std::vector<int> targets;
    for (int t = q + 1; t <= q + r; ++t)
        if (s.coin(0.6)) targets.push_back(t);
    if (targets.empty()) targets.push_back(q + 1);
    std::vector<IntraEdge> intra;
    for (int mu = 1; mu <= 2; ++mu)
        for (int a = q + 1; a <= q + r; ++a)
            for (int b = a + 1; b <= q + r; ++b)
                if (s.coin(0.4)) intra.push_back({mu, a, b});
    std::vector<std::pair<int, int>> cross;
    for (int a = q + 1; a <= q + r; ++a) {
        if (s.coin(0.3)) cross.push_back({a, a});
        for (int b = a + 1; b <= q + r; ++b)
            if (s.coin(0.2)) {
                cross.push_back({a, b});
                cross.push_back({b, a});
            }
    }
    return procedure5_extend(g0, r, intra, av, targets, cross);
}

}  // namespace

std::vector<GeneratorReport> sample_procedure_instances(int procedure, int count,
                                                        std::uint32_t seed) {
    if (procedure < 1 || procedure > 5)
        throw std::invalid_argument("procedure must be 1..5");
    Sampler s(seed + static_cast<std::uint32_t>(procedure) * 0x9e3779b9u);
    std::vector<GeneratorReport> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        switch (procedure) {
            case 1: out.push_back(sample_p1(s)); break;
            case 2: out.push_back(sample_p2(s)); break;
            case 3: out.push_back(sample_p3(s)); break;
            case 4: out.push_back(sample_p4(s)); break;
            default: out.push_back(sample_p5(s)); break;
        }
    }
    return out;
}

}  // namespace qspectral
