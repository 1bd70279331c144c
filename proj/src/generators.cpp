#include "qspectral/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qspectral/iso.hpp"
#include "qspectral/spectral.hpp"

namespace qspectral {

namespace {

std::vector<Edge> two_cycles(int q) {
    std::vector<Edge> es;
    ClusteredGraph ref(q);
    for (int mu = 1; mu <= 2; ++mu) {
        for (int k = 1; k < q; ++k)
            es.push_back(make_edge(ref.slot(mu, k), ref.slot(mu, k + 1)));
        es.push_back(make_edge(ref.slot(mu, q), ref.slot(mu, 1)));
    }
    return es;
}

void check_index(int q, int k, const char* what) {
    if (k < 1 || k > q)
        throw std::invalid_argument(std::string(what) + " index " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(q));
}

}  // namespace

GeneratorReport make_report(std::string family, std::string params, ClusteredGraph g,
                            int seed_i, int seed_j) {
    GeneratorReport rep;
    rep.family = std::move(family);
    rep.params = std::move(params);
    rep.transpose = partial_transpose(g);
    rep.cospectral = are_q_cospectral(g, rep.transpose);
    rep.isomorphic = are_isomorphic(g, rep.transpose);
    rep.graph = std::move(g);
    rep.seed_i = seed_i;
    rep.seed_j = seed_j;
    return rep;
}

GeneratorReport theorem1_graph(int q, int i, int j) {
    if (q < 4) throw std::invalid_argument("two q-cycles with a non-adjacent pair need q >= 4");
    check_index(q, i, "i");
    check_index(q, j, "j");
    if (i >= j) throw std::invalid_argument("need i < j");
    if (j - i == 1 || j - i == q - 1)
        throw std::invalid_argument("v1" + std::to_string(i) + " and v1" + std::to_string(j) +
                                    " are adjacent on the cycle; the construction needs a "
                                    "non-adjacent pair");
    ClusteredGraph ref(q);
    auto es = two_cycles(q);
    es.push_back(make_edge(ref.slot(1, i), ref.slot(1, j)));
    es.push_back(make_edge(ref.slot(1, i), ref.slot(2, i)));
    es.push_back(make_edge(ref.slot(1, i), ref.slot(2, j)));
    std::ostringstream params;
    params << "q=" << q << " i=" << i << " j=" << j;
    return make_report("theorem1", params.str(), ClusteredGraph(q, es), i, j);
}

namespace {

GeneratorReport corollary1_impl(int q, int i, bool remove_bottom_edge) {
    if (q < 3) throw std::invalid_argument("two q-cycles need q >= 3");
    check_index(q, i, "i");
    const int ip1 = i % q + 1;
    ClusteredGraph ref(q);
    auto es = two_cycles(q);
    es.push_back(make_edge(ref.slot(1, i), ref.slot(2, i)));
    es.push_back(make_edge(ref.slot(1, i), ref.slot(2, ip1)));
    ClusteredGraph g(q, es);
    if (remove_bottom_edge) {
        const Edge drop[] = {make_edge(ref.slot(2, i), ref.slot(2, ip1))};
        g = ClusteredGraph::from_graph(g.without_edges(drop));
    }
    std::ostringstream params;
    params << "q=" << q << " i=" << i;
    if (!remove_bottom_edge) params << " keep-edge";
    return make_report(remove_bottom_edge ? "corollary1" : "corollary1-keep", params.str(),
                       std::move(g), i, ip1);
}

}  // namespace

GeneratorReport corollary1_graph(int q, int i) { return corollary1_impl(q, i, true); }

GeneratorReport corollary1_keep_edge(int q, int i) { return corollary1_impl(q, i, false); }

GeneratorReport corollary2_graph(int q, const std::set<int>& diagonal_set) {
    if (q < 4) throw std::invalid_argument("the cycle-plus-path construction needs q >= 4");
    for (int k : diagonal_set) {
        check_index(q, k, "diagonal");
        if (k == 1)
            throw std::invalid_argument("diagonal index 1 collides with the mandatory "
                                        "(v11, v21) edge");
    }
    ClusteredGraph ref(q);
    std::vector<Edge> es;
    for (int mu = 1; mu <= 2; ++mu)
        for (int k = 1; k < q; ++k)
            es.push_back(make_edge(ref.slot(mu, k), ref.slot(mu, k + 1)));
    es.push_back(make_edge(ref.slot(1, 1), ref.slot(1, q)));
    es.push_back(make_edge(ref.slot(1, 1), ref.slot(2, 1)));
    es.push_back(make_edge(ref.slot(1, 1), ref.slot(2, q)));
    for (int k : diagonal_set) es.push_back(make_edge(ref.slot(1, k), ref.slot(2, k)));
    std::ostringstream params;
    params << "q=" << q << " diag={";
    bool first = true;
    for (int k : diagonal_set) {
        if (!first) params << ",";
        params << k;
        first = false;
    }
    params << "}";
    return make_report("corollary2", params.str(), ClusteredGraph(q, es), 1, q);
}

GeneratorReport procedure1_union(const ClusteredGraph& g, const ClusteredGraph& partner,
                                 bool allow_isomorphic_partner) {
    if (allow_isomorphic_partner) {
        if (!are_isomorphic(partner, partial_transpose(partner)))
            throw std::invalid_argument(
                "the union partner must be isomorphic to its partial transpose");
    } else if (!is_partially_symmetric(partner)) {
        throw std::invalid_argument(
            "the union partner must be partially symmetric (pass "
            "allow_isomorphic_partner for the weaker hypothesis)");
    }
    std::ostringstream params;
    params << "q=" << g.cluster_size() << "+" << partner.cluster_size();
    return make_report("procedure1", params.str(), disjoint_union(g, partner));
}

GeneratorReport procedure2_add_pairs(const GeneratorReport& base,
                                     const std::vector<std::pair<int, int>>& pairs) {
    const ClusteredGraph& g = base.graph;
    const int q = g.cluster_size();
    if (base.seed_i < 1 || base.seed_j < 1)
        throw std::invalid_argument("base graph carries no distinguished cross indices");
    std::vector<Edge> add;
    for (const auto& [k, l] : pairs) {
        check_index(q, k, "pair");
        check_index(q, l, "pair");
        if (k == l) throw std::invalid_argument("pair endpoints must differ");
        if (k == base.seed_i || k == base.seed_j || l == base.seed_i || l == base.seed_j)
            throw std::invalid_argument("pair (" + std::to_string(k) + "," +
                                        std::to_string(l) +
                                        ") touches the distinguished indices {" +
                                        std::to_string(base.seed_i) + "," +
                                        std::to_string(base.seed_j) + "}");
        for (int mu = 1; mu <= 2; ++mu) {
            const Edge e = make_edge(g.slot(mu, k), g.slot(mu, l));
            if (g.has_edge(e.u, e.v))
                throw std::invalid_argument("edge (" + std::to_string(mu) + "," +
                                            std::to_string(k) + ")-(" + std::to_string(mu) +
                                            "," + std::to_string(l) + ") is already present");
            add.push_back(e);
        }
    }
    std::ostringstream params;
    params << base.params << " pairs=" << pairs.size();
    return make_report("procedure2", params.str(),
                       ClusteredGraph::from_graph(g.with_edges(add)), base.seed_i,
                       base.seed_j);
}

GeneratorReport procedure3_add_psym_cross(const GeneratorReport& base,
                                          const std::vector<std::pair<int, int>>& cross_edges) {
    const ClusteredGraph& g = base.graph;
    const int q = g.cluster_size();
    if (base.seed_i < 1 || base.seed_j < 1)
        throw std::invalid_argument("base graph carries no distinguished cross indices");
    std::set<std::pair<int, int>> wanted(cross_edges.begin(), cross_edges.end());
    std::vector<Edge> add;
    for (const auto& [k, l] : wanted) {
        check_index(q, k, "cross");
        check_index(q, l, "cross");
        if (k == base.seed_i || k == base.seed_j || l == base.seed_i || l == base.seed_j)
            throw std::invalid_argument("cross edge touches the distinguished indices");
        if (!wanted.count({l, k}))
            throw std::invalid_argument("cross set is not mirror-closed: (" +
                                        std::to_string(k) + "," + std::to_string(l) +
                                        ") lacks (" + std::to_string(l) + "," +
                                        std::to_string(k) + ")");
        add.push_back(make_edge(g.slot(1, k), g.slot(2, l)));
    }
    std::ostringstream params;
    params << base.params << " cross=" << wanted.size();
    return make_report("procedure3", params.str(),
                       ClusteredGraph::from_graph(g.with_edges(add)), base.seed_i,
                       base.seed_j);
}

namespace {

// Rebuilds a clustered graph on q + r slots per cluster, keeping cluster
// coordinates of the original vertices.
std::vector<Edge> widen_edges(const ClusteredGraph& g, int r) {
    const int q = g.cluster_size();
    ClusteredGraph ref(q + r);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        es.push_back(make_edge(ref.slot(g.cluster_of(e.u), g.index_of(e.u)),
                               ref.slot(g.cluster_of(e.v), g.index_of(e.v))));
    return es;
}

void check_new_index(int q, int q_ext, int t, const char* what) {
    if (t <= q || t > q_ext)
        throw std::invalid_argument(std::string(what) + " index " + std::to_string(t) +
                                    " must name a new slot in " + std::to_string(q + 1) +
                                    ".." + std::to_string(q_ext));
}

void append_mirror_closed_cross(std::vector<Edge>& es, const ClusteredGraph& ref, int q,
                                int q_ext, const std::vector<std::pair<int, int>>& cross_new) {
    std::set<std::pair<int, int>> wanted(cross_new.begin(), cross_new.end());
    for (const auto& [a, b] : wanted) {
        check_new_index(q, q_ext, a, "cross");
        check_new_index(q, q_ext, b, "cross");
        if (!wanted.count({b, a}))
            throw std::invalid_argument("new cross edges must form a partially symmetric set; ("
                                        + std::to_string(a) + "," + std::to_string(b) +
                                        ") lacks its mirror");
        es.push_back(make_edge(ref.slot(1, a), ref.slot(2, b)));
    }
}

}  // namespace

GeneratorReport procedure4_extend(const GeneratorReport& base, int r,
                                  const std::vector<IntraEdge>& intra_new,
                                  const std::vector<IntraEdge>& attach,
                                  const std::vector<std::pair<int, int>>& cross_new) {
    const ClusteredGraph& g = base.graph;
    const int q = g.cluster_size();
    const int i = base.seed_i, j = base.seed_j;
    if (r < 1) throw std::invalid_argument("need at least one new vertex per cluster");
    if (i < 1 || j < 1)
        throw std::invalid_argument("base graph carries no distinguished cross indices");
    if (!g.has_edge(g.slot(1, i), g.slot(2, j)) ||
        g.has_edge(g.slot(1, j), g.slot(2, i)))
        throw std::invalid_argument("base graph must contain (v1" + std::to_string(i) +
                                    ", v2" + std::to_string(j) + ") with its mirror absent");
    const int q_ext = q + r;
    ClusteredGraph ref(q_ext);
    auto es = widen_edges(g, r);
    for (const IntraEdge& e : intra_new) {
        if (e.mu != 1 && e.mu != 2) throw std::invalid_argument("cluster must be 1 or 2");
        check_new_index(q, q_ext, e.a, "intra");
        check_new_index(q, q_ext, e.b, "intra");
        es.push_back(make_edge(ref.slot(e.mu, e.a), ref.slot(e.mu, e.b)));
    }
    for (const IntraEdge& e : attach) {
        if (e.mu != 1 && e.mu != 2) throw std::invalid_argument("cluster must be 1 or 2");
        check_index(q, e.a, "attachment (old)");
        check_new_index(q, q_ext, e.b, "attachment (new)");
        if (e.a == i || e.a == j)
            throw std::invalid_argument("attachments must avoid v1" + std::to_string(i) +
                                        ", v1" + std::to_string(j) + ", v2" +
                                        std::to_string(i) + ", v2" + std::to_string(j));
        es.push_back(make_edge(ref.slot(e.mu, e.a), ref.slot(e.mu, e.b)));
    }
    append_mirror_closed_cross(es, ref, q, q_ext, cross_new);
    std::ostringstream params;
    params << base.params << " r=" << r;
    return make_report("procedure4", params.str(), ClusteredGraph(q_ext, es), i, j);
}

GeneratorReport procedure5_extend(const ClusteredGraph& g0, int r,
                                  const std::vector<IntraEdge>& intra_new,
                                  std::pair<int, int> attach_vertex,
                                  const std::vector<int>& attach_targets,
                                  const std::vector<std::pair<int, int>>& cross_new) {
    const int q = g0.cluster_size();
    if (r < 1) throw std::invalid_argument("need at least one new vertex per cluster");
    if (swap_clusters(g0) != static_cast<const Graph&>(partial_transpose(g0)))
        throw std::invalid_argument(
            "base graph must map onto its partial transpose under the cluster swap");
    const auto asym = asymmetric_edge_set(g0);
    if (asym.empty())
        throw std::invalid_argument("base graph must have a non-empty asymmetric edge set");
    const auto [mu, k] = attach_vertex;
    if (mu != 1 && mu != 2) throw std::invalid_argument("cluster must be 1 or 2");
    check_index(q, k, "attachment vertex");
    const int v = g0.slot(mu, k);
    for (const Edge& e : asym)
        if (e.u == v || e.v == v)
            throw std::invalid_argument("attachment vertex (v" + std::to_string(mu) +
                                        std::to_string(k) +
                                        ") is incident to an asymmetric edge");
    const int q_ext = q + r;
    ClusteredGraph ref(q_ext);
    auto es = widen_edges(g0, r);
    for (const IntraEdge& e : intra_new) {
        if (e.mu != 1 && e.mu != 2) throw std::invalid_argument("cluster must be 1 or 2");
        check_new_index(q, q_ext, e.a, "intra");
        check_new_index(q, q_ext, e.b, "intra");
        es.push_back(make_edge(ref.slot(e.mu, e.a), ref.slot(e.mu, e.b)));
    }
    for (int t : attach_targets) {
        check_new_index(q, q_ext, t, "attachment target");
        es.push_back(make_edge(ref.slot(mu, k), ref.slot(mu, t)));
    }
    append_mirror_closed_cross(es, ref, q, q_ext, cross_new);
    std::ostringstream params;
    params << "q=" << q << " r=" << r << " attach=v" << mu << k;
    return make_report("procedure5", params.str(), ClusteredGraph(q_ext, es));
}

BigInt family_count(const std::string& family, int q) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    if (family == "theorem1") return BigInt(1) << (q - 2);
    if (family == "corollary1") return 1;
    if (family == "procedure2") return BigInt(1) << (q * (q - 2) - 1);
    if (family == "procedure3") return BigInt(1) << ((q - 2) * (3 * q - 7) / 2);
    throw std::invalid_argument("unknown family '" + family +
                                "' (known: theorem1, corollary1, procedure2, procedure3)");
}

}  // namespace qspectral
