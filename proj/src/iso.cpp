#include "qspectral/iso.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qspectral {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

namespace {

using Rows = std::array<std::uint32_t, kMaxIsoVertices>;

struct Searcher {
    int n = 0;
    Rows adj{};
    std::vector<unsigned char> best;
    bool have_best = false;

    // Stable colour refinement: split cells by neighbour counts per cell
    // until the partition stops changing. Colour ids are renumbered in
    // (old colour, counts) order, which depends only on the structure.
    void refine(std::array<int, kMaxIsoVertices>& color) const {
        std::array<std::uint32_t, kMaxIsoVertices + 1> cell_mask{};
        std::array<int, kMaxIsoVertices> order{};
        std::vector<std::vector<int>> sig(n);
        for (;;) {
            int ncolors = 0;
            cell_mask.fill(0);
            for (int v = 0; v < n; ++v) {
                cell_mask[color[v]] |= 1u << v;
                ncolors = std::max(ncolors, color[v] + 1);
            }
            for (int v = 0; v < n; ++v) {
                sig[v].assign(ncolors + 1, 0);
                sig[v][0] = color[v];
                for (int c = 0; c < ncolors; ++c)
                    sig[v][c + 1] = std::popcount(adj[v] & cell_mask[c]);
            }
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.begin() + n,
                      [&](int a, int b) { return sig[a] < sig[b]; });
            int next = 0;
            std::array<int, kMaxIsoVertices> fresh{};
            for (int k = 0; k < n; ++k) {
                if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++next;
                fresh[order[k]] = next;
            }
            if (next + 1 == ncolors) {
                color = fresh;
                return;
            }
            color = fresh;
        }
    }

    void emit(const std::array<int, kMaxIsoVertices>& color) {
        std::array<int, kMaxIsoVertices> vertex_at{};
        for (int v = 0; v < n; ++v) vertex_at[color[v]] = v;
        std::vector<unsigned char> enc;
        enc.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
        enc.push_back(static_cast<unsigned char>(n));
        unsigned char acc = 0;
        int nbits = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                acc = static_cast<unsigned char>(acc << 1 |
                      (adj[vertex_at[i]] >> vertex_at[j] & 1));
                if (++nbits == 8) {
                    enc.push_back(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        if (nbits) enc.push_back(static_cast<unsigned char>(acc << (8 - nbits)));
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
        }
    }

    void search(std::array<int, kMaxIsoVertices> color) {
        refine(color);
        int cell_color = -1;
        std::uint32_t cell = 0;
        std::array<std::uint32_t, kMaxIsoVertices> mask{};
        for (int v = 0; v < n; ++v) mask[color[v]] |= 1u << v;
        for (int c = 0; c < n; ++c)
            if (std::popcount(mask[c]) > 1) {
                cell_color = c;
                cell = mask[c];
                break;
            }
        if (cell_color < 0) {
            emit(color);
            return;
        }
        for (std::uint32_t rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            auto branch = color;
            branch[v] = n;  // unique colour; refinement renumbers
            search(branch);
        }
    }
};

}  // namespace

namespace detail {

CanonicalForm canonical_form_rows(std::span<const std::uint32_t> rows, int n) {
    if (n < 0 || n > kMaxIsoVertices)
        throw std::invalid_argument("canonical form supports 0 <= n <= " +
                                    std::to_string(kMaxIsoVertices));
    Searcher s;
    s.n = n;
    for (int v = 0; v < n; ++v) s.adj[v] = rows[v];

    // Edgeless and complete graphs refine to a single cell at every level;
    // any vertex order yields the same encoding, so skip the search.
    int m = 0;
    for (int v = 0; v < n; ++v) m += std::popcount(s.adj[v]);
    m /= 2;
    std::array<int, kMaxIsoVertices> color{};
    if (m == 0 || m == n * (n - 1) / 2) {
        std::array<int, kMaxIsoVertices> ident{};
        for (int v = 0; v < n; ++v) ident[v] = v;
        s.emit(ident);
    } else {
        s.search(color);
    }
    CanonicalForm out;
    out.bytes = std::move(s.best);
    return out;
}

}  // namespace detail

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxIsoVertices)
        throw std::invalid_argument("canonical form supports n <= " +
                                    std::to_string(kMaxIsoVertices) + ", got " +
                                    std::to_string(n));
    Rows rows{};
    for (int v = 0; v < n; ++v) rows[v] = static_cast<std::uint32_t>(g.row64(v));
    return detail::canonical_form_rows(std::span<const std::uint32_t>(rows.data(), n), n);
}

namespace {

std::vector<int> triangle_counts(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> t(n, 0);
    for (int v = 0; v < n; ++v) {
        const std::uint64_t nb = g.row64(v);
        for (std::uint64_t rest = nb; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            t[v] += std::popcount(nb & g.row64(u));
        }
        t[v] /= 2;
    }
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    if (triangle_counts(a) != triangle_counts(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace qspectral
