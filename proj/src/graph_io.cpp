#include "qspectral/graph_io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace qspectral {

std::string to_edgelist(const ClusteredGraph& g) {
    std::ostringstream out;
    out << "q=" << g.cluster_size() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

ClusteredGraph parse_edgelist(std::istream& in) {
    std::string line;
    int q = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (q < 0) {
            if (first.rfind("q=", 0) != 0)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected q=<int> header");
            q = std::stoi(first.substr(2));
            if (q < 0) throw std::invalid_argument("q must be non-negative");
            continue;
        }
        int v;
        if (!(ls >> v))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected 'u v'");
        edges.push_back(make_edge(std::stoi(first), v));
    }
    if (q < 0) throw std::invalid_argument("edge list is missing the q=<int> header");
    return ClusteredGraph(q, edges);
}

ClusteredGraph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    return parse_edgelist(in);
}

std::vector<Edge> parse_edge_spec(const std::string& spec) {
    std::vector<Edge> edges;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("edge spec item '" + item + "': expected u-v");
        edges.push_back(make_edge(std::stoi(item.substr(0, dash)),
                                  std::stoi(item.substr(dash + 1))));
    }
    return edges;
}

namespace {

constexpr int kG6Bias = 63;

void append_g6_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int x = 0;
        for (std::size_t t = 0; t < 6; ++t) {
            x <<= 1;
            if (k + t < bits.size() && bits[k + t]) x |= 1;
        }
        out.push_back(static_cast<char>(x + kG6Bias));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Bias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
        out.push_back(static_cast<char>((n & 63) + kG6Bias));
    } else {
        throw std::invalid_argument("graph6 export supports n <= 258047");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_g6_bits(out, bits);
    return out;
}

Graph parse_graph6_line(const std::string& line) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("truncated graph6 data");
        const unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("illegal graph6 character (code " +
                                        std::to_string(int(c)) + ")");
        return c - kG6Bias;
    };
    long long n;
    int first = (pos < line.size() && line[pos] == 126) ? (++pos, -1) : next();
    if (first >= 0) {
        n = first;
    } else if (pos < line.size() && line[pos] == 126) {
        ++pos;
        n = 0;
        for (int k = 0; k < 6; ++k) n = n << 6 | next();
    } else {
        n = 0;
        for (int k = 0; k < 3; ++k) n = n << 6 | next();
    }
    if (n > 2048) throw std::invalid_argument("graph6 order too large for this tool");
    const long long nbits = n * (n - 1) / 2;
    std::vector<bool> bits;
    bits.reserve(nbits);
    while (static_cast<long long>(bits.size()) < nbits) {
        const int x = next();
        for (int t = 5; t >= 0; --t) bits.push_back(x >> t & 1);
    }
    if (pos != line.size()) throw std::invalid_argument("trailing graph6 data");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[k++]) edges.push_back({i, j});
    return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> ingest_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind(">>", 0) == 0) continue;
        try {
            out.push_back(parse_graph6_line(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("graph6 line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
    return out;
}

std::string to_dot(const ClusteredGraph& g) {
    std::ostringstream out;
    const int q = g.cluster_size();
    out << "graph G {\n  node [shape=circle];\n";
    for (int mu = 1; mu <= 2; ++mu) {
        out << "  { rank=same;";
        for (int i = 1; i <= q; ++i) {
            const int v = g.slot(mu, i);
            out << " v" << v << " [label=\"" << mu << "," << i << "\"];";
        }
        out << " }\n";
    }
    for (const Edge& e : g.edges()) out << "  v" << e.u << " -- v" << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace qspectral
