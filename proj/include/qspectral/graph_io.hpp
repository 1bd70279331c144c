#pragma once

// Text formats: the native edge-list format ("q=<int>" header, one "u v" pair
// per line, '#' comments), graph6 for interoperability, and DOT for plotting.

#include <iosfwd>
#include <string>
#include <vector>

#include "qspectral/graph.hpp"

namespace qspectral {

std::string to_edgelist(const ClusteredGraph& g);
ClusteredGraph parse_edgelist(std::istream& in);
ClusteredGraph parse_edgelist(const std::string& text);

// Inline form "u-v,u-v,..."; empty string means no edges.
std::vector<Edge> parse_edge_spec(const std::string& spec);

std::string to_graph6(const Graph& g);
Graph parse_graph6_line(const std::string& line);

// One graph6 graph per line; blank lines and '>>graph6<<' headers are
// skipped. Malformed lines report their 1-based line number.
std::vector<Graph> ingest_graph6(std::istream& in);

// Clusters are rendered as two same-rank rows.
std::string to_dot(const ClusteredGraph& g);

}  // namespace qspectral
