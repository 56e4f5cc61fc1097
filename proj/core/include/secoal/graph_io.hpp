#pragma once

#include <string>
#include <string_view>

#include "secoal/graph.hpp"

namespace secoal {

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError on a malformed line and
/// CapExceeded when the encoded order is above `max_order`.
Graph parse_graph6(std::string_view text, int max_order = kDefaultVertexCap);

/// Canonical graph6 encoding, without header or newline.
std::string write_graph6(const Graph& g);

/// Parses "n u1 v1 u2 v2 ..." (any whitespace). Duplicate edges collapse.
Graph parse_edge_list(std::string_view text, int max_order = kDefaultVertexCap);

/// Inverse of parse_edge_list: "n u v u v ..." on one line.
std::string write_edge_list(const Graph& g);

}  // namespace secoal
