#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "secoal/graph.hpp"

namespace secoal {

/// One graph of a corpus together with its canonical graph6 key.
struct CorpusEntry {
    std::string graph6;
    Graph graph;
};

/// Reads a file with one graph6 line per graph. Blank lines and lines
/// starting with '#' are skipped. Throws ParseError naming the bad line.
std::vector<CorpusEntry> read_graph6_file(const std::filesystem::path& path, int max_order = kDefaultVertexCap);

/// Parses graph6 lines held in memory, same rules as read_graph6_file.
std::vector<CorpusEntry> parse_graph6_lines(std::string_view text, int max_order = kDefaultVertexCap);

/// Family corpus "trees:N", "paths:N", "cycles:N", "stars:N" or
/// "completes:N": one graph per isomorphism class of the family, orders
/// 1..N (cycles start at 3), ordered by order.
std::vector<Graph> generate_family_corpus(std::string_view spec, int max_order = kDefaultVertexCap);

/// True if `spec` has the shape of a family corpus spec.
bool is_family_corpus_spec(std::string_view spec);

/// A family corpus spec or a graph6 file path.
std::vector<CorpusEntry> load_corpus(std::string_view spec, int max_order = kMaxVertexCap);

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

/// Resolves a single graph argument. Accepted forms, tried in order:
///   family:n            generator, e.g. "path:6"
///   existing file       edge list if it starts with a digit, else graph6 (first graph)
///   "n u v u v ..."     literal edge list
///   anything else       literal graph6
Graph resolve_graph_input(std::string_view input, int max_order = kDefaultVertexCap);

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace secoal
