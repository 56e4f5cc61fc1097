#include "secoal/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

namespace secoal {

namespace {

constexpr int kGraph6Offset = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int sextet(char c)
{
    const int value = static_cast<unsigned char>(c) - kGraph6Offset;
    if (value < 0 || value > 63) {
        throw ParseError("graph6 character '" + std::string(1, c) + "' outside the range 63..126");
    }
    return value;
}

}  // namespace

Graph parse_graph6(std::string_view text, int max_order)
{
    text = trim(text);
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw ParseError("empty graph6 line");

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(sextet(text[0]));
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8) throw ParseError("truncated graph6 length header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
        pos = 8;
    } else {
        if (text.size() < 4) throw ParseError("truncated graph6 length header");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
        pos = 4;
    }
    if (n == 0) throw ParseError("graph6 line encodes the empty graph; order must be at least 1");
    if (n > static_cast<std::uint64_t>(max_order)) {
        throw CapExceeded("graph6 order " + std::to_string(n) + " exceeds the vertex cap " +
                          std::to_string(max_order));
    }
    const int order = static_cast<int>(n);
    const std::size_t bit_count = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos != byte_count) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(byte_count) + " for order " + std::to_string(order));
    }

    std::vector<Mask> adj(static_cast<std::size_t>(order), 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < order; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = sextet(text[pos + k / 6]);
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) {
                adj[i] |= vertex_bit(j);
                adj[j] |= vertex_bit(i);
            }
        }
    }
    return Graph(order, std::move(adj));
}

std::string write_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
        }
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kGraph6Offset));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Offset));
    return out;
}

Graph parse_edge_list(std::string_view text, int max_order)
{
    std::vector<long long> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto start = text.find_first_not_of(" \t\r\n,", pos);
        if (start == std::string_view::npos) break;
        auto end = text.find_first_of(" \t\r\n,", start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view token = text.substr(start, end - start);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("edge list token '" + std::string(token) + "' is not an integer");
        }
        tokens.push_back(value);
        pos = end;
    }
    if (tokens.empty()) throw ParseError("empty edge list");
    const long long n = tokens[0];
    if (n < 1) throw ParseError("edge list order must be at least 1");
    if (n > max_order) {
        throw CapExceeded("edge list order " + std::to_string(n) + " exceeds the vertex cap " +
                          std::to_string(max_order));
    }
    if (tokens.size() % 2 == 0) throw ParseError("edge list has a dangling vertex index");

    std::vector<Edge> edges;
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        const long long u = tokens[i];
        const long long v = tokens[i + 1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") references a vertex outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order());
    for (auto [u, v] : g.edges()) {
        out += ' ';
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace secoal
