#include "secoal/corpus.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "secoal/graph_io.hpp"
#include "secoal/trees.hpp"

namespace secoal {

namespace {

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::pair<std::string_view, int> split_family_spec(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos || colon == 0) throw ParseError("expected NAME:N, got '" + std::string(spec) + "'");
    const std::string_view name = spec.substr(0, colon);
    const std::string_view digits = spec.substr(colon + 1);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("bad order in '" + std::string(spec) + "'");
    }
    return {name, n};
}

constexpr std::array<std::string_view, 5> kCorpusFamilies{"trees", "paths", "cycles", "stars", "completes"};

}  // namespace

std::vector<CorpusEntry> parse_graph6_lines(std::string_view text, int max_order)
{
    std::vector<CorpusEntry> out;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        try {
            Graph g = parse_graph6(line, max_order);
            std::string key = write_graph6(g);
            out.push_back({std::move(key), std::move(g)});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::vector<CorpusEntry> read_graph6_file(const std::filesystem::path& path, int max_order)
{
    return parse_graph6_lines(read_file(path), max_order);
}

bool is_family_corpus_spec(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) return false;
    const std::string_view name = spec.substr(0, colon);
    for (auto f : kCorpusFamilies) {
        if (name == f) return true;
    }
    return false;
}

std::vector<Graph> generate_family_corpus(std::string_view spec, int max_order)
{
    const auto [name, limit] = split_family_spec(spec);
    if (limit < 1) throw InvalidArgument("corpus order must be at least 1");
    std::vector<Graph> out;
    if (name == "trees") {
        if (limit > kTreeEnumerationCap) {
            throw CapExceeded("tree corpus is limited to order " + std::to_string(kTreeEnumerationCap));
        }
        for (int n = 1; n <= limit; ++n) {
            for (Graph& t : enumerate_trees(n)) out.push_back(std::move(t));
        }
        return out;
    }
    Family family;
    if (name == "paths") family = Family::Path;
    else if (name == "cycles") family = Family::Cycle;
    else if (name == "stars") family = Family::Star;
    else if (name == "completes") family = Family::Complete;
    else throw ParseError("unknown corpus family '" + std::string(name) + "'");
    for (int n = family == Family::Cycle ? 3 : 1; n <= limit; ++n) out.push_back(generate(family, n, max_order));
    return out;
}

std::vector<CorpusEntry> load_corpus(std::string_view spec, int max_order)
{
    if (is_family_corpus_spec(spec) && !std::filesystem::exists(std::filesystem::path(spec))) {
        std::vector<CorpusEntry> out;
        for (Graph& g : generate_family_corpus(spec, max_order)) {
            std::string key = write_graph6(g);
            out.push_back({std::move(key), std::move(g)});
        }
        return out;
    }
    return read_graph6_file(std::filesystem::path(spec), max_order);
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    for (const Graph& g : graphs) out << write_graph6(g) << '\n';
    if (!out) throw ParseError("write to '" + path.string() + "' failed");
}

Graph resolve_graph_input(std::string_view input, int max_order)
{
    const auto colon = input.find(':');
    if (colon != std::string_view::npos && !std::filesystem::exists(std::filesystem::path(input))) {
        const std::string_view name = input.substr(0, colon);
        if (name == "path" || name == "cycle" || name == "star" || name == "complete" || name == "empty") {
            const auto [family, n] = split_family_spec(input);
            return generate(parse_family(family), n, max_order);
        }
    }
    auto as_text = [&](std::string_view text) {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos) throw ParseError("empty graph input");
        if (std::isdigit(static_cast<unsigned char>(text[first]))) return parse_edge_list(text, max_order);
        const auto eol = text.find('\n', first);
        return parse_graph6(text.substr(first, eol == std::string_view::npos ? eol : eol - first), max_order);
    };
    const std::filesystem::path path(input);
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) {
        const std::string text = read_file(path);
        return as_text(text).with_label(path.filename().string());
    }
    return as_text(input);
}

std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw InternalInconsistency("SHA-256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 15]);
    }
    return out;
}

}  // namespace secoal
