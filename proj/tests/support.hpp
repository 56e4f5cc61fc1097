#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "secoal/corpus.hpp"
#include "secoal/graph.hpp"

namespace testing_support {

inline std::filesystem::path data_path(const std::string& name)
{
    return std::filesystem::path(SECOAL_TEST_DATA_DIR) / name;
}

/// Every graph of order n, one per isomorphism class (n <= 7).
inline std::vector<secoal::Graph> graphs_of_order(int n)
{
    std::vector<secoal::Graph> out;
    for (auto& e : secoal::read_graph6_file(data_path("graphs_n" + std::to_string(n) + ".g6"))) {
        out.push_back(std::move(e.graph));
    }
    return out;
}

inline std::vector<secoal::Graph> graphs_up_to(int n)
{
    std::vector<secoal::Graph> out;
    for (int k = 1; k <= n; ++k) {
        for (auto& g : graphs_of_order(k)) out.push_back(std::move(g));
    }
    return out;
}

/// G(n, 1/2) with a caller-provided engine.
inline secoal::Graph random_graph(int n, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(0.5);
    std::vector<secoal::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return secoal::Graph::from_edges(n, edges);
}

inline secoal::Graph relabel(const secoal::Graph& g, const std::vector<int>& perm)
{
    std::vector<secoal::Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return secoal::Graph::from_edges(g.order(), edges);
}

}  // namespace testing_support
