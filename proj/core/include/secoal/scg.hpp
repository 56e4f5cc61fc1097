#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secoal/coalition.hpp"
#include "secoal/domination.hpp"
#include "secoal/graph.hpp"
#include "secoal/partition.hpp"

namespace secoal {

/// Secure coalition graph: vertex i is part i of `p`, and i ~ j iff parts i
/// and j form a secure coalition. Throws InvalidArgument unless `p` is a
/// valid sec-partition of `g`.
Graph build_scg(const Graph& g, const Partition& p);

enum class HostConstruction {
    Generic,         ///< base clique + u_i + one y-vertex per non-edge
    EdgelessPair,    ///< target K_2: host is two isolated vertices
    CompleteHost,    ///< edgeless target: host K_n with singleton parts
};

std::string_view host_construction_name(HostConstruction c);

/// A host graph H with a sec-partition whose secure coalition graph is the
/// target. Part base_map[i] stands for target vertex i.
///
/// Generic host layout for a target on n vertices with non-edges
/// q_0..q_{mbar-1} (lexicographic): vertices 0..n-1 are the base clique,
/// n..2n-1 are u_0..u_{n-1} (u_i misses only base vertex i), and 2n+t is the
/// vertex for non-edge q_t = jk (misses base j, k and u_j, u_k).
struct Realization {
    Graph target;
    Graph host;
    Partition partition;
    std::vector<std::size_t> base_map{};
    HostConstruction construction = HostConstruction::Generic;
    int host_order = 0;
    int host_size = 0;
    bool verified = false;
    /// Generic host only: part receiving the vertex of non-edge t.
    std::vector<Vertex> placement{};
    /// Generic host only: placements verified, including the first.
    long placements_tried = 0;
};

/// First failure found when checking a realization.
struct ConstructionGap {
    std::string reason;
    /// The set the certificate refers to (a part or a union of two parts).
    VertexSet set;
    std::optional<SecureCertificate> certificate;
};

enum class RealizeStatus { Verified, Unrealizable, ConstructionGap };

struct RealizeResult {
    RealizeStatus status = RealizeStatus::Unrealizable;
    std::optional<Realization> realization;  ///< absent only when Unrealizable
    std::optional<ConstructionGap> gap;
    /// Set when the round-robin placement failed, even if a later one verified.
    std::optional<ConstructionGap> round_robin_gap;
    std::optional<Partition> round_robin_partition;
    std::string message;
};

inline constexpr long kDefaultPlacementBudget = 200000;

/// The vertex of non-edge t = jk is first placed in the t-th allowed part
/// (round-robin over the parts other than j and k, leaving out parts of full
/// target vertices unless nothing else is allowed). If that host does not
/// verify, other placements are tried in lexicographic order, at most
/// `placement_budget` in total; the edges of H never change.
RealizeResult realize_as_scg(const Graph& target, int max_host_order = kDefaultVertexCap,
                             long placement_budget = kDefaultPlacementBudget);

/// Checks a realization from scratch: sec-partition validity and labeled
/// equality of its SCG (through base_map) with the target.
std::optional<ConstructionGap> verify_realization(const Realization& r);

/// False iff the target has an isolated vertex and at least one edge.
bool is_scg_realizable(const Graph& g);

/// Order and size the generic host must have.
int expected_host_order(const Graph& target);
int expected_host_size(const Graph& target);

/// Outcome of checking a claim "SCG(G, p) is isomorphic to `claimed`".
struct ScgClaimReport {
    PartitionVerdict verdict;
    /// Present when `p` is a valid sec-partition.
    std::optional<Graph> scg;
    bool order_matches = false;
    bool claim_holds = false;
    std::string summary;
};

ScgClaimReport check_scg_claim(const Graph& g, const Partition& p, const Graph& claimed);

/// JSON object with target_graph6, host_graph6, partition, base_map, n_H,
/// m_H, verified, plus status, construction and any gap.
std::string realization_json(const RealizeResult& result, const Graph& target);

}  // namespace secoal
