#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secoal/domination.hpp"
#include "secoal/graph.hpp"
#include "secoal/partition.hpp"

namespace secoal {

/// Default order limits for the exact partition searches.
inline constexpr int kDefaultSearchCap = 9;
inline constexpr int kDefaultTreeSearchCap = 10;

/// True iff neither set is secure dominating but their union is.
/// Throws InvalidArgument if a set is empty or the sets overlap.
bool forms_secure_coalition(const Graph& g, VertexSet a, VertexSet b);

/// Plain-domination analogue of forms_secure_coalition.
bool forms_coalition(const Graph& g, VertexSet a, VertexSet b);

enum class PartStatus {
    FullDegreeSingleton,  ///< {v} with deg(v) = n-1 that is secure dominating
    Coalition,            ///< not secure dominating, has at least one partner
    Invalid,
};

enum class InvalidReason {
    IsSecureDominatingButNotFullSingleton,
    NoCoalitionPartner,
};

/// Why one other part is not a secure coalition partner.
struct PairFailure {
    enum class Kind { PartnerSecureDominating, UnionNotSecureDominating };
    std::size_t partner = 0;
    Kind kind = Kind::UnionNotSecureDominating;
    /// Failure certificate of the union when kind is UnionNotSecureDominating.
    std::optional<SecureCertificate> union_certificate;
};

struct PartVerdict {
    PartStatus status = PartStatus::Invalid;
    /// Every part index forming a secure coalition with this one.
    std::vector<std::size_t> partners;
    std::optional<InvalidReason> reason;
    /// For NoCoalitionPartner: one entry per other part.
    std::vector<PairFailure> failures;
    /// For IsSecureDominatingButNotFullSingleton: proof that the part is secure dominating.
    std::optional<SecureCertificate> own_certificate;
};

struct PartitionVerdict {
    bool valid = false;
    std::vector<PartVerdict> parts;
};

/// Certifies every part of a sec-partition candidate. Partner lists are
/// exhaustive. Throws InvalidArgument when `p` is not a partition of V(g).
PartitionVerdict verify_sec_partition(const Graph& g, const Partition& p);
bool is_sec_partition(const Graph& g, const Partition& p);

/// c-partition test: every part is a dominating singleton or a
/// non-dominating set with a coalition partner.
bool is_c_partition(const Graph& g, const Partition& p);

struct SearchOptions {
    /// Largest order the exact searches accept.
    int cap = kDefaultSearchCap;
    /// Skip partitions with more than n - gamma_s + 2 parts.
    bool use_secure_domination_bound = true;
};

struct PartitionResult {
    int count = 0;
    Partition witness;
};

/// SEC(G): the largest sec-partition. Parts are tried from the largest
/// feasible count downwards, each count in lexicographic restricted-growth
/// order, so the witness is the lexicographically least maximum partition.
/// Throws CapExceeded above options.cap.
PartitionResult sec_number(const Graph& g, const SearchOptions& options = {});

/// C(G): the largest c-partition, same search order as sec_number.
PartitionResult coalition_number(const Graph& g, const SearchOptions& options = {});

enum class ConstructionMethod {
    CompleteSingletons,   ///< G = K_n: singleton partition
    EdgelessPair,         ///< G = complement of K_n, n >= 2: {V - v0, {v0}}
    IsolatesMinDegree,    ///< isolated vertices and some edge: min-degree split of G minus isolates
    MinDegree,            ///< isolate-free, not complete: {v}, N(v) singletons, V - N[v]
    SearchFallback,       ///< the construction did not verify; exact search witness
};

struct ConstructedPartition {
    Partition partition;
    ConstructionMethod method = ConstructionMethod::MinDegree;
    /// Minimum-degree vertex the construction was built around, if any.
    std::optional<Vertex> pivot;
    /// Minimum-degree vertices tried before one verified.
    int attempts = 0;
};

/// {pivot}, one singleton per neighbour of pivot, then the remaining
/// non-isolated vertices together with all isolated vertices.
Partition min_degree_partition(const Graph& g, Vertex pivot);

/// Builds a sec-partition of size delta+2 (or delta(G')+2 with isolates)
/// and verifies it before returning. Every minimum-degree vertex is tried in
/// index order; if none verifies the exact search witness is returned when
/// n <= fallback_cap, otherwise InternalInconsistency is thrown.
ConstructedPartition construct_sec_partition(const Graph& g, int fallback_cap = kDefaultSearchCap);

/// For each part, the number of parts it forms a secure coalition with.
/// Throws InvalidArgument unless `p` is a valid sec-partition.
std::vector<int> coalition_counts(const Graph& g, const Partition& p);

/// max{Delta + 1, n - gamma}.
int coalition_count_bound(const Graph& g, int gamma);

/// Computed invariants and one verdict per inequality. Verdicts that do not
/// apply to the graph are empty. Violations are listed, never thrown.
struct BoundReport {
    int n = 0;
    int m = 0;
    int delta = 0;
    int max_degree = 0;
    int gamma = 0;
    int gamma_s = 0;
    int sec = 0;
    int c = 0;
    Partition sec_witness;
    Partition c_witness;

    bool sec_in_range = false;               ///< 1 <= SEC <= n
    bool sec_le_c = false;                   ///< SEC <= C
    bool sec_le_n_minus_gamma_s_plus_2 = false;
    std::optional<bool> sec_ge_delta_plus_2;          ///< isolate-free, not complete
    std::optional<bool> sec_ge_reduced_delta_plus_2;  ///< isolates and at least one edge
    std::optional<bool> sec_at_least_3;               ///< neither complete nor edgeless
    bool sec_small_values_characterized = false;      ///< SEC in {1,2} exactly for K_1, K_2, empty graphs
    int max_coalition_count = 0;
    int coalition_count_limit = 0;
    bool coalition_counts_bounded = false;

    std::vector<std::string> violations;
};

/// Computes everything exactly. SEC is searched without the n - gamma_s + 2
/// shortcut so that bound is actually tested.
BoundReport check_bounds(const Graph& g, int cap = kDefaultSearchCap);

}  // namespace secoal
