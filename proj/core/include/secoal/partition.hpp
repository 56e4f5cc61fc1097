#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "secoal/graph.hpp"

namespace secoal {

/// Ordered list of vertex sets. Whether the parts really partition a
/// graph's vertex set is checked by validate(), not by construction, so that
/// malformed user input can be reported with a precise message.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<VertexSet> parts) : parts_(std::move(parts)) {}

    static Partition singletons(int n);

    /// Block i holds the positions j with labels[j] == i.
    static Partition from_labels(std::span<const int> labels);

    /// Parses "0,2;3,5;4;1": parts separated by ';', vertices by ','.
    static Partition parse(std::string_view spec);

    std::size_t size() const { return parts_.size(); }
    const VertexSet& operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<VertexSet>& parts() const { return parts_; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// Empty string on success, otherwise why this is not a partition of
    /// {0..n-1} (empty part, overlap, gap, out-of-range vertex).
    std::string defect(int n) const;
    bool is_partition_of(int n) const { return defect(n).empty(); }
    /// Throws InvalidArgument carrying defect(n).
    void validate(int n) const;

    /// Restricted growth string: label of each vertex, blocks numbered in
    /// order of their smallest vertex.
    std::vector<int> canonical_labels(int n) const;

    std::string to_string() const;
    std::vector<std::vector<Vertex>> to_lists() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<VertexSet> parts_;
};

/// Lexicographic producer of restricted growth strings a[0..n-1] with
/// a[0] = 0 and a[i] <= 1 + max(a[0..i-1]), i.e. of all set partitions of
/// {0..n-1}. With `blocks > 0` only partitions with exactly that many blocks
/// are produced. Each instance owns its state.
class SetPartitionEnumerator {
public:
    explicit SetPartitionEnumerator(int n, int blocks = 0);

    /// Advances to the next partition; the first call yields the first one.
    bool next();

    std::span<const int> labels() const { return labels_; }
    std::span<const VertexSet> blocks() const { return parts_; }
    int block_count() const { return static_cast<int>(parts_.size()); }
    Partition partition() const { return Partition(parts_); }

private:
    bool first();
    void fill_from(int position);
    void rebuild_blocks();

    int n_;
    int target_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> labels_;
    std::vector<int> prefix_max_;
    std::vector<VertexSet> parts_;
};

}  // namespace secoal
