#include "secoal/partition.hpp"

#include <algorithm>
#include <charconv>

namespace secoal {

Partition Partition::singletons(int n)
{
    std::vector<VertexSet> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) parts.push_back(VertexSet::single(v));
    return Partition(std::move(parts));
}

Partition Partition::from_labels(std::span<const int> labels)
{
    std::vector<VertexSet> parts;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto block = static_cast<std::size_t>(labels[v]);
        if (block >= parts.size()) parts.resize(block + 1);
        parts[block] = parts[block].with(static_cast<Vertex>(v));
    }
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view spec)
{
    std::vector<VertexSet> parts;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto end = spec.find(';', pos);
        if (end == std::string_view::npos) end = spec.size();
        std::string_view chunk = spec.substr(pos, end - pos);
        VertexSet part;
        std::size_t p = 0;
        bool any = false;
        while (p <= chunk.size()) {
            auto comma = chunk.find(',', p);
            if (comma == std::string_view::npos) comma = chunk.size();
            std::string_view token = chunk.substr(p, comma - p);
            while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
            if (token.empty()) throw ParseError("empty vertex entry in partition spec '" + std::string(spec) + "'");
            int v = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0 || v >= kMaxVertexCap) {
                throw ParseError("bad vertex '" + std::string(token) + "' in partition spec");
            }
            if (part.contains(v)) throw ParseError("vertex " + std::to_string(v) + " repeated within a part");
            part = part.with(v);
            any = true;
            p = comma + 1;
        }
        if (!any) throw ParseError("empty part in partition spec");
        parts.push_back(part);
        pos = end + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::defect(int n) const
{
    if (parts_.empty()) return "partition has no parts";
    VertexSet seen;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const VertexSet part = parts_[i];
        if (part.empty()) return "part " + std::to_string(i) + " is empty";
        if (!part.subset_of(VertexSet::first_n(n))) {
            return "part " + std::to_string(i) + " contains a vertex outside 0.." + std::to_string(n - 1);
        }
        if (part.intersects(seen)) {
            return "vertex " + std::to_string((part & seen).front()) + " appears in more than one part";
        }
        seen |= part;
    }
    if (seen != VertexSet::first_n(n)) {
        return "vertex " + std::to_string((VertexSet::first_n(n) - seen).front()) + " is not covered";
    }
    return {};
}

void Partition::validate(int n) const
{
    if (auto why = defect(n); !why.empty()) throw InvalidArgument("malformed partition: " + why);
}

std::vector<int> Partition::canonical_labels(int n) const
{
    validate(n);
    std::vector<std::size_t> order(parts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return parts_[a].front() < parts_[b].front(); });
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        for (Vertex v : parts_[order[rank]]) labels[v] = static_cast<int>(rank);
    }
    return labels;
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ';';
        bool first = true;
        for (Vertex v : parts_[i]) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

std::vector<std::vector<Vertex>> Partition::to_lists() const
{
    std::vector<std::vector<Vertex>> out;
    out.reserve(parts_.size());
    for (VertexSet p : parts_) out.push_back(p.to_vector());
    return out;
}

SetPartitionEnumerator::SetPartitionEnumerator(int n, int blocks)
    : n_(n), target_(blocks), labels_(static_cast<std::size_t>(std::max(n, 0)), 0),
      prefix_max_(static_cast<std::size_t>(std::max(n, 0)), 0)
{
    if (n < 1 || n > kMaxVertexCap) throw InvalidArgument("set partition enumeration needs 1 <= n <= 64");
    if (blocks < 0 || blocks > n) done_ = true;
}

bool SetPartitionEnumerator::next()
{
    if (done_) return false;
    if (!started_) {
        started_ = true;
        return first();
    }
    for (int i = n_ - 1; i >= 1; --i) {
        const int before = prefix_max_[i - 1];
        const int candidate = labels_[i] + 1;
        if (candidate > before + 1) continue;
        const int new_max = std::max(before, candidate);
        if (target_ > 0) {
            if (new_max + 1 > target_) continue;
            if (new_max + 1 + (n_ - 1 - i) < target_) continue;
        }
        labels_[i] = candidate;
        prefix_max_[i] = new_max;
        fill_from(i + 1);
        rebuild_blocks();
        return true;
    }
    done_ = true;
    return false;
}

bool SetPartitionEnumerator::first()
{
    labels_[0] = 0;
    prefix_max_[0] = 0;
    if (target_ > 0 && n_ < target_) {
        done_ = true;
        return false;
    }
    fill_from(1);
    rebuild_blocks();
    return true;
}

// Lexicographically smallest completion of positions [position, n) that can
// still reach the target block count.
void SetPartitionEnumerator::fill_from(int position)
{
    for (int j = position; j < n_; ++j) {
        const int current = prefix_max_[j - 1];
        const bool must_open = target_ > 0 && current + 1 + (n_ - 1 - j) < target_;
        labels_[j] = must_open ? current + 1 : 0;
        prefix_max_[j] = std::max(current, labels_[j]);
    }
}

void SetPartitionEnumerator::rebuild_blocks()
{
    parts_.assign(static_cast<std::size_t>(prefix_max_[n_ - 1] + 1), VertexSet{});
    for (int v = 0; v < n_; ++v) parts_[labels_[v]] = parts_[labels_[v]].with(v);
}

}  // namespace secoal
