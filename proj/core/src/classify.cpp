#include "secoal/classify.hpp"

#include <algorithm>

namespace secoal {

std::string_view family_tag_name(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::F1: return "F1";
    case FamilyTag::F2: return "F2";
    case FamilyTag::F3: return "F3";
    case FamilyTag::F4: return "F4";
    case FamilyTag::Kn: return "Kn";
    case FamilyTag::KpUnionKq: return "KpUnionKq";
    }
    return "?";
}

bool FamilyLabel::has(FamilyTag tag) const
{
    return std::find(labels.begin(), labels.end(), tag) != labels.end();
}

bool FamilyLabel::has_f_label() const
{
    return has(FamilyTag::F1) || has(FamilyTag::F2) || has(FamilyTag::F3) || has(FamilyTag::F4);
}

std::string FamilyLabel::to_string() const
{
    if (labels.empty()) return "None";
    std::string out;
    for (FamilyTag t : labels) {
        if (!out.empty()) out += ',';
        out += family_tag_name(t);
    }
    return out;
}

namespace {

void add_label(FamilyLabel& label, FamilyWitness witness)
{
    if (label.has(witness.tag)) return;
    label.labels.push_back(witness.tag);
    label.witnesses.push_back(witness);
}

bool fully_joined(const Graph& g, VertexSet from, VertexSet to)
{
    for (Vertex v : from) {
        if (!to.subset_of(g.neighbors(v))) return false;
    }
    return true;
}

// First split of `p` into two cliques with the first one fully joined to `q`.
std::optional<std::pair<VertexSet, VertexSet>> find_clique_split(const Graph& g, VertexSet p, VertexSet q)
{
    const std::vector<Vertex> members = p.to_vector();
    const int size = static_cast<int>(members.size());
    if (size > 24) throw CapExceeded("clique split search is limited to neighbourhoods of size 24");
    for (Mask choice = 1; choice + 1 < (Mask{1} << size); ++choice) {
        VertexSet first;
        for (int i = 0; i < size; ++i) {
            if ((choice >> i) & 1U) first = first.with(members[static_cast<std::size_t>(i)]);
        }
        const VertexSet second = p - first;
        if (g.is_clique(first) && g.is_clique(second) && fully_joined(g, first, q)) {
            return std::pair{first, second};
        }
    }
    return std::nullopt;
}

void classify_around(const Graph& g, Vertex v, FamilyLabel& label)
{
    const VertexSet p = g.neighbors(v);
    const VertexSet q = g.vertices() - g.closed_neighbors(v);
    if (q.empty() || !g.is_clique(q)) return;

    bool any_pq_edge = false;
    for (Vertex x : p) any_pq_edge = any_pq_edge || g.neighbors(x).intersects(q);

    if (g.is_clique(p)) {
        if (any_pq_edge) add_label(label, {FamilyTag::F4, v, {}, {}});
        return;
    }
    if (fully_joined(g, p, q)) add_label(label, {FamilyTag::F3, v, {}, {}});

    bool f2 = true;
    for (Vertex x : p) {
        const bool misses_q = !q.subset_of(g.neighbors(x));
        if (misses_q && !p.without(x).subset_of(g.neighbors(x))) f2 = false;
    }
    if (f2) add_label(label, {FamilyTag::F2, v, {}, {}});

    if (auto split = find_clique_split(g, p, q)) {
        add_label(label, {FamilyTag::F1, v, split->first, split->second});
    }
}

}  // namespace

FamilyLabel classify_family(const Graph& g)
{
    FamilyLabel label;
    if (g.is_complete()) {
        add_label(label, {FamilyTag::Kn, 0, {}, {}});
        return label;
    }
    const auto comps = components(g);
    if (comps.size() > 1) {
        if (comps.size() == 2 && g.is_clique(comps[0]) && g.is_clique(comps[1])) {
            add_label(label, {FamilyTag::KpUnionKq, 0, {}, {}});
        }
        return label;
    }
    const int delta = g.min_degree();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == delta) classify_around(g, v, label);
    }
    std::vector<std::size_t> order(label.labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return label.labels[a] < label.labels[b]; });
    FamilyLabel sorted;
    for (auto i : order) {
        sorted.labels.push_back(label.labels[i]);
        sorted.witnesses.push_back(label.witnesses[i]);
    }
    return sorted;
}

bool predict_sec_equals_n(const Graph& g)
{
    const FamilyLabel label = classify_family(g);
    if (is_connected(g)) return label.has(FamilyTag::Kn) || label.has_f_label();
    return label.has(FamilyTag::KpUnionKq);
}

std::string_view tree_category_name(TreeCategory category)
{
    switch (category) {
    case TreeCategory::SecEqualsN: return "sec=n";
    case TreeCategory::SecEqualsNMinus1: return "sec=n-1";
    case TreeCategory::SecAtMostNMinus2: return "sec<=n-2";
    }
    return "?";
}

TreeCategory predict_tree_category(const Graph& tree)
{
    if (!is_tree(tree)) throw InvalidArgument("input is not a tree");
    const int n = tree.order();
    const bool path = tree.max_degree() <= 2;
    if (path && n <= 4) return TreeCategory::SecEqualsN;
    if ((path && n == 5) || (n == 4 && tree.max_degree() == 3)) return TreeCategory::SecEqualsNMinus1;
    return TreeCategory::SecAtMostNMinus2;
}

TreeVerdict tree_sec_profile(const Graph& tree, int cap)
{
    TreeVerdict verdict;
    verdict.predicted = predict_tree_category(tree);
    verdict.n = tree.order();
    auto result = sec_number(tree, {.cap = cap});
    verdict.sec = result.count;
    verdict.witness = std::move(result.witness);
    switch (verdict.predicted) {
    case TreeCategory::SecEqualsN: verdict.agrees = verdict.sec == verdict.n; break;
    case TreeCategory::SecEqualsNMinus1: verdict.agrees = verdict.sec == verdict.n - 1; break;
    case TreeCategory::SecAtMostNMinus2: verdict.agrees = verdict.sec <= verdict.n - 2; break;
    }
    return verdict;
}

}  // namespace secoal
