#include "secoal/json.hpp"

namespace secoal {

Json vertex_set_to_json(VertexSet s)
{
    return s.to_vector();
}

VertexSet vertex_set_from_json(const Json& j)
{
    VertexSet s;
    for (const auto& v : j) {
        const int vertex = v.get<int>();
        if (vertex < 0 || vertex >= kMaxVertexCap) throw ParseError("vertex index out of range in JSON");
        s = s.with(vertex);
    }
    return s;
}

Json partition_to_json(const Partition& p)
{
    return p.to_lists();
}

Partition partition_from_json(const Json& j)
{
    std::vector<VertexSet> parts;
    for (const auto& part : j) parts.push_back(vertex_set_from_json(part));
    return Partition(std::move(parts));
}

Json certificate_to_json(const SecureCertificate& cert)
{
    Json j;
    j["secure"] = cert.secure;
    j["dominating"] = cert.dominating;
    if (cert.secure) {
        Json defenders = Json::array();
        for (auto [u, v] : cert.defenders) defenders.push_back({u, v});
        j["defenders"] = std::move(defenders);
    } else {
        j["witness"] = cert.witness ? Json(*cert.witness) : Json(nullptr);
    }
    return j;
}

SecureCertificate certificate_from_json(const Json& j)
{
    SecureCertificate cert;
    cert.secure = j.at("secure").get<bool>();
    cert.dominating = j.at("dominating").get<bool>();
    if (j.contains("defenders")) {
        for (const auto& pair : j.at("defenders")) cert.defenders.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    }
    if (j.contains("witness") && !j.at("witness").is_null()) cert.witness = j.at("witness").get<int>();
    return cert;
}

std::string_view part_status_name(PartStatus status)
{
    switch (status) {
    case PartStatus::FullDegreeSingleton: return "full_degree_singleton";
    case PartStatus::Coalition: return "coalition";
    case PartStatus::Invalid: return "invalid";
    }
    return "?";
}

std::string_view invalid_reason_name(InvalidReason reason)
{
    switch (reason) {
    case InvalidReason::IsSecureDominatingButNotFullSingleton: return "secure_dominating_but_not_full_singleton";
    case InvalidReason::NoCoalitionPartner: return "no_coalition_partner";
    }
    return "?";
}

Json verdict_to_json(const PartitionVerdict& verdict, const Partition& p)
{
    Json j;
    j["valid"] = verdict.valid;
    Json parts = Json::array();
    for (std::size_t i = 0; i < verdict.parts.size(); ++i) {
        const PartVerdict& part = verdict.parts[i];
        Json e;
        e["part"] = vertex_set_to_json(p[i]);
        e["status"] = part_status_name(part.status);
        e["partners"] = part.partners;
        if (part.reason) e["reason"] = invalid_reason_name(*part.reason);
        if (part.own_certificate) e["certificate"] = certificate_to_json(*part.own_certificate);
        if (!part.failures.empty()) {
            Json failures = Json::array();
            for (const PairFailure& f : part.failures) {
                Json fj;
                fj["partner"] = f.partner;
                fj["kind"] = f.kind == PairFailure::Kind::PartnerSecureDominating ? "partner_secure_dominating"
                                                                                   : "union_not_secure_dominating";
                if (f.union_certificate) fj["union_certificate"] = certificate_to_json(*f.union_certificate);
                failures.push_back(std::move(fj));
            }
            e["failures"] = std::move(failures);
        }
        parts.push_back(std::move(e));
    }
    j["parts"] = std::move(parts);
    return j;
}

Json family_label_to_json(const FamilyLabel& label)
{
    Json j;
    Json names = Json::array();
    for (FamilyTag t : label.labels) names.push_back(family_tag_name(t));
    j["labels"] = std::move(names);
    Json witnesses = Json::array();
    for (const FamilyWitness& w : label.witnesses) {
        Json e;
        e["label"] = family_tag_name(w.tag);
        if (w.tag != FamilyTag::Kn && w.tag != FamilyTag::KpUnionKq) e["pivot"] = w.pivot;
        if (w.tag == FamilyTag::F1) {
            e["beta1"] = vertex_set_to_json(w.clique_joined_to_q);
            e["beta2"] = vertex_set_to_json(w.clique_rest);
        }
        witnesses.push_back(std::move(e));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

namespace {

Json optional_bool(const std::optional<bool>& b)
{
    return b ? Json(*b) : Json(nullptr);
}

}  // namespace

Json bound_report_to_json(const BoundReport& r)
{
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["Delta"] = r.max_degree;
    j["gamma"] = r.gamma;
    j["gamma_s"] = r.gamma_s;
    j["sec"] = r.sec;
    j["c"] = r.c;
    j["sec_witness"] = partition_to_json(r.sec_witness);
    j["c_witness"] = partition_to_json(r.c_witness);
    j["sec_in_range"] = r.sec_in_range;
    j["sec_le_c"] = r.sec_le_c;
    j["sec_le_n_minus_gamma_s_plus_2"] = r.sec_le_n_minus_gamma_s_plus_2;
    j["sec_ge_delta_plus_2"] = optional_bool(r.sec_ge_delta_plus_2);
    j["sec_ge_reduced_delta_plus_2"] = optional_bool(r.sec_ge_reduced_delta_plus_2);
    j["sec_at_least_3"] = optional_bool(r.sec_at_least_3);
    j["sec_small_values_characterized"] = r.sec_small_values_characterized;
    j["max_coalition_count"] = r.max_coalition_count;
    j["coalition_count_limit"] = r.coalition_count_limit;
    j["coalition_counts_bounded"] = r.coalition_counts_bounded;
    j["violations"] = r.violations;
    return j;
}

Json tree_verdict_to_json(const TreeVerdict& v)
{
    Json j;
    j["n"] = v.n;
    j["predicted"] = tree_category_name(v.predicted);
    j["sec"] = v.sec;
    j["witness"] = partition_to_json(v.witness);
    j["agrees"] = v.agrees;
    return j;
}

}  // namespace secoal
