#pragma once

#include <nlohmann/json.hpp>

#include "secoal/classify.hpp"
#include "secoal/coalition.hpp"
#include "secoal/domination.hpp"
#include "secoal/partition.hpp"

namespace secoal {

using Json = nlohmann::ordered_json;

Json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json certificate_to_json(const SecureCertificate& cert);
SecureCertificate certificate_from_json(const Json& j);

Json verdict_to_json(const PartitionVerdict& verdict, const Partition& p);
Json family_label_to_json(const FamilyLabel& label);
Json bound_report_to_json(const BoundReport& report);
Json tree_verdict_to_json(const TreeVerdict& verdict);

std::string_view part_status_name(PartStatus status);
std::string_view invalid_reason_name(InvalidReason reason);

}  // namespace secoal
