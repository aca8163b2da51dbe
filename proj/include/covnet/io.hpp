#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "covnet/group_spanner.hpp"
#include "covnet/laminar_pd.hpp"
#include "covnet/sunflower.hpp"

namespace covnet {

using Json = nlohmann::json;

Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

Json solution_to_json(const Instance& instance, const RoutingSolution& sol);
RoutingSolution solution_from_json(const Instance& instance, const Json& j);

Json certificate_to_json(const Instance& instance, const LaminarCertificate& cert);
LaminarCertificate certificate_from_json(const Instance& instance, const Json& j);

Json spanner_to_json(const Graph& graph, const SpannerResult& result,
                     const SpannerReport* report = nullptr);

Json sunflower_to_json(const Instance& instance, const SunflowerSolution& sol);

Instance load_instance(const std::string& path);
Json load_json(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string json_to_text(const Json& j);

}  // namespace covnet
