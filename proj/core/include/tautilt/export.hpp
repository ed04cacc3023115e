#ifndef TAUTILT_EXPORT_HPP
#define TAUTILT_EXPORT_HPP

#include <json.hpp>

#include "tautilt/fan.hpp"
#include "tautilt/reduction.hpp"

namespace tautilt {

using Json = nlohmann::ordered_json;

// All exports carry "schema": 1 and serialize rationals as "p/q" strings,
// so identical inputs produce byte-identical files.

Json graph_json(const ExchangeGraph& g, long long seed, int budget);
std::string graph_dot(const ExchangeGraph& g);

Json fan_report_json(const FanReport& rep);
Json coverage_json(const CoverageReport& rep,
                   const std::vector<RayExclusion>& exclusions);
Json containment_json(const ContainmentReport& rep);

std::string key_label(const std::vector<GVec>& key);

}  // namespace tautilt

#endif
