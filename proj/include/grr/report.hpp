#pragma once

#include <string>

#include <json.hpp>

#include "grr/bounds.hpp"
#include "grr/census.hpp"
#include "grr/verify.hpp"

namespace grr {

using Json = nlohmann::ordered_json;

/// Integers up to 2^53 as JSON numbers, larger ones as decimal strings.
Json big_json(const BigInt& v);

Json to_json(const CensusRecord& r, bool with_elapsed = true);
Json to_json(const SuiteRecord& r, const std::string& suite);
Json to_json(const BoundTable& b);
Json to_json(const OvergroupScenario& s);
Json to_json(const UnlabeledCensus& u, const std::string& group);

std::string csv_header_census();
std::string to_csv(const CensusRecord& r);
std::string csv_header_suite();
std::string to_csv(const SuiteRecord& r, const std::string& suite);
std::string csv_header_bounds();
std::string to_csv(const BoundTable& b);
std::string csv_header_scenario();
std::string to_csv(const OvergroupScenario& s);

}  // namespace grr
