#pragma once

#include <string>

#include <json.hpp>

#include "diskzeroes/criteria.hpp"
#include "diskzeroes/geometry.hpp"
#include "diskzeroes/green.hpp"
#include "diskzeroes/kernels.hpp"
#include "diskzeroes/measures.hpp"
#include "diskzeroes/products.hpp"

namespace dz::io {

using json = nlohmann::json;

// thrown for malformed configs; the CLI maps it to exit code 2
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- parsing (schemas documented in the README) ----
UnionDomain parse_domain(const json& j);
std::vector<UnionDomain> parse_family(const json& j);
ZeroSequence parse_sequence(const json& j);
RadialWeight parse_weight(const json& j);
Kernel parse_kernel(const json& j);
MonteCarloConfig parse_mc(const json& j);      // reporting-grade validation
QuadConfig parse_quad(const json& j);
Measure parse_measure(const json& j);
GridSpec parse_grid(const json& j);

json load_json_file(const std::string& path);

// ---- deterministic serialization: fixed field order, 17 significant
// digits, LF line endings ----
std::string fmt17(double v);
std::string fmt_shortest(double v);  // shortest round-trip decimal

std::string estimate_to_json(const Estimate& e);
std::string report_to_json(const CriterionReport& rep);
std::string report_to_csv(const CriterionReport& rep);
std::string domains_to_json(const std::vector<UnionDomain>& family);
// extra_fields, when nonempty, is spliced verbatim before the closing brace
std::string growth_to_json(const GrowthReport& rep,
                           const std::string& extra_fields = "");

void write_file(const std::string& path, const std::string& content);

}  // namespace dz::io
