#ifndef ITERID_EXPERIMENTS_HPP
#define ITERID_EXPERIMENTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "iterid/dynamics.hpp"
#include "iterid/group.hpp"

namespace iterid {

inline constexpr int kReportSchemaVersion = 1;

struct ExperimentReport {
  std::string name;
  /// Defaults merged with the caller's overrides.
  nlohmann::json params;
  bool passed = false;
  nlohmann::json evidence;
  std::uint64_t seed = 0;
  std::int64_t duration_ms = 0;

  /// {schema_version, name, params, seed, passed, evidence, duration_ms}
  nlohmann::json to_json() const;
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  nlohmann::json default_params;
};

/// Catalog in a fixed order.
std::vector<ExperimentInfo> list_experiments();

/// Runs a catalog entry. params must be a JSON object whose keys appear in
/// the entry's defaults; unknown names, unknown keys, wrong types and values
/// out of range throw std::invalid_argument. Everything except duration_ms is
/// a function of (name, params, seed); workers only changes the speed.
ExperimentReport run_experiment(std::string_view name, const nlohmann::json& params, std::uint64_t seed,
                                int workers = 1);

// JSON views shared by the experiments and the command-line tool.
nlohmann::json tuple_to_json(const Group& g, std::span<const Element> tuple);
nlohmann::json orbit_to_json(const OrbitReport& orbit);
nlohmann::json verdict_to_json(const Group& g, const IdentityVerdict& v);
nlohmann::json trace_to_json(const ValueSetTrace& trace);

}  // namespace iterid

#endif  // ITERID_EXPERIMENTS_HPP
