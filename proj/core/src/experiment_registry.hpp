#ifndef ITERID_SRC_EXPERIMENT_REGISTRY_HPP
#define ITERID_SRC_EXPERIMENT_REGISTRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace iterid::detail {

struct ExperimentContext {
  const nlohmann::json& params;
  std::uint64_t seed;
  int workers;

  std::int64_t integer(const char* key, std::int64_t lo, std::int64_t hi) const;
  std::vector<std::int64_t> integers(const char* key, std::int64_t lo, std::int64_t hi) const;
  std::vector<std::string> strings(const char* key) const;
};

/// Fills evidence and returns whether every assertion held.
using ExperimentFn = bool (*)(const ExperimentContext&, nlohmann::json& evidence);

struct ExperimentEntry {
  const char* name;
  const char* summary;
  nlohmann::json defaults;
  ExperimentFn run;
};

const std::vector<ExperimentEntry>& experiment_entries();

}  // namespace iterid::detail

#endif  // ITERID_SRC_EXPERIMENT_REGISTRY_HPP
