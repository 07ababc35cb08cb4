#include "iterid/experiments.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "experiment_registry.hpp"

namespace iterid {

using nlohmann::json;

namespace detail {

std::int64_t ExperimentContext::integer(const char* key, std::int64_t lo, std::int64_t hi) const {
  const auto& v = params.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("parameter ") + key + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < lo || x > hi) {
    throw std::invalid_argument(std::string("parameter ") + key + " must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return x;
}

std::vector<std::int64_t> ExperimentContext::integers(const char* key, std::int64_t lo, std::int64_t hi) const {
  const auto& v = params.at(key);
  if (!v.is_array() || v.empty()) {
    throw std::invalid_argument(std::string("parameter ") + key + " must be a non-empty integer list");
  }
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < lo || x.get<std::int64_t>() > hi) {
      throw std::invalid_argument(std::string("parameter ") + key + " entries must be integers in [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::vector<std::string> ExperimentContext::strings(const char* key) const {
  const auto& v = params.at(key);
  if (!v.is_array() || v.empty()) {
    throw std::invalid_argument(std::string("parameter ") + key + " must be a non-empty string list");
  }
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw std::invalid_argument(std::string("parameter ") + key + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace detail

json ExperimentReport::to_json() const {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["name"] = name;
  j["params"] = params;
  j["seed"] = seed;
  j["passed"] = passed;
  j["evidence"] = evidence;
  j["duration_ms"] = duration_ms;
  return j;
}

std::vector<ExperimentInfo> list_experiments() {
  std::vector<ExperimentInfo> out;
  for (const auto& e : detail::experiment_entries()) out.push_back({e.name, e.summary, e.defaults});
  return out;
}

ExperimentReport run_experiment(std::string_view name, const json& params, std::uint64_t seed, int workers) {
  const detail::ExperimentEntry* entry = nullptr;
  for (const auto& e : detail::experiment_entries()) {
    if (name == e.name) entry = &e;
  }
  if (entry == nullptr) throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
  if (!params.is_null() && !params.is_object()) throw std::invalid_argument("experiment params must be an object");

  json merged = entry->defaults;
  if (params.is_object()) {
    for (const auto& [key, value] : params.items()) {
      if (!merged.contains(key)) {
        throw std::invalid_argument("experiment " + std::string(name) + " has no parameter '" + key + "'");
      }
      merged[key] = value;
    }
  }

  ExperimentReport report;
  report.name = entry->name;
  report.params = merged;
  report.seed = seed;
  const detail::ExperimentContext ctx{report.params, seed, workers < 1 ? 1 : workers};
  const auto start = std::chrono::steady_clock::now();
  report.evidence = json::object();
  report.passed = entry->run(ctx, report.evidence);
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

json tuple_to_json(const Group& g, std::span<const Element> tuple) {
  json out = json::array();
  for (const auto& x : tuple) out.push_back(g.format(x));
  return out;
}

json orbit_to_json(const OrbitReport& orbit) {
  json j;
  if (const auto* r = std::get_if<ReachesIdentity>(&orbit.outcome)) {
    j["outcome"] = "reaches_identity";
    j["depth"] = r->depth;
  } else if (const auto* c = std::get_if<EntersCycle>(&orbit.outcome)) {
    j["outcome"] = "enters_cycle";
    j["preperiod"] = c->preperiod;
    j["period"] = c->period;
  } else {
    const auto& b = std::get<BudgetExhausted>(orbit.outcome);
    j["outcome"] = "budget_exhausted";
    j["budget"] = b.budget;
    j["overflow"] = b.overflow;
  }
  if (!orbit.trace.empty()) j["trace"] = orbit.trace;
  return j;
}

json verdict_to_json(const Group& g, const IdentityVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["exhaustive"] = v.exhaustive;
  j["certificate"] = v.certificate;
  j["max_depth_seen"] = v.max_depth_seen;
  j["tuples_checked"] = v.tuples_checked;
  j["tuples_reached"] = v.tuples_reached;
  j["tuples_exhausted"] = v.tuples_exhausted;
  if (!v.argmax_tuple.empty()) j["argmax_tuple"] = tuple_to_json(g, v.argmax_tuple);
  json hist = json::object();
  for (const auto& [depth, count] : v.depth_histogram) hist[std::to_string(depth)] = count;
  j["depth_histogram"] = hist;
  if (v.witness) {
    j["witness"] = {{"tuple", tuple_to_json(g, v.witness->tuple)}, {"orbit", orbit_to_json(v.witness->orbit)}};
  }
  return j;
}

json trace_to_json(const ValueSetTrace& trace) {
  json j;
  switch (trace.terminal) {
    case SetTerminal::kReachedIdentitySet:
      j["terminal"] = "reached_identity_set";
      break;
    case SetTerminal::kSetCycle:
      j["terminal"] = "set_cycle";
      break;
    case SetTerminal::kBudgetExhausted:
      j["terminal"] = "budget_exhausted";
      break;
  }
  j["level"] = trace.level;
  json levels = json::array();
  for (const auto& l : trace.levels) levels.push_back({{"size", l.size}, {"digest", l.digest}});
  j["levels"] = levels;
  return j;
}

}  // namespace iterid
