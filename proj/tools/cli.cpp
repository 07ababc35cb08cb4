#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "iterid/dynamics.hpp"
#include "iterid/experiments.hpp"
#include "iterid/finite_group.hpp"
#include "iterid/group.hpp"
#include "iterid/group_descriptor.hpp"
#include "iterid/named_words.hpp"
#include "iterid/structure.hpp"
#include "iterid/word.hpp"
#include "iterid/word_parser.hpp"

namespace iterid::cli {

namespace {

using nlohmann::json;

constexpr const char* kWordGrammar =
    "Word grammar:\n"
    "  word   := factor { factor }\n"
    "  factor := atom [ ^ ( int | atom ) ]     a^b = b^-1 a b\n"
    "  atom   := xN | e | ( word ) | [ word , word , ... ]   (left-normed commutator)\n"
    "  e.g. \"[x1^2,x2]\", \"x4 [x1,[x2,x3]] x4^-1\"\n";

constexpr const char* kGroupGrammar =
    "Groups: cyclic(m) zd(d) int sym(n) alt(n) unitri(n[,m]) wreath(L,B) infunitri grigorchuk product(G,H,...)\n"
    "Elements (\"e\" is always the identity):\n"
    "  cyclic 3 | zd [1,-2] | sym/alt (1 2 3)(4 5) | unitri {(1,2):1, (1,3):-2}\n"
    "  wreath (s:1; 0:1, 2:-1) | infunitri (t:1; (0,1):1) | grigorchuk abcd | product <a|b>\n";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string group;
  std::string word;
  std::string word_name;
  std::vector<std::string> params;
  std::vector<std::string> tuple;
  std::int64_t budget = 0;
  std::uint64_t seed = 0;
  std::int64_t samples = 200;
  std::int64_t size_bound = 8;
  std::int64_t n = 1;
  std::string scheme;
  std::string mode = "auto";
  int workers = 1;
  std::int64_t levels = 12;
  std::int64_t set_budget = 100000;
  std::string experiment;
  bool json = false;
  bool timing = false;
};

struct Outcome {
  json inputs = json::object();
  json result = json::object();
  int code = kExitOk;
  std::string text;
};

int status_code(Status s) {
  switch (s) {
    case Status::kHolds:
      return kExitOk;
    case Status::kFails:
      return kExitFails;
    case Status::kInconclusive:
      break;
  }
  return kExitInconclusive;
}

// key=value pairs; values are read as JSON when they parse, else as strings.
json param_object(const std::vector<std::string>& raw) {
  json out = json::object();
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    json v = json::parse(value, nullptr, false);
    out[key] = v.is_discarded() ? json(value) : v;
  }
  return out;
}

Word resolve_word(const Config& cfg, json& inputs) {
  if (!cfg.word.empty() && !cfg.word_name.empty()) throw UsageError("give either --word or --word-name, not both");
  if (!cfg.word_name.empty()) {
    WordParams params;
    for (const auto& [k, v] : param_object(cfg.params).items()) {
      if (!v.is_number_integer()) throw UsageError("word parameter " + k + " must be an integer");
      params[k] = v.get<std::int64_t>();
    }
    Word w = named_word(cfg.word_name, params);
    inputs["word_name"] = cfg.word_name;
    if (!params.empty()) inputs["word_params"] = params;
    inputs["word"] = render_word(w);
    return w;
  }
  if (cfg.word.empty()) throw UsageError("a word is required (--word or --word-name)");
  Word w = parse_word(cfg.word);
  inputs["word"] = render_word(w);
  return w;
}

GroupPtr resolve_group(const Config& cfg, json& inputs) {
  if (cfg.group.empty()) throw UsageError("--group is required");
  GroupPtr g = make_group(cfg.group);
  inputs["group"] = g->name();
  return g;
}

std::vector<Element> resolve_tuple(const Config& cfg, const Group& g, json& inputs) {
  std::vector<Element> out;
  for (const auto& t : cfg.tuple) out.push_back(g.parse_element(t));
  inputs["tuple"] = tuple_to_json(g, out);
  return out;
}

void require_arity(const Word& w, const std::vector<Element>& tuple) {
  if (static_cast<int>(tuple.size()) != w.arity()) {
    throw UsageError("word has arity " + std::to_string(w.arity()) + " but " + std::to_string(tuple.size()) +
                     " tuple elements were given");
  }
}

std::string join_tuple(const Group& g, std::span<const Element> tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) s += ", ";
    s += g.format(tuple[i]);
  }
  return s + ")";
}

// Exhaustive searches keep witnesses compact; replay the orbit for display.
void attach_trace(const Word& w, const Group& g, IdentityVerdict& v) {
  if (!v.witness || !v.witness->orbit.trace.empty() || v.witness->tuple.empty()) return;
  const auto& t = v.witness->tuple;
  const std::int64_t budget = std::min<std::int64_t>(default_orbit_budget(g), 256);
  auto replay = verbal_orbit(w, g, t.front(), std::span<const Element>(t).subspan(1), budget, true);
  if (replay.outcome.index() == v.witness->orbit.outcome.index()) v.witness->orbit.trace = std::move(replay.trace);
}

std::string verdict_text(const Group& g, const IdentityVerdict& v) {
  std::string s = "status: " + to_string(v.status) + " (" + v.certificate + ")\n";
  s += "tuples checked: " + std::to_string(v.tuples_checked) + ", reached e: " + std::to_string(v.tuples_reached) +
       "\n";
  s += "max depth seen: " + std::to_string(v.max_depth_seen) + "\n";
  if (!v.argmax_tuple.empty()) s += "deepest tuple: " + join_tuple(g, v.argmax_tuple) + "\n";
  if (v.witness) {
    s += "witness: " + join_tuple(g, v.witness->tuple) + "\n";
    s += "  " + v.witness->orbit.describe() + "\n";
    for (std::size_t i = 0; i < v.witness->orbit.trace.size(); ++i) {
      s += "  o_" + std::to_string(i) + " = " + v.witness->orbit.trace[i] + "\n";
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// subcommands

Outcome cmd_parse(const Config& cfg) {
  Outcome o;
  if (cfg.word.empty() && cfg.word_name.empty() && cfg.group.empty()) {
    throw UsageError("parse needs --word, --word-name or --group");
  }
  if (!cfg.word.empty() || !cfg.word_name.empty()) {
    const Word w = resolve_word(cfg, o.inputs);
    json sums = json::array();
    for (int i = 1; i <= w.arity(); ++i) sums.push_back(exponent_sum(w, i));
    o.result["word"] = render_word(w);
    o.result["arity"] = w.arity();
    o.result["syllables"] = w.syllable_count();
    o.result["letters"] = w.letter_length();
    o.result["exponent_sums"] = sums;
    o.text += render_word(w) + "\narity " + std::to_string(w.arity()) + ", " + std::to_string(w.letter_length()) +
              " letters\n";
  }
  if (!cfg.group.empty()) {
    const GroupPtr g = resolve_group(cfg, o.inputs);
    json gj{{"descriptor", g->name()}, {"finite", g->is_finite()}};
    std::string line = g->name();
    if (g->is_finite()) {
      gj["order"] = g->order();
      line += " order " + std::to_string(g->order());
    } else {
      line += " infinite";
    }
    o.result["group"] = gj;
    o.text += line + "\n";
    if (!cfg.tuple.empty()) {
      const auto tuple = resolve_tuple(cfg, *g, o.inputs);
      o.result["elements"] = tuple_to_json(*g, tuple);
      for (const auto& x : tuple) o.text += g->format(x) + "\n";
    }
  }
  return o;
}

Outcome cmd_eval(const Config& cfg) {
  Outcome o;
  const GroupPtr g = resolve_group(cfg, o.inputs);
  const Word w = resolve_word(cfg, o.inputs);
  const auto tuple = resolve_tuple(cfg, *g, o.inputs);
  require_arity(w, tuple);
  const Element v = evaluate(w, *g, tuple);
  o.result["value"] = g->format(v);
  o.result["is_identity"] = g->is_identity(v);
  o.text = g->format(v) + "\n";
  return o;
}

Outcome cmd_iterate(const Config& cfg) {
  Outcome o;
  const Word w = resolve_word(cfg, o.inputs);
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  const std::string scheme = cfg.scheme.empty() ? "engel" : cfg.scheme;
  o.inputs["n"] = cfg.n;
  o.inputs["scheme"] = scheme;
  Word it;
  if (scheme == "engel") {
    it = engel_iterate(w, static_cast<int>(cfg.n));
  } else if (scheme == "s") {
    it = s_iterate(w, static_cast<int>(cfg.n));
  } else {
    throw UsageError("--scheme for iterate is engel or s, not '" + scheme + "'");
  }
  o.result["word"] = render_word(it);
  o.result["arity"] = it.arity();
  o.text = render_word(it) + "\n";
  if (!cfg.group.empty()) {
    const GroupPtr g = resolve_group(cfg, o.inputs);
    const auto tuple = resolve_tuple(cfg, *g, o.inputs);
    require_arity(it, tuple);
    const Element v = evaluate(it, *g, tuple);
    o.result["value"] = g->format(v);
    o.text += "value: " + g->format(v) + "\n";
  }
  return o;
}

Outcome cmd_orbit(const Config& cfg) {
  Outcome o;
  const GroupPtr g = resolve_group(cfg, o.inputs);
  const Word w = resolve_word(cfg, o.inputs);
  const auto tuple = resolve_tuple(cfg, *g, o.inputs);
  require_arity(w, tuple);
  const std::int64_t budget = cfg.budget > 0 ? cfg.budget : default_orbit_budget(*g);
  o.inputs["budget"] = budget;
  const auto orbit = verbal_orbit(w, *g, tuple.front(), std::span<const Element>(tuple).subspan(1), budget, true);
  o.result = orbit_to_json(orbit);
  o.result["summary"] = orbit.describe();
  o.text = orbit.describe() + "\n";
  for (std::size_t i = 0; i < orbit.trace.size(); ++i) {
    o.text += "o_" + std::to_string(i) + " = " + orbit.trace[i] + "\n";
  }
  o.code = orbit.reaches_identity() ? kExitOk : orbit.enters_cycle() ? kExitFails : kExitInconclusive;
  return o;
}

CheckOptions check_options(const Config& cfg, const Group& g, int arity, json& inputs) {
  CheckOptions opt;
  opt.seed = cfg.seed;
  opt.samples = cfg.samples;
  opt.size_bound = cfg.size_bound;
  opt.budget = cfg.budget;
  opt.workers = cfg.workers;
  std::string mode = cfg.mode;
  if (mode == "auto") {
    bool small = false;
    if (g.is_finite()) {
      double total = 1;
      for (int i = 0; i < arity; ++i) total *= static_cast<double>(g.order());
      small = total <= static_cast<double>(kExhaustiveSolvabilityLimit);
    }
    mode = small ? "exhaustive" : "sampled";
  }
  if (mode == "exhaustive") {
    opt.mode = CheckMode::kExhaustive;
  } else if (mode == "sampled") {
    opt.mode = CheckMode::kSampled;
    inputs["samples"] = cfg.samples;
    inputs["size_bound"] = cfg.size_bound;
  } else {
    throw UsageError("--mode is auto, exhaustive or sampled, not '" + cfg.mode + "'");
  }
  inputs["mode"] = mode;
  inputs["budget"] = cfg.budget;
  return opt;
}

Outcome cmd_check_e(const Config& cfg) {
  Outcome o;
  const GroupPtr g = resolve_group(cfg, o.inputs);
  const Word w = resolve_word(cfg, o.inputs);
  const auto opt = check_options(cfg, *g, w.arity(), o.inputs);
  auto v = check_e_identity(w, g, opt);
  attach_trace(w, *g, v);
  o.result = verdict_to_json(*g, v);
  o.text = verdict_text(*g, v);
  o.code = status_code(v.status);
  return o;
}

Outcome cmd_check_s(const Config& cfg) {
  Outcome o;
  const GroupPtr g = resolve_group(cfg, o.inputs);
  const Word w = resolve_word(cfg, o.inputs);
  const auto initial = resolve_tuple(cfg, *g, o.inputs);
  if (initial.empty() && !g->is_finite()) throw UsageError("an infinite group needs an initial set via --tuple");
  SCheckOptions opt;
  opt.max_levels = cfg.levels;
  opt.max_set_size = cfg.set_budget;
  opt.workers = cfg.workers;
  o.inputs["levels"] = cfg.levels;
  o.inputs["set_budget"] = cfg.set_budget;
  const auto r = check_s_identity(w, g, initial, opt);
  o.result["verdict"] = verdict_to_json(*g, r.verdict);
  o.result["trace"] = trace_to_json(r.trace);
  o.text = "status: " + to_string(r.verdict.status) + " (" + r.verdict.certificate + ")\n";
  if (r.trace.level >= 0) o.text += "level: " + std::to_string(r.trace.level) + "\n";
  for (std::size_t k = 0; k < r.trace.levels.size(); ++k) {
    o.text += "|V_" + std::to_string(k) + "| = " + std::to_string(r.trace.levels[k].size) + "\n";
  }
  o.code = status_code(r.verdict.status);
  return o;
}

Outcome cmd_depth(const Config& cfg) {
  Outcome o;
  const GroupPtr g = resolve_group(cfg, o.inputs);
  const Word w = resolve_word(cfg, o.inputs);
  auto rep = depth_e(w, g, cfg.workers);
  attach_trace(w, *g, rep.verdict);
  o.result["s_value"] = rep.s_value ? json(*rep.s_value) : json(nullptr);
  o.result["verdict"] = verdict_to_json(*g, rep.verdict);
  if (rep.s_value) {
    o.text = "s(w, G) = " + std::to_string(*rep.s_value) + "\n";
    if (!rep.argmax_tuple.empty()) o.text += "attained at " + join_tuple(*g, rep.argmax_tuple) + "\n";
  } else {
    o.text = "not an iterated identity\n" + verdict_text(*g, rep.verdict);
  }
  o.code = rep.s_value ? kExitOk : kExitFails;
  return o;
}

Outcome cmd_decompose(const Config& cfg) {
  Outcome o;
  const Word w = resolve_word(cfg, o.inputs);
  const std::string scheme = cfg.scheme.empty() ? "uv" : cfg.scheme;
  o.inputs["scheme"] = scheme;
  if (scheme == "uv") {
    const auto d = decompose_uv(w);
    json terms = json::array();
    for (const auto& t : d.conjugate_powers) terms.push_back({{"alpha", render_word(t.alpha)}, {"l", t.l}});
    o.result["terms"] = terms;
    o.result["u"] = render_word(d.u());
    o.result["v"] = render_word(d.tail);
    o.result["round_trip"] = d.recompose() == w;
    o.text = "u = " + render_word(d.u()) + "\nv = " + render_word(d.tail) + "\n";
  } else if (scheme == "nilpotent") {
    const auto d = decompose_nilpotent(w);
    json terms = json::array();
    for (const auto& t : d.commutator_terms) {
      terms.push_back({{"l", t.l}, {"u", render_word(t.u)}, {"inverted", t.inverted}});
    }
    o.result["terms"] = terms;
    o.result["commutator_part"] = render_word(d.commutator_part());
    o.result["r"] = d.r;
    o.result["v"] = render_word(d.tail);
    o.result["round_trip"] = d.recompose() == w;
    o.text = "commutators = " + render_word(d.commutator_part()) + "\nr = " + std::to_string(d.r) +
             "\nv = " + render_word(d.tail) + "\n";
    if (!cfg.group.empty()) {
      const GroupPtr g = resolve_group(cfg, o.inputs);
      const auto c = classify_nilpotent(w, g, cfg.seed);
      o.result["classification"] = {{"status", to_string(c.status)},
                                    {"reason", c.reason},
                                    {"m", c.m},
                                    {"tail_is_law", c.tail_is_identity}};
      o.text += "classification: " + to_string(c.status) + " (" + c.reason + ")\n";
      o.code = status_code(c.status);
    }
  } else {
    throw UsageError("--scheme for decompose is uv or nilpotent, not '" + scheme + "'");
  }
  return o;
}

Outcome cmd_solvable(const Config& cfg) {
  Outcome o;
  const GroupPtr g = resolve_group(cfg, o.inputs);
  if (!cfg.word.empty()) throw UsageError("solvable takes --word-name (w_BW, w_BWW or w_BGGKPP)");
  const std::string name = cfg.word_name.empty() ? "w_BWW" : cfg.word_name;
  o.inputs["word_name"] = name;
  CheckOptions sampled;
  sampled.mode = CheckMode::kSampled;
  sampled.seed = cfg.seed;
  sampled.samples = cfg.samples;
  sampled.size_bound = cfg.size_bound;
  sampled.budget = cfg.budget;
  sampled.workers = cfg.workers;
  auto rep = solvability_by_word(g, name, sampled);
  attach_trace(named_word(name), *g, rep.verdict);
  o.result["solvable"] = rep.solvable;
  o.result["oracle_solvable"] = rep.oracle_solvable;
  o.result["derived_length"] = rep.derived_length;
  o.result["verdict"] = verdict_to_json(*g, rep.verdict);
  o.text = g->name() + (rep.oracle_solvable ? " is solvable" : " is not solvable") + " (derived series)\n";
  o.text += verdict_text(*g, rep.verdict);
  o.code = status_code(rep.verdict.status);
  return o;
}

Outcome cmd_reproduce(const Config& cfg) {
  Outcome o;
  if (cfg.experiment.empty()) throw UsageError("reproduce needs an experiment name or 'all'");
  o.inputs["experiment"] = cfg.experiment;
  auto finish = [&](ExperimentReport r) {
    if (!cfg.timing) r.duration_ms = 0;
    return r;
  };
  if (cfg.experiment == "all") {
    if (!cfg.params.empty()) throw UsageError("--param applies to a single experiment, not 'all'");
    json reports = json::array();
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    for (const auto& info : list_experiments()) {
      const auto r = finish(run_experiment(info.name, json::object(), cfg.seed, cfg.workers));
      (r.passed ? passed : failed) += 1;
      reports.push_back(r.to_json());
      std::string line = r.name;
      line.resize(std::max<std::size_t>(line.size() + 2, 32), ' ');
      o.text += line + (r.passed ? "PASS" : "FAIL");
      if (cfg.timing) o.text += "  " + std::to_string(r.duration_ms) + " ms";
      o.text += "\n";
    }
    o.text += std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
    o.result = {{"passed", passed}, {"failed", failed}, {"reports", reports}};
    o.code = failed == 0 ? kExitOk : kExitFails;
    return o;
  }
  const json params = param_object(cfg.params);
  o.inputs["params"] = params;
  const auto r = finish(run_experiment(cfg.experiment, params, cfg.seed, cfg.workers));
  o.result = r.to_json();
  o.text = r.name + ": " + (r.passed ? "PASS" : "FAIL") + "\n" + r.evidence.dump(2) + "\n";
  o.code = r.passed ? kExitOk : kExitFails;
  return o;
}

Outcome cmd_list(const Config&) {
  Outcome o;
  json experiments = json::array();
  o.text = "experiments:\n";
  for (const auto& e : list_experiments()) {
    experiments.push_back({{"name", e.name}, {"summary", e.summary}, {"defaults", e.default_params}});
    o.text += "  " + e.name + "  " + e.summary + "\n";
  }
  o.text += "named words:\n";
  for (const auto& n : named_word_names()) o.text += "  " + n + " = " + render_word(named_word(n)) + "\n";
  o.text += std::string(kGroupGrammar);
  o.result["experiments"] = experiments;
  o.result["named_words"] = named_word_names();
  return o;
}

// ---------------------------------------------------------------------------

struct Command {
  const char* name;
  const char* description;
  std::function<Outcome(const Config&)> run;
};

enum Flag : unsigned {
  kGroup = 1U << 0,
  kWord = 1U << 1,
  kTuple = 1U << 2,
  kBudget = 1U << 3,
  kSampling = 1U << 4,
  kWorkers = 1U << 5,
  kN = 1U << 6,
  kScheme = 1U << 7,
  kMode = 1U << 8,
  kLevels = 1U << 9,
  kParam = 1U << 10,
  kExperiment = 1U << 11,
};

void add_flags(CLI::App& sub, Config& cfg, unsigned flags) {
  if (flags & kGroup) sub.add_option("--group,-g", cfg.group, "group descriptor, e.g. \"wreath(cyclic(4),int)\"");
  if (flags & kWord) {
    sub.add_option("--word,-w", cfg.word, "word in the DSL");
    sub.add_option("--word-name", cfg.word_name, "named word: w0 w_BW w_BWW w_BGGKPP wbar ribnere adyan engel");
  }
  if (flags & (kWord | kParam)) {
    sub.add_option("--param", cfg.params, "key=value parameter (repeatable)")->take_all();
  }
  if (flags & kTuple) sub.add_option("--tuple,-t", cfg.tuple, "element literals x1 x2 ...")->expected(1, -1);
  if (flags & kBudget) {
    sub.add_option("--budget", cfg.budget, "orbit step budget (0: order of G if finite, else 10000)")
        ->check(CLI::NonNegativeNumber);
  }
  if (flags & kSampling) {
    sub.add_option("--samples", cfg.samples, "sampled tuples")->check(CLI::NonNegativeNumber);
    sub.add_option("--size-bound", cfg.size_bound, "size bound for random elements")->check(CLI::PositiveNumber);
  }
  if (flags & kWorkers) sub.add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1, 256));
  if (flags & kN) sub.add_option("--n", cfg.n, "number of iterations")->check(CLI::PositiveNumber);
  if (flags & kScheme) sub.add_option("--scheme", cfg.scheme, "iterate: engel | s; decompose: uv | nilpotent");
  if (flags & kMode) sub.add_option("--mode", cfg.mode, "auto | exhaustive | sampled");
  if (flags & kLevels) {
    sub.add_option("--levels", cfg.levels, "maximum value-set levels")->check(CLI::PositiveNumber);
    sub.add_option("--set-budget", cfg.set_budget, "maximum value-set size")->check(CLI::PositiveNumber);
  }
  if (flags & kExperiment) sub.add_option("experiment", cfg.experiment, "experiment name or 'all'")->required();
  sub.add_option("--seed", cfg.seed, "random seed (default: $ITERID_SEED or 0)");
  sub.add_flag("--json", cfg.json, "emit one JSON document");
  sub.add_flag("--timing", cfg.timing, "report wall-clock durations");
  sub.footer(std::string(kWordGrammar) + kGroupGrammar);
}

void print_json(std::ostream& out, const std::string& command, const Config& cfg, const json& inputs,
                const json& result, std::int64_t ms) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["result"] = result;
  doc["seed"] = cfg.seed;
  doc["duration_ms"] = cfg.timing ? ms : 0;
  out << doc.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("ITERID_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: ITERID_SEED must be a nonnegative integer\n";
      return kExitUsage;
    }
  }

  CLI::App app("Iterated group identities: evaluate, iterate and check Engel- and solvability-type words.", "iterid");
  app.require_subcommand(1);
  app.footer(std::string(kWordGrammar) + kGroupGrammar);

  const std::vector<std::pair<Command, unsigned>> commands{
      {{"parse", "parse a word, group descriptor or element literals", cmd_parse}, kGroup | kWord | kTuple},
      {{"eval", "evaluate a word on a tuple", cmd_eval}, kGroup | kWord | kTuple},
      {{"iterate", "symbolic Engel (w o w) or S-type (w * w) iterate", cmd_iterate},
       kGroup | kWord | kTuple | kN | kScheme},
      {{"orbit", "iterate x -> w(x, x2..xn) from x1 and report the outcome", cmd_orbit},
       kGroup | kWord | kTuple | kBudget},
      {{"check-e", "decide an Engel-type iterated identity", cmd_check_e},
       kGroup | kWord | kBudget | kSampling | kWorkers | kMode},
      {{"check-s", "decide an S-type identity by value-set recursion", cmd_check_s},
       kGroup | kWord | kTuple | kWorkers | kLevels},
      {{"depth", "exact iterational depth on a finite group", cmd_depth}, kGroup | kWord | kWorkers},
      {{"decompose", "u*v or nilpotent decomposition of a word", cmd_decompose}, kGroup | kWord | kScheme},
      {{"solvable", "solvability test by a named word, checked against the derived series", cmd_solvable},
       kGroup | kWord | kBudget | kSampling | kWorkers},
      {{"reproduce", "run a catalog experiment or 'all'", cmd_reproduce}, kParam | kWorkers | kExperiment},
      {{"list", "list experiments and named words", cmd_list}, 0},
  };
  std::map<const CLI::App*, const Command*> lookup;
  for (const auto& [cmd, flags] : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
    add_flags(*sub, cfg, flags);
    lookup[sub] = &cmd;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const Command& cmd = *lookup.at(chosen);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  };
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << "error: " << message << "\n";
    if (cfg.json) print_json(out, cmd.name, cfg, json::object(), {{"error", {{"kind", kind}, {"message", message}}}}, 0);
    return code;
  };

  try {
    const Outcome o = cmd.run(cfg);
    if (cfg.json) {
      print_json(out, cmd.name, cfg, o.inputs, o.result, elapsed());
    } else {
      out << o.text;
      if (cfg.timing) out << "time: " << elapsed() << " ms\n";
    }
    return o.code;
  } catch (const ParseError& e) {
    return fail(kExitUsage, "parse", e.what());
  } catch (const OracleDisagreement& e) {
    return fail(kExitInternal, "oracle_disagreement", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitUsage, "invalid_argument", e.what());
  } catch (const std::domain_error& e) {
    return fail(kExitUsage, "domain", e.what());
  } catch (const std::out_of_range& e) {
    return fail(kExitUsage, "out_of_range", e.what());
  } catch (const std::length_error& e) {
    return fail(kExitUsage, "length", e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, "internal", e.what());
  }
}

}  // namespace iterid::cli
