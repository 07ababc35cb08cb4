#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "experiment_registry.hpp"
#include "iterid/dynamics.hpp"
#include "iterid/experiments.hpp"
#include "iterid/finite_group.hpp"
#include "iterid/grigorchuk.hpp"
#include "iterid/group.hpp"
#include "iterid/named_words.hpp"
#include "iterid/projections.hpp"
#include "iterid/rng.hpp"
#include "iterid/structure.hpp"
#include "iterid/word.hpp"
#include "iterid/word_parser.hpp"

namespace iterid::detail {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// helpers

Word random_word(Rng& rng, int arity, std::int64_t max_syllables, std::int64_t max_exp) {
  const std::int64_t n = rng.uniform(1, max_syllables);
  std::vector<Syllable> raw;
  for (std::int64_t i = 0; i < n; ++i) {
    const int var = static_cast<int>(rng.uniform(1, arity));
    std::int64_t e = rng.uniform(1, max_exp);
    if (rng.coin()) e = -e;
    raw.push_back({var, e});
  }
  return Word::from_syllables(raw, arity);
}

// (prod [x1^a, v]^{+-1}) x1^r tail, arity 3: random words in the shape of
// the nilpotent decomposition, so both verdicts show up on small groups.
Word structured_word(Rng& rng) {
  static constexpr std::int64_t kPowers[] = {1, 2, 3, 4, 6, -1, -2};
  static constexpr std::int64_t kExponents[] = {0, 0, 0, 1, 2, 3, 4, 6, 8, 9, 12, -2, -3};
  const Word x1 = Word::generator(1, 3);
  const Word x2 = Word::generator(2, 3);
  const Word x3 = Word::generator(3, 3);
  const std::vector<Word> tails{Word::identity(3),          power(x2, 2), power(x2, 3), power(x2, 6), power(x2, 12),
                                commutator(x2, x3),         power(commutator(x2, x3), 2),
                                power(commutator(x2, x3), 3), x2 * x3};
  WordBuilder b(3);
  const auto terms = rng.uniform(0, 2);
  for (std::int64_t t = 0; t < terms; ++t) {
    const Word v = shift_variables(random_word(rng, 2, 3, 2), 1, 3);
    Word c = commutator(power(x1, kPowers[rng.uniform(0, 6)]), v);
    if (rng.coin()) c = inverse(c);
    b.append(c);
  }
  b.push(1, kExponents[rng.uniform(0, 12)]);
  b.append(tails[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(tails.size()) - 1))]);
  return std::move(b).build();
}

// Appends x_i^(-s_i) so every exponent sum vanishes.
Word zero_sum(const Word& w) {
  WordBuilder b(w.arity());
  b.append(w);
  for (int i = 1; i <= w.arity(); ++i) b.push(i, -exponent_sum(w, i));
  return std::move(b).build();
}

std::span<const Element> tail_of(const std::vector<Element>& tuple) {
  return std::span<const Element>(tuple).subspan(1);
}

struct DepthTally {
  std::uint64_t total = 0;
  std::uint64_t reached = 0;
  std::int64_t max_depth = 0;
  std::map<std::int64_t, std::uint64_t> histogram;
  std::optional<json> first_failure;

  void add(const Group& g, const std::vector<Element>& tuple, const OrbitReport& orbit) {
    ++total;
    if (const auto d = orbit.depth()) {
      ++reached;
      max_depth = std::max(max_depth, *d);
      ++histogram[*d];
    } else if (!first_failure) {
      first_failure = json{{"tuple", tuple_to_json(g, tuple)}, {"orbit", orbit_to_json(orbit)}};
    }
  }
  bool all_reached() const { return reached == total; }
  json to_json() const {
    json h = json::object();
    for (const auto& [d, c] : histogram) h[std::to_string(d)] = c;
    json j{{"tuples", total}, {"reached", reached}, {"max_depth", max_depth}, {"depth_histogram", h}};
    if (first_failure) j["first_failure"] = *first_failure;
    return j;
  }
};

// Runs `count` sampled orbits of w on g.
DepthTally sampled_depths(const Word& w, const Group& g, std::uint64_t seed, std::int64_t count,
                          std::int64_t size_bound, std::int64_t budget) {
  DepthTally tally;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto tuple = sample_tuple(g, w.arity(), seed, i, size_bound);
    tally.add(g, tuple, verbal_orbit(w, g, tuple.front(), tail_of(tuple), budget));
  }
  return tally;
}

struct PrimePowers {
  std::int64_t max_exponent = 0;
  std::int64_t radical = 1;
};

PrimePowers factor(std::int64_t n) {
  PrimePowers out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::int64_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.radical *= p;
    out.max_exponent = std::max(out.max_exponent, a);
  }
  if (n > 1) {
    out.radical *= n;
    out.max_exponent = std::max<std::int64_t>(out.max_exponent, 1);
  }
  return out;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  for (std::int64_t i = 0; i < e; ++i) r = (r * b) % m;
  return r;
}

GroupPtr finite_group_param(const std::string& text) {
  GroupPtr g = make_group(text);
  if (!g->is_finite()) throw std::invalid_argument("group " + text + " must be finite for this experiment");
  return g;
}

CheckOptions exhaustive_options(const ExperimentContext& ctx) {
  CheckOptions o;
  o.mode = CheckMode::kExhaustive;
  o.seed = ctx.seed;
  o.workers = ctx.workers;
  return o;
}

// ---------------------------------------------------------------------------
// catalog

bool ex_2_2(const ExperimentContext& ctx, json& ev) {
  const auto p = ctx.integer("p", 2, 3);
  const GroupPtr g = make_group(GroupDescriptor::wreath(GroupDescriptor::unitriangular(3, 2), p));
  const Word w = parse_word("[x1,x2]^2");
  const auto v = check_e_identity(w, g, exhaustive_options(ctx));
  ev["group"] = g->name();
  ev["word"] = render_word(w);
  ev["order"] = g->order();
  ev["verdict"] = verdict_to_json(*g, v);
  return v.status == Status::kHolds;
}

bool ex_2_6(const ExperimentContext& ctx, json& ev) {
  const auto n = ctx.integer("n", 6, 8);
  const auto samples = ctx.integer("samples", 1, 100000);
  const auto max_attempts = ctx.integer("max_attempts", 1, 1000000);
  const GroupPtr g = make_group(GroupDescriptor::symmetric(n));

  std::int64_t m = 1;
  for (std::int64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::int64_t q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime) m *= p;
  }
  ev["group"] = g->name();
  ev["m"] = m;

  // Statistical part: each conjugate-power word on sampled 4-tuples.
  const std::string pw = "x1^" + std::to_string(m);
  bool words_ok = true;
  json per_word = json::array();
  WordBuilder product(4);
  for (int j = 2; j <= 4; ++j) {
    const std::string xj = "x" + std::to_string(j);
    const Word wj = parse_word(xj + " " + pw + " " + xj + "^-1", 4);
    product.append(wj);
    const auto tally = sampled_depths(wj, *g, mix_seed(ctx.seed, static_cast<std::uint64_t>(j)), samples, 8, 0);
    words_ok = words_ok && tally.all_reached();
    json entry = tally.to_json();
    entry["word"] = render_word(wj);
    per_word.push_back(entry);
  }
  ev["conjugate_power_words"] = per_word;
  const Word w = std::move(product).build();
  ev["product_word"] = render_word(w);

  // Decisive part: x1 = w(x1, x2, x3, x4) for x1 = (1 2 3 4)(5 6).
  const Element x1 = g->parse_element("(1 2 3 4)(5 6)");
  const Element c = g->pow(x1, m);
  auto conj_by = [&](const Element& y) { return g->op(g->op(y, c), g->inv(y)); };
  std::map<Element, Element> conjugator;
  for (const auto& y : g->enumerate()) conjugator.emplace(conj_by(y), y);

  Rng rng(mix_seed(ctx.seed, 1000));
  std::optional<std::vector<Element>> found;
  std::int64_t attempts = 0;
  while (!found && attempts < max_attempts) {
    ++attempts;
    const Element x2 = g->random_element(rng, 8);
    const Element x3 = g->random_element(rng, 8);
    const Element need = g->op(g->inv(g->op(conj_by(x2), conj_by(x3))), x1);
    const auto it = conjugator.find(need);
    if (it != conjugator.end()) found = std::vector<Element>{x1, x2, x3, it->second};
  }
  bool fixed_ok = false;
  if (found) {
    const Element value = evaluate(w, *g, *found);
    const auto orbit = verbal_orbit(w, *g, x1, tail_of(*found), 0, true);
    const auto* cyc = std::get_if<EntersCycle>(&orbit.outcome);
    fixed_ok = g->equal(value, x1) && !g->is_identity(x1) && cyc != nullptr && cyc->period == 1;
    ev["fixed_point"] = {{"tuple", tuple_to_json(*g, *found)},
                         {"value", g->format(value)},
                         {"attempts", attempts},
                         {"orbit", orbit_to_json(orbit)}};
  } else {
    ev["fixed_point"] = {{"attempts", attempts}};
  }
  ev["product_status"] = fixed_ok ? "fails" : "inconclusive";
  return words_ok && fixed_ok;
}

bool rm_2_5(const ExperimentContext& ctx, json& ev) {
  const auto groups = ctx.strings("groups");
  const auto words = ctx.strings("words");
  for (const auto& name : words) named_word(name);
  CheckOptions sampled;
  sampled.mode = CheckMode::kSampled;
  sampled.seed = ctx.seed;
  sampled.workers = ctx.workers;

  bool ok = true;
  json pairs = json::array();
  for (const auto& text : groups) {
    const GroupPtr g = finite_group_param(text);
    for (const auto& name : words) {
      json entry{{"group", g->name()}, {"word", name}};
      try {
        const auto rep = solvability_by_word(g, name, sampled);
        const bool agree = rep.oracle_solvable ? rep.verdict.status != Status::kFails
                                               : rep.verdict.status == Status::kFails;
        ok = ok && agree;
        entry["agrees_with_derived_series"] = agree;
        entry["oracle_solvable"] = rep.oracle_solvable;
        entry["derived_length"] = rep.derived_length;
        entry["verdict"] = verdict_to_json(*g, rep.verdict);
      } catch (const OracleDisagreement& e) {
        ok = false;
        entry["agrees_with_derived_series"] = false;
        entry["error"] = e.what();
      }
      pairs.push_back(entry);
    }
  }
  ev["pairs"] = pairs;
  return ok;
}

bool ex_3_4(const ExperimentContext& ctx, json& ev) {
  const auto d = ctx.integer("d", 2, 8);
  const auto count = ctx.integer("words", 1, 100000);
  const auto max_syllables = ctx.integer("max_syllables", 1, 64);
  const auto per_word = ctx.integer("tuples_per_word", 1, 1000);
  const GroupPtr g = make_group(GroupDescriptor::free_abelian(d));
  ev["group"] = g->name();

  DepthTally tally;
  bool all_depth_one = true;
  std::optional<json> counterexample;
  for (std::int64_t i = 0; i < count; ++i) {
    Rng rng(mix_seed(ctx.seed, static_cast<std::uint64_t>(i)));
    const Word w = zero_sum(random_word(rng, 1 + static_cast<int>(i % 3), max_syllables, 3));
    for (std::int64_t t = 0; t < per_word; ++t) {
      const auto tuple = sample_tuple(*g, w.arity(), mix_seed(ctx.seed, static_cast<std::uint64_t>(i)), t, 8);
      const auto orbit = verbal_orbit(w, *g, tuple.front(), tail_of(tuple));
      tally.add(*g, tuple, orbit);
      if (orbit.depth() != std::optional<std::int64_t>(1)) {
        all_depth_one = false;
        if (!counterexample) counterexample = json{{"word", render_word(w)}, {"orbit", orbit_to_json(orbit)}};
      }
    }
  }
  ev["zero_sum_words"] = count;
  ev["orbits"] = tally.to_json();
  if (counterexample) ev["counterexample"] = *counterexample;

  // x1 x2 with x2 of infinite order: o_l = x1 + l*x2 and x1 is not on the
  // line through x2, so no o_l is zero.
  const Word w = parse_word("x1 x2");
  std::vector<std::int64_t> e1(static_cast<std::size_t>(d), 0);
  std::vector<std::int64_t> e2 = e1;
  e1[0] = 1;
  e2[1] = 1;
  const std::vector<Element> tuple{Element(IntVector{e1}), Element(IntVector{e2})};
  const auto orbit = verbal_orbit(w, *g, tuple[0], tail_of(tuple));
  bool affine_ok = exponent_sum(w, 1) == 1 && exponent_sum(w, 2) == 1;
  Element o = tuple[0];
  for (std::int64_t l = 1; l <= 100 && affine_ok; ++l) {
    o = evaluate(w, *g, std::vector<Element>{o, tuple[1]});
    const auto& v = o.as<IntVector>().v;
    affine_ok = v[0] == 1 && v[1] == l;
  }
  const bool witness_ok = !orbit.reaches_identity() && affine_ok;
  ev["nonzero_sum_witness"] = {{"word", render_word(w)},
                               {"tuple", tuple_to_json(*g, tuple)},
                               {"orbit", orbit_to_json(orbit)},
                               {"x2_infinite_order", true},
                               {"orbit_is_x1_plus_l_x2", affine_ok},
                               {"status", witness_ok ? "fails" : "inconclusive"}};
  return all_depth_one && witness_ok;
}

bool ex_4_1(const ExperimentContext& ctx, json& ev) {
  const auto count = ctx.integer("tuples", 1, 1000000);
  const auto size_bound = ctx.integer("size_bound", 1, 16);
  const auto budget = ctx.integer("budget", 1, 1000000);
  const GroupPtr g = make_group(GroupDescriptor::inf_unitri_shift());
  const Word w = named_word("wbar");
  const auto tally = sampled_depths(w, *g, ctx.seed, count, size_bound, budget);
  ev["kind"] = "sampled evidence";
  ev["group"] = g->name();
  ev["word"] = render_word(w);
  ev["orbits"] = tally.to_json();
  return tally.all_reached();
}

bool ex_4_2(const ExperimentContext& ctx, json& ev) {
  const auto depth = ctx.integer("depth", 1, 500);
  const GroupPtr g = make_group(GroupDescriptor::inf_unitri_shift());
  const Word w = parse_word("x4 [x1,[x2,x3]] x4^-1");
  const Element x1 = g->parse_element("(t:0; (-1,0):1)");
  const Element m0 = g->parse_element("(t:0; (0,1):1)");
  const Element phi = g->parse_element("(t:1;)");
  const std::vector<Element> tuple{x1, m0, phi, phi};
  ev["word"] = render_word(w);
  ev["tuple"] = tuple_to_json(*g, tuple);
  ev["y"] = g->format(g->commutator(m0, phi));

  bool ok = true;
  json steps = json::array();
  Element o = x1;
  for (std::int64_t d = 1; d <= depth; ++d) {
    o = evaluate(w, *g, std::vector<Element>{o, m0, phi, phi});
    const auto& s = o.as<ShiftMatrix>();
    const bool single = s.shift == 0 && s.entries.size() == 1 && s.entries[0].i < s.entries[0].j;
    ok = ok && single && !g->is_identity(o);
    json step{{"d", d}, {"element", g->format(o)}, {"single_entry", single}};
    if (single) {
      step["i"] = s.entries[0].i;
      step["j"] = s.entries[0].j;
      step["value"] = s.entries[0].v;
    }
    steps.push_back(step);
  }
  ev["steps"] = steps;
  return ok;
}

bool lem_4_3_4_4(const ExperimentContext& ctx, json& ev) {
  const auto moduli = ctx.integers("moduli", 2, 1000);
  const auto trials = ctx.integer("trials", 1, 1000000);
  const std::vector<Word> corpus{named_word("w0"), named_word("wbar"), named_word("w_BWW"),
                                 parse_word("x1^2 x2 x1^-1 x2^-1 x1^3"), parse_word("x2 x1 x2^-1 x1^2 x3 x1^-1")};
  bool ok = true;
  json per_group = json::array();
  for (const auto r : moduli) {
    const GroupPtr g = make_group(GroupDescriptor::wreath(GroupDescriptor::cyclic(r), 0));
    bool hom = true;
    bool equiv = true;
    json words = json::array();
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const Word& w = corpus[k];
      const auto n = static_cast<std::int64_t>(corpus.size());
      const std::int64_t t = trials / n + (static_cast<std::int64_t>(k) < trials % n ? 1 : 0);
      const std::uint64_t s = mix_seed(ctx.seed, static_cast<std::uint64_t>(r) * 64 + k);
      Rng rng(s);
      std::vector<Element> tail;
      for (int i = 2; i <= w.arity(); ++i) tail.push_back(g->random_element(rng, 4));
      const bool h = t == 0 || check_u_homomorphism(w, g, tail, t, mix_seed(s, 1));
      const bool e = t == 0 || check_u_equivariance(w, g, tail, t, mix_seed(s, 2));
      hom = hom && h;
      equiv = equiv && e;
      words.push_back({{"word", render_word(w)},
                       {"u", render_word(decompose_uv(w).u())},
                       {"tail", tuple_to_json(*g, tail)},
                       {"trials", t},
                       {"homomorphism", h},
                       {"equivariance", e}});
    }
    // x1 x2 with x2 off the lamp subgroup is not additive on N.
    const std::vector<Element> control_tail{g->parse_element("(s:1;)")};
    const bool control = check_map_homomorphism(parse_word("x1 x2"), g, control_tail, 20, mix_seed(ctx.seed, 7));
    ok = ok && hom && equiv && !control;
    per_group.push_back({{"group", g->name()},
                         {"homomorphism", hom},
                         {"equivariance", equiv},
                         {"control_map_is_homomorphism", control},
                         {"words", words}});
  }
  ev["groups"] = per_group;
  return ok;
}

bool lem_4_5(const ExperimentContext& ctx, json& ev) {
  const auto random_words = ctx.integer("random_words", 0, 2000);
  const GroupPtr g = make_group(GroupDescriptor::wreath(GroupDescriptor::cyclic(2), 3));
  const GroupPtr q = make_group(base_projection_target(g->descriptor()));
  std::int64_t n_size = 0;
  for (const auto& x : g->enumerate()) n_size += is_member(*g, Membership::kLampSubgroup, x) ? 1 : 0;

  std::vector<Word> corpus{named_word("w0"),
                           named_word("engel", {{"k", 2}}),
                           named_word("engel", {{"k", 3}}),
                           named_word("wbar"),
                           named_word("w_BWW"),
                           parse_word("x1^6"),
                           parse_word("x1^12"),
                           parse_word("x1^3"),
                           parse_word("[x1^2,x2]"),
                           parse_word("[x1^3,x2]"),
                           parse_word("[x1^6,x2]"),
                           parse_word("[x1,[x1,x2]]"),
                           parse_word("x1^6 [x1,x2]"),
                           parse_word("[x1,x2]^2"),
                           parse_word("[x1^3,x2^3]")};
  for (std::int64_t i = 0; i < random_words; ++i) {
    Rng rng(mix_seed(ctx.seed, static_cast<std::uint64_t>(i)));
    corpus.push_back(structured_word(rng));
  }

  bool ok = true;
  std::int64_t identities = 0;
  json rows = json::array();
  for (const auto& w : corpus) {
    const auto dg = depth_e(w, g, ctx.workers);
    json row{{"word", render_word(w)}};
    if (!dg.s_value) {
      row["identity"] = false;
      rows.push_back(row);
      continue;
    }
    ++identities;
    const auto dq = depth_e(w, q, ctx.workers);
    row["identity"] = true;
    row["s_G"] = *dg.s_value;
    if (!dq.s_value) {
      ok = false;
      row["s_quotient"] = nullptr;
      row["inequality"] = false;
    } else {
      const std::int64_t bound = (*dq.s_value + 1) * (n_size + 1);
      row["s_quotient"] = *dq.s_value;
      row["bound"] = bound;
      row["inequality"] = *dg.s_value <= bound;
      ok = ok && *dg.s_value <= bound;
    }
    rows.push_back(row);
  }
  ev["group"] = g->name();
  ev["quotient"] = q->name();
  ev["normal_subgroup_order"] = n_size;
  ev["corpus_size"] = corpus.size();
  ev["identities"] = identities;
  ev["rows"] = rows;
  return ok && identities > 0;
}

bool ex_5_2(const ExperimentContext& ctx, json& ev) {
  const auto random_words = ctx.integer("random_words", 0, 1000);
  const auto samples = ctx.integer("samples", 1, 10000);
  const auto budget = ctx.integer("budget", 1, 100000);
  std::vector<Word> corpus{parse_word("x1"),          parse_word("x1^2"),         parse_word("x1^3"),
                           parse_word("x1^4"),        parse_word("x1^6"),         parse_word("x1^9"),
                           named_word("w0"),          named_word("engel", {{"k", 2}}),
                           named_word("wbar"),        parse_word("x1^2 [x1,x2]"), parse_word("x1^3 [x2,x3]"),
                           parse_word("x1^6 x2^6"),   parse_word("x1 [x2,x3]"),   parse_word("x2 x1^4 x2^-1")};
  for (std::int64_t i = 0; i < random_words; ++i) {
    Rng rng(mix_seed(ctx.seed, static_cast<std::uint64_t>(i)));
    corpus.push_back(structured_word(rng));
  }

  std::int64_t disagreements = 0;
  json finite = json::array();
  for (const char* text : {"unitri(3,2)", "unitri(3,3)"}) {
    const GroupPtr g = make_group(text);
    json rows = json::array();
    std::int64_t group_disagreements = 0;
    std::int64_t group_holds = 0;
    json statuses = json::array();
    for (const auto& w : corpus) {
      const auto c = classify_nilpotent(w, g, ctx.seed);
      const auto v = check_e_identity(w, g, exhaustive_options(ctx));
      const bool agree = c.status == v.status;
      statuses.push_back(to_string(v.status));
      group_holds += v.status == Status::kHolds ? 1 : 0;
      if (!agree) {
        ++group_disagreements;
        rows.push_back({{"word", render_word(w)},
                        {"classification", to_string(c.status)},
                        {"reason", c.reason},
                        {"dynamics", verdict_to_json(*g, v)}});
      }
    }
    disagreements += group_disagreements;
    finite.push_back({{"group", g->name()},
                      {"dynamics_holds", group_holds},
                      {"disagreements", group_disagreements},
                      {"statuses", statuses},
                      {"mismatches", rows}});
  }

  const GroupPtr u = make_group(GroupDescriptor::unitriangular(3));
  std::int64_t contradictions = 0;
  std::int64_t holds = 0;
  json rows = json::array();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Word& w = corpus[k];
    const auto c = classify_nilpotent(w, u, ctx.seed);
    std::int64_t reached = 0;
    std::int64_t cycles = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
      const auto tuple = sample_tuple(*u, w.arity(), mix_seed(ctx.seed, k), i, 4);
      const auto orbit = verbal_orbit(w, *u, tuple.front(), tail_of(tuple), budget);
      reached += orbit.reaches_identity() ? 1 : 0;
      cycles += orbit.enters_cycle() ? 1 : 0;
    }
    const bool contradiction = (c.status == Status::kHolds && reached != samples) ||
                               (c.status == Status::kFails && reached == samples);
    contradictions += contradiction ? 1 : 0;
    holds += c.status == Status::kHolds ? 1 : 0;
    rows.push_back({{"word", render_word(w)},
                    {"classification", to_string(c.status)},
                    {"reached", reached},
                    {"cycles", cycles},
                    {"consistent", !contradiction}});
  }
  json words = json::array();
  for (const auto& w : corpus) words.push_back(render_word(w));
  ev["corpus_size"] = corpus.size();
  ev["corpus"] = words;
  ev["finite"] = finite;
  ev["disagreements"] = disagreements;
  ev["unitri_integer"] = {{"samples_per_word", samples},
                          {"classified_holds", holds},
                          {"contradictions", contradictions},
                          {"words", rows}};
  return disagreements == 0 && contradictions == 0;
}

bool prop_6_1(const ExperimentContext& ctx, json& ev) {
  const auto count = ctx.integer("tuples", 1, 1000000);
  const auto size_bound = ctx.integer("size_bound", 1, 64);
  const GroupPtr g = make_group(GroupDescriptor::wreath(GroupDescriptor::integers(), 0));
  const Word w = parse_word("[x1,[x1,x2]]");
  const Element x = g->parse_element("(s:1;)");
  const Element a = g->parse_element("(s:0; 0:1)");
  const Element xa = g->op(x, a);
  const std::vector<Element> witness{x, xa};

  const Element o1 = evaluate(w, *g, witness);
  const Element o2 = evaluate(w, *g, std::vector<Element>{o1, xa});
  const auto orbit = verbal_orbit(w, *g, x, tail_of(witness), 64, true);
  const bool witness_ok = !g->is_identity(o1) && g->is_identity(o2) && orbit.depth() == std::optional<std::int64_t>(2);

  const auto tally = sampled_depths(w, *g, ctx.seed, count, size_bound, 64);
  const bool bounded = tally.all_reached() && tally.max_depth <= 2;
  ev["group"] = g->name();
  ev["word"] = render_word(w);
  ev["witness"] = {{"tuple", tuple_to_json(*g, witness)},
                   {"step1", g->format(o1)},
                   {"step2", g->format(o2)},
                   {"orbit", orbit_to_json(orbit)}};
  ev["witness_depth"] = orbit.depth() ? json(*orbit.depth()) : json(nullptr);
  ev["sampled"] = tally.to_json();
  ev["depth_bound"] = 2;
  return witness_ok && bounded;
}

bool prop_6_2(const ExperimentContext& ctx, json& ev) {
  const auto moduli = ctx.integers("moduli", 2, 1000000);
  const auto count = ctx.integer("tuples", 1, 1000000);
  const auto size_bound = ctx.integer("size_bound", 1, 64);
  bool ok = true;
  json rows = json::array();
  for (const auto r : moduli) {
    const auto f = factor(r);
    const std::int64_t k = f.max_exponent;
    const std::int64_t m = f.radical;
    const GroupPtr g = make_group(GroupDescriptor::wreath(GroupDescriptor::cyclic(r), 0));
    const Word w = commutator(power(Word::generator(1, 2), m), Word::generator(2, 2));
    const Element x = g->parse_element("(s:1;)");
    const Element xa = g->op(x, g->parse_element("(s:0; 0:1)"));
    const std::vector<Element> witness{xa, x};

    // o_0 .. o_{k+1} by direct evaluation.
    std::vector<Element> orbit_elems{xa};
    for (std::int64_t j = 1; j <= k + 1; ++j) {
      orbit_elems.push_back(evaluate(w, *g, std::vector<Element>{orbit_elems.back(), x}));
    }
    bool exact = g->is_identity(orbit_elems[static_cast<std::size_t>(k + 1)]);
    for (std::int64_t j = 1; j <= k; ++j) exact = exact && !g->is_identity(orbit_elems[static_cast<std::size_t>(j)]);
    const auto& ok_elem = orbit_elems[static_cast<std::size_t>(k)].as<WreathElement>();
    const std::int64_t target = pow_mod(m, k - 1, r);
    bool has_value = false;
    for (const auto& lamp : ok_elem.lamps) has_value = has_value || lamp.as<Residue>().value == target;
    const auto orbit = verbal_orbit(w, *g, xa, tail_of(witness), 64, true);
    const bool witness_ok = exact && has_value && orbit.depth() == std::optional<std::int64_t>(k + 1);

    const auto tally = sampled_depths(w, *g, mix_seed(ctx.seed, static_cast<std::uint64_t>(r)), count, size_bound, 64);
    const bool bounded = tally.all_reached() && tally.max_depth <= k + 1;
    ok = ok && witness_ok && bounded;
    rows.push_back({{"R", r},
                    {"k", k},
                    {"m", m},
                    {"group", g->name()},
                    {"word", render_word(w)},
                    {"witness", tuple_to_json(*g, witness)},
                    {"w_k", g->format(orbit_elems[static_cast<std::size_t>(k)])},
                    {"lamp_value_expected", target},
                    {"lamp_value_observed", has_value},
                    {"witness_depth", orbit.depth() ? json(*orbit.depth()) : json(nullptr)},
                    {"witness_ok", witness_ok},
                    {"sampled", tally.to_json()},
                    {"depth_bound", k + 1}});
  }
  ev["moduli"] = rows;
  return ok;
}

bool rm_6(const ExperimentContext& ctx, json& ev) {
  const auto budget = ctx.integer("budget", 2, 10000);
  struct Case {
    const char* group;
    const char* word;
    std::vector<const char*> tail;
    Membership membership;
    std::int64_t expected_period;  // 0: N is never reached
  };
  // Expected periods come from the base recurrence b_l = r*b_{l-1} + c.
  const std::vector<Case> cases{
      {"wreath(cyclic(2),cyclic(3))", "x1 x2", {"(s:1;)"}, Membership::kLampSubgroup, 3},
      {"wreath(cyclic(2),int)", "x1^-1 x2", {"(s:1;)"}, Membership::kLampSubgroup, 2},
      {"wreath(cyclic(3),int)", "x1 x2", {"(s:0; 0:1)"}, Membership::kLampSubgroup, 1},
      {"wreath(cyclic(2),cyclic(6))", "x1^-1 x2^2", {"(s:1;)"}, Membership::kLampSubgroup, 2},
      {"wreath(cyclic(2),cyclic(4))", "x1^2 x2", {"(s:1;)"}, Membership::kLampSubgroup, 0},
      {"wreath(int,int)", "x1 x2", {"(s:1;)"}, Membership::kLampSubgroup, 0},
      {"sym(4)", "x1 x2", {"(1 2)"}, Membership::kEvenPermutation, 2},
      {"sym(4)", "x1 x2", {"(1 2 3)"}, Membership::kEvenPermutation, 1},
      {"infunitri", "x1^-1 x2", {"(t:1;)"}, Membership::kShiftZero, 2},
  };
  bool ok = true;
  json rows = json::array();
  for (const auto& c : cases) {
    const GroupPtr g = make_group(c.group);
    std::vector<Element> tail;
    for (const char* t : c.tail) tail.push_back(g->parse_element(t));
    const Word w = parse_word(c.word, static_cast<int>(c.tail.size()) + 1);
    const auto rt = return_times(w, g, tail, c.membership, budget);
    const bool match = rt.arithmetic && (c.expected_period == 0 ? rt.levels.empty()
                                                                  : rt.period == std::optional(c.expected_period));
    ok = ok && match;
    std::vector<std::int64_t> head(rt.levels.begin(),
                                   rt.levels.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(rt.levels.size(), 8)));
    rows.push_back({{"group", g->name()},
                    {"word", render_word(w)},
                    {"tail", tuple_to_json(*g, tail)},
                    {"subgroup", to_string(c.membership)},
                    {"levels_head", head},
                    {"level_count", rt.levels.size()},
                    {"arithmetic", rt.arithmetic},
                    {"period", rt.period ? json(*rt.period) : json(nullptr)},
                    {"expected_period", c.expected_period == 0 ? json(nullptr) : json(c.expected_period)},
                    {"match", match}});
  }
  ev["cases"] = rows;
  return ok;
}

bool ex_7_1(const ExperimentContext& ctx, json& ev) {
  const auto groups = ctx.strings("groups");
  const Word w = named_word("w0");
  SCheckOptions opt;
  opt.workers = ctx.workers;
  bool ok = true;
  json rows = json::array();
  for (const auto& text : groups) {
    const GroupPtr g = finite_group_param(text);
    const FiniteGroup fg(g);
    const int dl = derived_length(fg);
    const auto r = check_s_identity(w, g, {}, opt);
    const bool agree = dl < 0 ? r.verdict.status == Status::kFails
                              : r.verdict.status == Status::kHolds && r.trace.level == dl;
    ok = ok && agree;
    rows.push_back({{"group", g->name()},
                    {"derived_length", dl},
                    {"status", to_string(r.verdict.status)},
                    {"trace", trace_to_json(r.trace)},
                    {"agrees", agree}});
  }
  ev["word"] = render_word(w);
  ev["groups"] = rows;
  return ok;
}

bool ex_7_2(const ExperimentContext& ctx, json& ev) {
  const auto levels = ctx.integer("levels", 1, 12);
  const GroupPtr g = make_group(GroupDescriptor::integers());
  const Element one = g->parse_element("1");
  SCheckOptions opt;
  opt.max_levels = levels;
  opt.workers = ctx.workers;
  bool ok = true;
  json rows = json::array();
  for (const char* text : {"x1 x2", "x1^2", "x1 x2 x3", "x1^3 x2^-1", "[x1,x2]"}) {
    const Word w = parse_word(text);
    std::int64_t m = 0;
    for (int i = 1; i <= w.arity(); ++i) m += exponent_sum(w, i);
    const auto r = check_s_identity(w, g, {one}, opt);

    // Singleton doubling: V_N = { m^N }.
    bool doubling = true;
    json values = json::array();
    Element v = one;
    std::int64_t expect = 1;
    for (std::int64_t n = 1; n <= levels; ++n) {
      v = evaluate(w, *g, std::vector<Element>(static_cast<std::size_t>(w.arity()), v));
      expect *= m;
      doubling = doubling && v.as<IntVector>().v[0] == expect;
      values.push_back(v.as<IntVector>().v[0]);
    }
    // The same values through the symbolic iterate w_{*N}.
    bool symbolic = true;
    for (int n = 1; n <= 3; ++n) {
      const Word it = s_iterate(w, n);
      const Element s = evaluate(it, *g, std::vector<Element>(static_cast<std::size_t>(it.arity()), one));
      std::int64_t mn = 1;
      for (int i = 0; i < n; ++i) mn *= m;
      symbolic = symbolic && s.as<IntVector>().v[0] == mn;
    }
    const Status expected = m != 0 ? Status::kFails : Status::kHolds;
    const bool row_ok = r.verdict.status == expected && doubling && symbolic;
    ok = ok && row_ok;
    rows.push_back({{"word", render_word(w)},
                    {"exponent_sum", m},
                    {"status", to_string(r.verdict.status)},
                    {"certificate", r.verdict.certificate},
                    {"singleton_values", values},
                    {"doubling", doubling},
                    {"symbolic_iterate_agrees", symbolic},
                    {"trace", trace_to_json(r.trace)}});
  }
  ev["group"] = g->name();
  ev["initial_set"] = json::array({"1"});
  ev["words"] = rows;
  return ok;
}

bool lem_7_2(const ExperimentContext& ctx, json& ev) {
  const auto k = ctx.integer("base", 2, 5);
  const GroupPtr g = make_group(GroupDescriptor::wreath(GroupDescriptor::cyclic(2), k));
  const GroupPtr q = make_group(base_projection_target(g->descriptor()));
  const Word w = named_word("w0");
  std::vector<Element> lamps;
  for (const auto& x : g->enumerate()) {
    if (is_member(*g, Membership::kLampSubgroup, x)) lamps.push_back(x);
  }
  SCheckOptions opt;
  opt.workers = ctx.workers;
  const auto rn = check_s_identity(w, g, lamps, opt);
  const auto rq = check_s_identity(w, q, {}, opt);
  const auto rg = check_s_identity(w, g, {}, opt);
  const bool holds = rn.verdict.status == Status::kHolds && rq.verdict.status == Status::kHolds &&
                     rg.verdict.status == Status::kHolds;
  const bool bound = holds && rg.trace.level <= rn.trace.level + rq.trace.level;
  ev["word"] = render_word(w);
  ev["group"] = {{"name", g->name()}, {"status", to_string(rg.verdict.status)}, {"trace", trace_to_json(rg.trace)}};
  ev["normal_subgroup"] = {{"name", "lamp subgroup"},
                           {"order", lamps.size()},
                           {"status", to_string(rn.verdict.status)},
                           {"trace", trace_to_json(rn.trace)}};
  ev["quotient"] = {{"name", q->name()}, {"status", to_string(rq.verdict.status)}, {"trace", trace_to_json(rq.trace)}};
  ev["level_bound"] = bound;
  return bound;
}

bool grig_torsion(const ExperimentContext& ctx, json& ev) {
  const auto count = ctx.integer("words", 1, 100000);
  const auto max_length = ctx.integer("max_length", 0, 1000);
  const auto budget = ctx.integer("budget", 1, 100000);
  const GroupPtr g = make_group(GroupDescriptor::grigorchuk());
  const Word w = parse_word("x1^2");
  DepthTally tally;
  for (std::int64_t i = 0; i < count; ++i) {
    Rng rng(mix_seed(ctx.seed, static_cast<std::uint64_t>(i)));
    const Element x = g->random_element(rng, max_length);
    tally.add(*g, {x}, verbal_orbit(w, *g, x, {}, budget));
  }
  std::string ab8;
  for (int i = 0; i < 8; ++i) ab8 += "ab";
  const bool ab16_trivial = grigorchuk_is_trivial(ab8 + ab8);
  const bool ab8_trivial = grigorchuk_is_trivial(ab8);
  const auto ab = verbal_orbit(w, *g, g->parse_element("ab"), {}, budget, true);
  const bool ok = tally.all_reached() && tally.max_depth >= 4 && ab16_trivial && !ab8_trivial &&
                  ab.depth() == std::optional<std::int64_t>(4);
  ev["group"] = g->name();
  ev["word"] = render_word(w);
  ev["orbits"] = tally.to_json();
  ev["ab"] = {{"power16_trivial", ab16_trivial}, {"power8_trivial", ab8_trivial}, {"orbit", orbit_to_json(ab)}};
  return ok;
}

bool thm_8_1(const ExperimentContext& ctx, json& ev) {
  const auto moduli = ctx.integers("moduli", 2, 1000);
  const auto random_words = ctx.integer("random_words", 0, 1000);
  const auto samples = ctx.integer("samples", 1, 100000);
  const auto size_bound = ctx.integer("size_bound", 1, 16);
  const auto budget = ctx.integer("budget", 4, 100000);

  std::vector<Word> corpus{named_word("w0"),        named_word("wbar"),           named_word("w_BWW"),
                           named_word("engel", {{"k", 2}}), parse_word("[x1,[x1,x2]]"),
                           parse_word("[x1^2,x2]"), parse_word("[x1^6,x2]"),      parse_word("[x1^12,x2]"),
                           parse_word("[[x1,x2],[x3,x4]]")};
  for (std::int64_t i = 0; i < random_words; ++i) {
    Rng rng(mix_seed(ctx.seed, static_cast<std::uint64_t>(i)));
    // Zero exponent sums keep the base shift of the orbit bounded; with
    // x1-sum r the lamp support grows like r^d.
    if (i % 2 == 0) {
      corpus.push_back(zero_sum(structured_word(rng)));
    } else {
      corpus.push_back(commutator(random_word(rng, 3, 3, 2), random_word(rng, 3, 3, 2)));
    }
  }

  struct Target {
    GroupPtr group;
    std::int64_t bound;
  };
  std::vector<Target> targets;
  for (const auto r : moduli) {
    targets.push_back({make_group(GroupDescriptor::wreath(GroupDescriptor::cyclic(r), 0)), factor(r).max_exponent + 1});
  }
  targets.push_back({make_group(GroupDescriptor::wreath(GroupDescriptor::integers(), 0)), 2});

  bool ok = true;
  std::int64_t held_total = 0;
  json groups = json::array();
  for (const auto& t : targets) {
    json rows = json::array();
    std::int64_t held = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const Word& w = corpus[k];
      const auto tally = sampled_depths(w, *t.group, mix_seed(ctx.seed, 1000 + k), samples, size_bound, budget);
      if (!tally.all_reached()) continue;
      ++held;
      const bool within = tally.max_depth <= t.bound;
      ok = ok && within;
      rows.push_back({{"word", render_word(w)}, {"max_depth", tally.max_depth}, {"within_bound", within}});
    }
    held_total += held;
    groups.push_back({{"group", t.group->name()},
                      {"depth_bound", t.bound},
                      {"corpus_size", corpus.size()},
                      {"held_on_samples", held},
                      {"held_words", rows}});
  }
  ev["kind"] = "sampled evidence, not a proof";
  ev["groups"] = groups;
  return ok && held_total > 0;
}

}  // namespace

const std::vector<ExperimentEntry>& experiment_entries() {
  static const std::vector<ExperimentEntry> entries{
      {"ex-2.2-wreath-nilpotent", "[x1,x2]^2 holds on wreath(unitri(3,2),cyclic(p)), exhaustive", {{"p", 2}}, ex_2_2},
      {"ex-2.6-symmetric-product",
       "conjugate-power words hold on sym(n); their product has a fixed point",
       {{"n", 6}, {"samples", 500}, {"max_attempts", 20000}},
       ex_2_6},
      {"rm-2.5-solvability-words",
       "solvability words agree with the derived series",
       {{"groups", {"cyclic(7)", "sym(3)", "sym(4)", "alt(4)", "unitri(3,2)", "alt(5)"}},
        {"words", {"w_BW", "w_BWW", "w_BGGKPP"}}},
       rm_2_5},
      {"ex-3.4-abelian-depth",
       "zero exponent-sum words have depth 1 on zd(d); x1 x2 does not reach e",
       {{"d", 2}, {"words", 200}, {"max_syllables", 8}, {"tuples_per_word", 5}},
       ex_3_4},
      {"ex-4.1-fractal-holds",
       "[x1,[x2,x3]] reaches e on sampled infunitri tuples",
       {{"tuples", 200}, {"size_bound", 3}, {"budget", 10000}},
       ex_4_1},
      {"ex-4.2-conjugate-fails", "x4 [x1,[x2,x3]] x4^-1 orbit stays a single elementary matrix", {{"depth", 20}}, ex_4_2},
      {"lem-4.3-4.4-structure",
       "u is a homomorphism on the lamp subgroup and commutes with conjugation",
       {{"moduli", {2, 3, 4}}, {"trials", 500}},
       lem_4_3_4_4},
      {"lem-4.5-extension-bound",
       "s(w,G) <= (s(w,G/N)+1)(#N+1) on wreath(cyclic(2),cyclic(3))",
       {{"random_words", 60}},
       lem_4_5},
      {"ex-5.2-nilpotent-classify",
       "nilpotent classification against exhaustive and sampled dynamics",
       {{"random_words", 36}, {"samples", 40}, {"budget", 64}},
       ex_5_2},
      {"prop-6.1-zwrz", "depth of [x1,[x1,x2]] on wreath(int,int) is 2", {{"tuples", 1000}, {"size_bound", 8}}, prop_6_1},
      {"prop-6.2-lamplighter",
       "depth of [x1^m,x2] on wreath(cyclic(R),int) is k+1",
       {{"moduli", {2, 3, 4, 8, 9, 12}}, {"tuples", 1000}, {"size_bound", 8}},
       prop_6_2},
      {"rm-6-return-times", "return levels to N form an arithmetic progression", {{"budget", 60}}, rm_6},
      {"ex-7.1-stype-solvable",
       "S-type [x1,x2] holds at level equal to the derived length",
       {{"groups", {"sym(3)", "sym(4)", "unitri(3,2)", "wreath(cyclic(2),cyclic(2))"}}},
       ex_7_1},
      {"ex-7.2-stype-z", "S-type words with nonzero exponent sum fail on int", {{"levels", 6}}, ex_7_2},
      {"lem-7.2-stype-extension",
       "S-type [x1,x2] on wreath(cyclic(2),cyclic(k)) within the sum of factor levels",
       {{"base", 3}},
       lem_7_2},
      {"grig-torsion",
       "x1^2 orbits reach e on random Grigorchuk elements",
       {{"words", 200}, {"max_length", 30}, {"budget", 64}},
       grig_torsion},
      {"thm-8.1-metabelian-evidence",
       "sampled depths on metabelian wreath products stay within the known bounds",
       {{"moduli", {2, 3, 4}}, {"random_words", 20}, {"samples", 60}, {"size_bound", 4}, {"budget", 12}},
       thm_8_1},
  };
  return entries;
}

}  // namespace iterid::detail
