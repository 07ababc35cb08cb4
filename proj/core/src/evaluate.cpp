#include <sstream>
#include <stdexcept>

#include "iterid/dynamics.hpp"

namespace iterid {

Element evaluate(const Word& w, const Group& g, std::span<const Element> tuple) {
  if (tuple.size() < static_cast<std::size_t>(w.arity())) {
    throw std::invalid_argument("word has arity " + std::to_string(w.arity()) + " but the tuple has " +
                                std::to_string(tuple.size()) + " entries");
  }
  Element acc = g.identity();
  for (const auto& s : w.syllables()) {
    const Element& x = tuple[static_cast<std::size_t>(s.var - 1)];
    acc = g.op(acc, s.exp == 1 ? x : s.exp == -1 ? g.inv(x) : g.pow(x, s.exp));
  }
  return acc;
}

std::optional<std::int64_t> OrbitReport::depth() const {
  if (const auto* r = std::get_if<ReachesIdentity>(&outcome)) return r->depth;
  return std::nullopt;
}

std::string OrbitReport::describe() const {
  std::ostringstream os;
  if (const auto* r = std::get_if<ReachesIdentity>(&outcome)) {
    os << "reaches identity at depth " << r->depth;
  } else if (const auto* c = std::get_if<EntersCycle>(&outcome)) {
    os << "enters a cycle (preperiod " << c->preperiod << ", period " << c->period << ")";
  } else {
    const auto& b = std::get<BudgetExhausted>(outcome);
    os << "budget of " << b.budget << " steps exhausted";
    if (b.overflow) os << " (integer overflow)";
  }
  return os.str();
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kHolds:
      return "holds";
    case Status::kFails:
      return "fails";
    case Status::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

std::int64_t default_orbit_budget(const Group& g) {
  if (!g.is_finite()) return kDefaultInfiniteBudget;
  try {
    const std::uint64_t n = g.order();
    return n > static_cast<std::uint64_t>(INT64_MAX) ? INT64_MAX : static_cast<std::int64_t>(n);
  } catch (const std::overflow_error&) {
    return INT64_MAX;
  }
}

std::vector<Element> sample_tuple(const Group& g, int arity, std::uint64_t seed, std::int64_t index,
                                  std::int64_t size_bound) {
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(index)));
  const std::vector<Element> gens = g.generators();
  const int strategy = static_cast<int>(index % 3);
  std::vector<Element> tuple;
  tuple.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    if (gens.empty() || strategy == 2) {
      tuple.push_back(g.random_element(rng, size_bound));
    } else if (strategy == 0) {
      const auto k = rng.uniform(0, static_cast<std::int64_t>(gens.size()));
      tuple.push_back(k == static_cast<std::int64_t>(gens.size()) ? g.identity() : gens[static_cast<std::size_t>(k)]);
    } else {
      const std::int64_t len = rng.uniform(1, std::max<std::int64_t>(size_bound, 1));
      Element acc = g.identity();
      for (std::int64_t j = 0; j < len; ++j) {
        const Element& s = gens[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1))];
        acc = g.op(acc, rng.coin() ? s : g.inv(s));
      }
      tuple.push_back(std::move(acc));
    }
  }
  return tuple;
}

}  // namespace iterid
