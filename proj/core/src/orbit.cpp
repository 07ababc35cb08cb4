#include <stdexcept>
#include <unordered_map>

#include "iterid/dynamics.hpp"

namespace iterid {

namespace {

struct GroupHash {
  const Group* g;
  std::size_t operator()(const Element& e) const { return g->hash(e); }
};

struct GroupEq {
  const Group* g;
  bool operator()(const Element& a, const Element& b) const { return g->equal(a, b); }
};

}  // namespace

OrbitReport verbal_orbit(const Word& w, const Group& g, const Element& x1, std::span<const Element> tail,
                         std::int64_t budget, bool with_trace) {
  if (tail.size() + 1 < static_cast<std::size_t>(w.arity())) {
    throw std::invalid_argument("word has arity " + std::to_string(w.arity()) + " but the tuple has " +
                                std::to_string(tail.size() + 1) + " entries");
  }
  if (budget <= 0) budget = default_orbit_budget(g);
  g.check(x1);
  for (const auto& t : tail) g.check(t);

  std::vector<Element> tuple;
  tuple.reserve(tail.size() + 1);
  tuple.push_back(x1);
  tuple.insert(tuple.end(), tail.begin(), tail.end());

  OrbitReport report;
  std::unordered_map<Element, std::int64_t, GroupHash, GroupEq> seen(16, GroupHash{&g}, GroupEq{&g});
  seen.emplace(x1, 0);
  if (with_trace) report.trace.push_back(g.format(x1));
  try {
    for (std::int64_t d = 1; d <= budget; ++d) {
      Element next = evaluate(w, g, tuple);
      if (with_trace) report.trace.push_back(g.format(next));
      if (g.is_identity(next)) {
        report.outcome = ReachesIdentity{d};
        return report;
      }
      const auto [it, inserted] = seen.emplace(next, d);
      if (!inserted) {
        report.outcome = EntersCycle{it->second, d - it->second};
        return report;
      }
      tuple[0] = std::move(next);
    }
    report.outcome = BudgetExhausted{budget, false};
  } catch (const std::overflow_error&) {
    report.outcome = BudgetExhausted{budget, true};
  }
  return report;
}

}  // namespace iterid
