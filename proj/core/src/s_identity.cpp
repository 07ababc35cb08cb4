#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include "iterid/dynamics.hpp"
#include "parallel.hpp"

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

using ValueSet = std::unordered_set<Element, GroupHash, GroupEq>;

ValueSet make_set(const Group& g) { return ValueSet(16, GroupHash{&g}, GroupEq{&g}); }

SetLevel describe(const Group& g, const std::vector<Element>& elems) {
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (const auto& e : elems) names.push_back(g.format(e));
  std::sort(names.begin(), names.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (const auto& s : names) {
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    h = (h ^ 0x0aU) * 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return SetLevel{elems.size(), buf};
}

bool same_set(const ValueSet& a, const ValueSet& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    if (!b.count(x)) return false;
  }
  return true;
}

// On Z^d, w(v_1..v_n) = sum m_i v_i with m_i the exponent sums of w.
// An empty v0 stands for the whole group.
std::optional<IdentityVerdict> abelian_linear(const Word& w, const Group& g, const std::vector<Element>& v0) {
  if (g.descriptor().kind != GroupKind::kFreeAbelian) return std::nullopt;
  std::int64_t total = 0;
  bool any_nonzero = false;
  for (int i = 1; i <= w.arity(); ++i) {
    const std::int64_t m = exponent_sum(w, i);
    any_nonzero = any_nonzero || m != 0;
    total += m;
  }
  IdentityVerdict v;
  v.exhaustive = true;
  v.certificate = "abelian-linear";
  if (!any_nonzero) {
    v.status = Status::kHolds;
    v.max_depth_seen = 1;
    return v;
  }
  // Two distinct values of one coordinate with m_i != 0 give two distinct
  // results, so |V_k| >= 2 forever; a singleton {a} evolves as (sum m)^k a.
  if (v0.empty() || v0.size() >= 2 || (total != 0 && !g.is_identity(v0.front()))) {
    v.status = Status::kFails;
  } else {
    v.status = Status::kHolds;
    v.max_depth_seen = 1;
  }
  return v;
}

}  // namespace

SIdentityResult check_s_identity(const Word& w, const GroupPtr& gp, const std::vector<Element>& initial,
                                 const SCheckOptions& options) {
  const Group& g = *gp;
  if (initial.empty() && !g.is_finite()) {
    SIdentityResult result;
    if (auto cert = abelian_linear(w, g, {})) {
      result.verdict = *cert;
      return result;
    }
    throw std::domain_error("value-set recursion on " + g.name() + " needs an explicit initial set");
  }
  std::vector<Element> current;
  {
    ValueSet seen = make_set(g);
    const std::vector<Element> source = initial.empty() ? g.enumerate() : initial;
    for (const auto& e : source) {
      g.check(e);
      if (seen.insert(e).second) current.push_back(e);
    }
  }

  SIdentityResult result;
  result.verdict.exhaustive = true;
  result.verdict.certificate = "value-set";
  result.trace.levels.push_back(describe(g, current));
  std::vector<ValueSet> history;
  {
    ValueSet s = make_set(g);
    s.insert(current.begin(), current.end());
    history.push_back(std::move(s));
  }
  const std::vector<Element> v0 = current;
  const int n = w.arity();

  auto finish_inconclusive = [&]() {
    result.trace.terminal = SetTerminal::kBudgetExhausted;
    if (auto cert = abelian_linear(w, g, v0)) {
      result.verdict = *cert;
    } else {
      result.verdict.status = Status::kInconclusive;
      result.verdict.exhaustive = false;
    }
    return result;
  };

  for (std::int64_t level = 1; level <= options.max_levels; ++level) {
    const auto size = static_cast<std::int64_t>(current.size());
    std::int64_t combos = 1;
    for (int i = 0; i < n; ++i) {
      if (combos > options.max_evaluations / std::max<std::int64_t>(size, 1)) return finish_inconclusive();
      combos *= size;
    }
    // Evaluate in blocks on workers, then merge in tuple order.
    const std::int64_t blocks = std::min<std::int64_t>(combos, 64);
    std::vector<std::vector<Element>> partial(static_cast<std::size_t>(blocks));
    bool overflow = false;
    try {
      detail::parallel_for(blocks, options.workers, [&](std::int64_t b) {
        const std::int64_t lo = combos * b / blocks;
        const std::int64_t hi = combos * (b + 1) / blocks;
        ValueSet local = make_set(g);
        std::vector<Element> tuple(static_cast<std::size_t>(n));
        for (std::int64_t c = lo; c < hi; ++c) {
          std::int64_t rest = c;
          for (int i = n - 1; i >= 0; --i) {
            tuple[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(rest % size)];
            rest /= size;
          }
          Element value = evaluate(w, g, tuple);
          if (local.insert(value).second) partial[static_cast<std::size_t>(b)].push_back(std::move(value));
        }
      });
    } catch (const std::overflow_error&) {
      overflow = true;
    }
    if (overflow) return finish_inconclusive();
    std::vector<Element> next;
    ValueSet next_set = make_set(g);
    for (auto& part : partial) {
      for (auto& e : part) {
        if (next_set.insert(e).second) next.push_back(std::move(e));
      }
    }
    result.trace.levels.push_back(describe(g, next));
    result.verdict.tuples_checked += static_cast<std::uint64_t>(combos);
    if (next.size() == 1 && g.is_identity(next.front())) {
      result.trace.terminal = SetTerminal::kReachedIdentitySet;
      result.trace.level = level;
      result.verdict.status = Status::kHolds;
      result.verdict.max_depth_seen = level;
      return result;
    }
    for (std::size_t j = 0; j < history.size(); ++j) {
      if (same_set(history[j], next_set)) {
        result.trace.terminal = SetTerminal::kSetCycle;
        result.trace.level = static_cast<std::int64_t>(j);
        result.verdict.status = Status::kFails;
        result.verdict.certificate = "set-cycle";
        result.verdict.max_depth_seen = level;
        return result;
      }
    }
    if (static_cast<std::int64_t>(next.size()) > options.max_set_size) return finish_inconclusive();
    history.push_back(std::move(next_set));
    current = std::move(next);
  }
  return finish_inconclusive();
}

}  // namespace iterid
