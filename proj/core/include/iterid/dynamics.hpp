#ifndef ITERID_DYNAMICS_HPP
#define ITERID_DYNAMICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "iterid/element.hpp"
#include "iterid/group.hpp"
#include "iterid/word.hpp"

namespace iterid {

/// Image of w under x_i -> tuple[i-1]. Entries beyond the arity are ignored;
/// a shorter tuple throws std::invalid_argument naming both arities.
Element evaluate(const Word& w, const Group& g, std::span<const Element> tuple);

struct ReachesIdentity {
  std::int64_t depth = 0;
};
struct EntersCycle {
  std::int64_t preperiod = 0;
  std::int64_t period = 0;
};
struct BudgetExhausted {
  std::int64_t budget = 0;
  /// Integer arithmetic overflowed before the budget was used up.
  bool overflow = false;
};

/// Outcome of iterating o_0 = x1, o_d = w(o_{d-1}, x2, ..., xn).
struct OrbitReport {
  std::variant<ReachesIdentity, EntersCycle, BudgetExhausted> outcome;
  /// Formatted o_0, o_1, ... when a trace was requested.
  std::vector<std::string> trace;

  bool reaches_identity() const { return std::holds_alternative<ReachesIdentity>(outcome); }
  bool enters_cycle() const { return std::holds_alternative<EntersCycle>(outcome); }
  bool exhausted() const { return std::holds_alternative<BudgetExhausted>(outcome); }
  std::optional<std::int64_t> depth() const;
  std::string describe() const;
};

inline constexpr std::int64_t kDefaultInfiniteBudget = 10'000;

/// Budget used when the caller passes 0: order(G) on finite groups, 10^4
/// otherwise.
std::int64_t default_orbit_budget(const Group& g);

/// The minimal depth d >= 1 with o_d = e, or a revisit (cycle), or the budget.
/// The identity test runs before the revisit test, so an orbit that returns
/// to e is never reported as a cycle. On finite groups a budget of at least
/// order(G) never runs out.
OrbitReport verbal_orbit(const Word& w, const Group& g, const Element& x1, std::span<const Element> tail,
                         std::int64_t budget = 0, bool with_trace = false);

enum class Status { kHolds, kFails, kInconclusive };
std::string to_string(Status s);

struct Witness {
  std::vector<Element> tuple;
  OrbitReport orbit;
};

struct IdentityVerdict {
  Status status = Status::kInconclusive;
  bool exhaustive = false;
  std::int64_t max_depth_seen = 0;
  std::optional<Witness> witness;
  /// A tuple attaining max_depth_seen (first in canonical order).
  std::vector<Element> argmax_tuple;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_reached = 0;
  std::uint64_t tuples_exhausted = 0;
  /// How the verdict was decided, e.g. "exhaustive", "sampled", "set-cycle".
  std::string certificate;
  std::map<std::int64_t, std::uint64_t> depth_histogram;
};

enum class CheckMode { kExhaustive, kSampled };

struct CheckOptions {
  CheckMode mode = CheckMode::kExhaustive;
  std::uint64_t seed = 0;
  std::int64_t samples = 200;
  std::int64_t size_bound = 8;
  /// Per-orbit step budget; 0 selects default_orbit_budget.
  std::int64_t budget = 0;
  int workers = 1;
};

/// Sampled tuple number `index` for the given seed: index % 3 selects
/// generator tuples, short products of generators, or random elements.
std::vector<Element> sample_tuple(const Group& g, int arity, std::uint64_t seed, std::int64_t index,
                                  std::int64_t size_bound);

/// E-type satisfaction. Exhaustive mode (finite groups only) is decisive and
/// reports the first failing tuple in canonical order. Sampled mode never
/// reports Holds; it reports Fails only for an orbit that enters a cycle.
/// Results do not depend on the number of workers.
IdentityVerdict check_e_identity(const Word& w, const GroupPtr& g, const CheckOptions& options = {});

struct DepthReport {
  Word word;
  GroupDescriptor group;
  /// s(w,G); empty when w is not an iterated identity of G.
  std::optional<std::int64_t> s_value;
  std::vector<Element> argmax_tuple;
  std::optional<Witness> witness;
  IdentityVerdict verdict;
};

/// Exact iterational depth on a finite group.
DepthReport depth_e(const Word& w, const GroupPtr& g, int workers = 1);

struct SetLevel {
  std::uint64_t size = 0;
  std::string digest;
};

enum class SetTerminal { kReachedIdentitySet, kSetCycle, kBudgetExhausted };

struct ValueSetTrace {
  /// levels[k] describes V_k.
  std::vector<SetLevel> levels;
  SetTerminal terminal = SetTerminal::kBudgetExhausted;
  /// First N with V_N = {e}, or the earlier level repeated by a set cycle.
  std::int64_t level = -1;
};

struct SCheckOptions {
  std::int64_t max_levels = 12;
  std::int64_t max_set_size = 100'000;
  /// Cap on |V_k|^n evaluations per level.
  std::int64_t max_evaluations = 50'000'000;
  int workers = 1;
};

struct SIdentityResult {
  IdentityVerdict verdict;
  ValueSetTrace trace;
};

/// Value-set recursion V_{k+1} = { w(v_1..v_n) : v_i in V_k }. An empty
/// `initial` means the whole (finite) group. Holds at the first N >= 1 with
/// V_N = {e}; Fails when a level repeats an earlier one. On zd(d), whose value
/// sets grow without bound, the verdict falls back to the exponent-sum
/// certificate "abelian-linear".
SIdentityResult check_s_identity(const Word& w, const GroupPtr& g, const std::vector<Element>& initial = {},
                                 const SCheckOptions& options = {});

}  // namespace iterid

#endif  // ITERID_DYNAMICS_HPP
