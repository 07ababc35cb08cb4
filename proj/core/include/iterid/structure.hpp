#ifndef ITERID_STRUCTURE_HPP
#define ITERID_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iterid/dynamics.hpp"
#include "iterid/group.hpp"
#include "iterid/word.hpp"

namespace iterid {

/// Normal subgroups N for which membership is decidable directly.
enum class Membership {
  kLampSubgroup,     // wreath: base component zero
  kShiftZero,        // infunitri: shift zero
  kEvenPermutation,  // sym(n): alt(n)
};

Membership parse_membership(std::string_view name);
std::string to_string(Membership m);
bool is_member(const Group& g, Membership m, const Element& x);

struct ReturnTimes {
  /// Levels l in 1..budget with w_l(e, tail) in N.
  std::vector<std::int64_t> levels;
  /// Whether levels is exactly the multiples of its minimum up to budget
  /// (trivially true when empty).
  bool arithmetic = true;
  std::optional<std::int64_t> period;
};

/// Throws std::invalid_argument when the predicate does not fit the group.
ReturnTimes return_times(const Word& w, const GroupPtr& g, std::span<const Element> tail, Membership m,
                         std::int64_t budget);

/// Random element of the lamp subgroup of a wreath product.
Element random_lamp_element(const Group& wreath, Rng& rng, std::int64_t size_bound);

/// The map y -> map_word(y, tail) on the lamp subgroup N. Tests
/// f(yz) = f(y) f(z) on `trials` seeded pairs. The group must be a wreath
/// product with abelian lamps (cyclic or int).
bool check_map_homomorphism(const Word& map_word, const GroupPtr& g, std::span<const Element> tail,
                            std::int64_t trials, std::uint64_t seed, std::int64_t size_bound = 4);

/// check_map_homomorphism applied to u, the conjugate-power part of w.
bool check_u_homomorphism(const Word& w, const GroupPtr& g, std::span<const Element> tail, std::int64_t trials,
                          std::uint64_t seed, std::int64_t size_bound = 4);

/// Tests u(g y g^-1, tail) = g u(y, tail) g^-1 for random g in G, y in N.
bool check_u_equivariance(const Word& w, const GroupPtr& g, std::span<const Element> tail, std::int64_t trials,
                          std::uint64_t seed, std::int64_t size_bound = 4);

struct NilpotentClassification {
  Status status = Status::kInconclusive;
  std::string reason;
  /// Exponent sum of x1.
  std::int64_t r = 0;
  /// Radical of the group order in the finite case, 0 when the group has
  /// elements of infinite order.
  std::int64_t m = 0;
  Word tail;
  bool tail_is_identity = false;
};

/// True for cyclic, zd, unitri and products of these.
bool is_declared_nilpotent(const GroupDescriptor& d);

/// Holds iff (r = 0, or m | r on finite groups) and the tail is a law of G.
/// The tail is decided exactly on cyclic/zd/finite groups and by generator
/// tuples plus seeded samples on unitri over Z. Throws std::invalid_argument
/// outside the declared families.
NilpotentClassification classify_nilpotent(const Word& w, const GroupPtr& g, std::uint64_t seed = 0);

/// Thrown when a word-based verdict contradicts its structural oracle.
class OracleDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolvabilityReport {
  /// Word route: false iff some orbit entered a cycle. A sampled run that
  /// finds no cycle leaves this true with an Inconclusive verdict.
  bool solvable = false;
  IdentityVerdict verdict;
  bool oracle_solvable = false;
  int derived_length = -1;
};

inline constexpr std::uint64_t kExhaustiveSolvabilityLimit = 20'000'000;

/// E-type check of a named solvability word (w_BW, w_BWW or w_BGGKPP),
/// exhaustive when |G|^n <= kExhaustiveSolvabilityLimit and sampled
/// otherwise, compared with the derived series. Throws OracleDisagreement on
/// a mismatch.
SolvabilityReport solvability_by_word(const GroupPtr& g, std::string_view word_name, const CheckOptions& sampled = {});

}  // namespace iterid

#endif  // ITERID_STRUCTURE_HPP
