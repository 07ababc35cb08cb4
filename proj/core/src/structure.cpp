#include <stdexcept>

#include "iterid/structure.hpp"

namespace iterid {

Membership parse_membership(std::string_view name) {
  if (name == "lamp-subgroup") return Membership::kLampSubgroup;
  if (name == "shift-zero") return Membership::kShiftZero;
  if (name == "even-permutation") return Membership::kEvenPermutation;
  throw std::invalid_argument("unknown membership predicate '" + std::string(name) + "'");
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::kLampSubgroup:
      return "lamp-subgroup";
    case Membership::kShiftZero:
      return "shift-zero";
    case Membership::kEvenPermutation:
      return "even-permutation";
  }
  return "?";
}

namespace {

void require_membership_fits(const Group& g, Membership m) {
  const GroupKind k = g.descriptor().kind;
  const bool ok = (m == Membership::kLampSubgroup && k == GroupKind::kWreath) ||
                  (m == Membership::kShiftZero && k == GroupKind::kInfUnitriShift) ||
                  (m == Membership::kEvenPermutation && k == GroupKind::kSymmetric);
  if (!ok) throw std::invalid_argument("predicate " + to_string(m) + " does not apply to " + g.name());
}

void require_abelian_lamps(const Group& g) {
  const GroupDescriptor& d = g.descriptor();
  if (d.kind != GroupKind::kWreath) throw std::invalid_argument(g.name() + " is not a wreath product");
  const GroupKind lamp = d.lamp().kind;
  if (lamp != GroupKind::kCyclic && lamp != GroupKind::kFreeAbelian) {
    throw std::invalid_argument("lamp group of " + g.name() + " is not abelian");
  }
}

std::vector<Element> with_first(const Element& x, std::span<const Element> tail) {
  std::vector<Element> t{x};
  t.insert(t.end(), tail.begin(), tail.end());
  return t;
}

}  // namespace

bool is_member(const Group& g, Membership m, const Element& x) {
  require_membership_fits(g, m);
  switch (m) {
    case Membership::kLampSubgroup:
      return x.as<WreathElement>().base == 0;
    case Membership::kShiftZero:
      return x.as<ShiftMatrix>().shift == 0;
    case Membership::kEvenPermutation: {
      const auto& img = x.as<Permutation>().image;
      std::vector<bool> seen(img.size(), false);
      std::size_t parity = 0;
      for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t j = i, len = 0; !seen[j]; j = img[j]) {
          seen[j] = true;
          if (len++ > 0) ++parity;
        }
      }
      return parity % 2 == 0;
    }
  }
  return false;
}

ReturnTimes return_times(const Word& w, const GroupPtr& gp, std::span<const Element> tail, Membership m,
                         std::int64_t budget) {
  const Group& g = *gp;
  require_membership_fits(g, m);
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  if (tail.size() + 1 < static_cast<std::size_t>(w.arity())) {
    throw std::invalid_argument("word has arity " + std::to_string(w.arity()) + " but the tail has " +
                                std::to_string(tail.size()) + " entries");
  }
  ReturnTimes r;
  std::vector<Element> tuple = with_first(g.identity(), tail);
  std::int64_t computed = 0;
  try {
    for (std::int64_t l = 1; l <= budget; ++l) {
      tuple[0] = evaluate(w, g, tuple);
      computed = l;
      if (is_member(g, m, tuple[0])) r.levels.push_back(l);
    }
  } catch (const std::overflow_error&) {
    // Keep the levels computed so far.
  }
  if (!r.levels.empty()) {
    const std::int64_t d = r.levels.front();
    r.period = d;
    std::vector<std::int64_t> expected;
    for (std::int64_t l = d; l <= computed; l += d) expected.push_back(l);
    r.arithmetic = expected == r.levels;
  }
  return r;
}

Element random_lamp_element(const Group& wreath, Rng& rng, std::int64_t size_bound) {
  WreathElement w = wreath.random_element(rng, size_bound).as<WreathElement>();
  w.base = 0;
  return w;
}

bool check_map_homomorphism(const Word& map_word, const GroupPtr& gp, std::span<const Element> tail,
                            std::int64_t trials, std::uint64_t seed, std::int64_t size_bound) {
  const Group& g = *gp;
  require_abelian_lamps(g);
  auto f = [&](const Element& y) { return evaluate(map_word, g, with_first(y, tail)); };
  for (std::int64_t i = 0; i < trials; ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const Element y = random_lamp_element(g, rng, size_bound);
    const Element z = random_lamp_element(g, rng, size_bound);
    if (!g.equal(f(g.op(y, z)), g.op(f(y), f(z)))) return false;
  }
  return true;
}

bool check_u_homomorphism(const Word& w, const GroupPtr& g, std::span<const Element> tail, std::int64_t trials,
                          std::uint64_t seed, std::int64_t size_bound) {
  return check_map_homomorphism(decompose_uv(w).u(), g, tail, trials, seed, size_bound);
}

bool check_u_equivariance(const Word& w, const GroupPtr& gp, std::span<const Element> tail, std::int64_t trials,
                          std::uint64_t seed, std::int64_t size_bound) {
  const Group& g = *gp;
  require_abelian_lamps(g);
  const Word u = decompose_uv(w).u();
  auto f = [&](const Element& y) { return evaluate(u, g, with_first(y, tail)); };
  for (std::int64_t i = 0; i < trials; ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const Element x = g.random_element(rng, size_bound);
    const Element y = random_lamp_element(g, rng, size_bound);
    const Element x_inv = g.inv(x);
    const Element lhs = f(g.op(g.op(x, y), x_inv));
    const Element rhs = g.op(g.op(x, f(y)), x_inv);
    if (!g.equal(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace iterid
