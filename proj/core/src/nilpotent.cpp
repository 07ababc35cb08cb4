#include <numeric>
#include <stdexcept>

#include "iterid/structure.hpp"

namespace iterid {

namespace {

bool has_infinite_order_element(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupKind::kFreeAbelian:
      return true;
    case GroupKind::kUnitriangular:
      return d.modulus == 0 && d.size >= 2;
    case GroupKind::kProduct:
      for (const auto& c : d.children) {
        if (has_infinite_order_element(c)) return true;
      }
      return false;
    default:
      return false;
  }
}

// Product of the distinct primes dividing n. Factors up to 10^6 are found by
// trial division; a larger cofactor is taken as prime.
std::int64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t p = 2; p * p <= n && p <= 1'000'000; ++p) {
    if (n % p != 0) continue;
    r *= p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) r *= n;
  return static_cast<std::int64_t>(r);
}

// Every prime dividing n divides r (equivalently rad(n) | r).
bool primes_divide(std::uint64_t n, std::int64_t r) {
  if (r == 0) return true;
  const auto ar = static_cast<std::uint64_t>(r < 0 ? -r : r);
  while (n > 1) {
    const std::uint64_t g = std::gcd(n, ar);
    if (g == 1) return false;
    while (n % g == 0) n /= g;
  }
  return true;
}

bool exponent_sums_vanish(const Word& v, std::int64_t modulus) {
  for (int i = 1; i <= v.arity(); ++i) {
    const std::int64_t s = exponent_sum(v, i);
    if (modulus == 0 ? s != 0 : s % modulus != 0) return false;
  }
  return true;
}

std::vector<int> used_variables(const Word& v) {
  std::vector<int> vars;
  for (int i = 1; i <= v.arity(); ++i) {
    if (v.contains_variable(i)) vars.push_back(i);
  }
  return vars;
}

bool is_law_by_enumeration(const Word& v, const Group& g) {
  const std::vector<Element> all = g.enumerate();
  const std::vector<int> vars = used_variables(v);
  std::vector<Element> tuple(static_cast<std::size_t>(v.arity()), g.identity());
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < vars.size(); ++k) tuple[static_cast<std::size_t>(vars[k] - 1)] = all[idx[k]];
    if (!g.is_identity(evaluate(v, g, tuple))) return false;
    std::size_t k = vars.size();
    while (true) {
      if (k == 0) return true;
      --k;
      if (++idx[k] < all.size()) break;
      idx[k] = 0;
    }
  }
}

bool is_law_by_sampling(const Word& v, const Group& g, std::uint64_t seed) {
  // Generator tuples first, then seeded random tuples.
  std::vector<Element> gens = g.generators();
  gens.push_back(g.identity());
  const std::vector<int> vars = used_variables(v);
  std::vector<Element> tuple(static_cast<std::size_t>(v.arity()), g.identity());
  std::vector<std::size_t> idx(vars.size(), 0);
  std::int64_t visited = 0;
  while (visited < 20'000) {
    for (std::size_t k = 0; k < vars.size(); ++k) tuple[static_cast<std::size_t>(vars[k] - 1)] = gens[idx[k]];
    if (!g.is_identity(evaluate(v, g, tuple))) return false;
    ++visited;
    std::size_t k = vars.size();
    bool done = false;
    while (true) {
      if (k == 0) {
        done = true;
        break;
      }
      --k;
      if (++idx[k] < gens.size()) break;
      idx[k] = 0;
    }
    if (done) break;
  }
  for (std::int64_t i = 0; i < 200; ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    for (int var : vars) tuple[static_cast<std::size_t>(var - 1)] = g.random_element(rng, 4);
    if (!g.is_identity(evaluate(v, g, tuple))) return false;
  }
  return true;
}

bool is_law(const Word& v, const GroupDescriptor& d, std::uint64_t seed) {
  if (v.is_identity()) return true;
  switch (d.kind) {
    case GroupKind::kCyclic:
      return exponent_sums_vanish(v, d.size);
    case GroupKind::kFreeAbelian:
      return exponent_sums_vanish(v, 0);
    case GroupKind::kProduct:
      for (const auto& c : d.children) {
        if (!is_law(v, c, seed)) return false;
      }
      return true;
    default:
      break;
  }
  const GroupPtr g = make_group(d);
  if (d.is_finite()) {
    std::uint64_t combos = 1;
    bool small = true;
    for (std::size_t k = 0; k < used_variables(v).size(); ++k) {
      if (combos > 20'000'000 / d.order()) {
        small = false;
        break;
      }
      combos *= d.order();
    }
    if (small) return is_law_by_enumeration(v, *g);
  }
  return is_law_by_sampling(v, *g, seed);
}

}  // namespace

bool is_declared_nilpotent(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupKind::kCyclic:
    case GroupKind::kFreeAbelian:
    case GroupKind::kUnitriangular:
      return true;
    case GroupKind::kProduct:
      for (const auto& c : d.children) {
        if (!is_declared_nilpotent(c)) return false;
      }
      return true;
    default:
      return false;
  }
}

NilpotentClassification classify_nilpotent(const Word& w, const GroupPtr& g, std::uint64_t seed) {
  const GroupDescriptor& d = g->descriptor();
  if (!is_declared_nilpotent(d)) {
    throw std::invalid_argument(g->name() + " is not in the nilpotent families (cyclic, zd, unitri, products)");
  }
  const NilpotentDecomposition dec = decompose_nilpotent(w);
  NilpotentClassification c;
  c.r = dec.r;
  c.tail = dec.tail;
  c.tail_is_identity = is_law(dec.tail, d, seed);
  if (has_infinite_order_element(d)) {
    c.m = 0;
    const bool ok = c.r == 0 && c.tail_is_identity;
    c.status = ok ? Status::kHolds : Status::kFails;
    if (c.r != 0) {
      c.reason = "x1 exponent sum " + std::to_string(c.r) + " is nonzero and the group has elements of infinite order";
    } else if (!c.tail_is_identity) {
      c.reason = "the x1-free tail is not a law of the group";
    } else {
      c.reason = "x1 exponent sum is zero and the tail is a law";
    }
    return c;
  }
  const std::uint64_t order = d.order();
  c.m = radical(order);
  const bool divides = primes_divide(order, c.r);
  c.status = divides && c.tail_is_identity ? Status::kHolds : Status::kFails;
  if (!divides) {
    c.reason = std::to_string(c.m) + " does not divide the x1 exponent sum " + std::to_string(c.r);
  } else if (!c.tail_is_identity) {
    c.reason = "the x1-free tail is not a law of the group";
  } else {
    c.reason = std::to_string(c.m) + " divides the x1 exponent sum and the tail is a law";
  }
  return c;
}

}  // namespace iterid
