#include "iterid/element.hpp"

#include <algorithm>
#include <functional>

#include "checked.hpp"

namespace iterid {

bool operator==(const WreathElement& a, const WreathElement& b) {
  return a.base == b.base && a.positions == b.positions && a.lamps == b.lamps;
}

bool operator<(const WreathElement& a, const WreathElement& b) {
  if (a.base != b.base) return a.base < b.base;
  if (a.positions != b.positions) return a.positions < b.positions;
  return std::lexicographical_compare(a.lamps.begin(), a.lamps.end(), b.lamps.begin(), b.lamps.end());
}

bool operator==(const ProductElement& a, const ProductElement& b) { return a.parts == b.parts; }

bool operator<(const ProductElement& a, const ProductElement& b) {
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
}

bool operator==(const Element& a, const Element& b) { return a.payload_ == b.payload_; }

bool operator<(const Element& a, const Element& b) {
  if (a.payload_.index() != b.payload_.index()) return a.payload_.index() < b.payload_.index();
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x < std::get<T>(b.payload_);
      },
      a.payload_);
}

namespace {

void mix(std::size_t& h, std::int64_t v) { detail::hash_combine(h, std::hash<std::int64_t>{}(v)); }

struct Hasher {
  std::size_t h;

  void operator()(const Residue& r) { mix(h, r.value); }
  void operator()(const IntVector& v) {
    for (auto x : v.v) mix(h, x);
  }
  void operator()(const Permutation& p) {
    for (auto x : p.image) mix(h, x);
  }
  void operator()(const UnitriMatrix& m) {
    for (auto x : m.entries) mix(h, x);
  }
  void operator()(const WreathElement& w) {
    mix(h, w.base);
    for (std::size_t i = 0; i < w.positions.size(); ++i) {
      mix(h, w.positions[i]);
      detail::hash_combine(h, hash_value(w.lamps[i]));
    }
  }
  void operator()(const ShiftMatrix& s) {
    mix(h, s.shift);
    for (const auto& e : s.entries) {
      mix(h, e.i);
      mix(h, e.j);
      mix(h, e.v);
    }
  }
  void operator()(const GrigorchukWord& g) { detail::hash_combine(h, std::hash<std::string>{}(g.letters)); }
  void operator()(const ProductElement& p) {
    for (const auto& e : p.parts) detail::hash_combine(h, hash_value(e));
  }
};

}  // namespace

std::size_t hash_value(const Element& e) {
  Hasher hasher{e.payload().index()};
  std::visit(hasher, e.payload());
  return hasher.h;
}

}  // namespace iterid
