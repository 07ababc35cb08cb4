// Reference models used to cross-check the library. Each one is a direct,
// unoptimized encoding of the textbook object (permutations as arrays, the
// lamplighter as affine maps over Laurent polynomials, ...), written without
// reusing library arithmetic.
#ifndef ITERID_TESTS_ORACLES_HPP
#define ITERID_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iterid/element.hpp"
#include "iterid/word.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Free group: letters +v / -v, reduced with a stack.

inline std::vector<int> reduce_letters(const std::vector<int>& letters) {
  std::vector<int> out;
  for (int l : letters) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline std::vector<int> letters_of(const iterid::Word& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables()) {
    const int l = s.exp > 0 ? s.var : -s.var;
    for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k) out.push_back(l);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation by repeated multiplication, for any model with mul/inv/one.

template <typename Model>
typename Model::Elem eval_word(const Model& m, const iterid::Word& w, const std::vector<typename Model::Elem>& args) {
  auto acc = m.one();
  for (const auto& s : w.syllables()) {
    const auto& x = args.at(static_cast<std::size_t>(s.var - 1));
    const auto step = s.exp > 0 ? x : m.inv(x);
    for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k) acc = m.mul(acc, step);
  }
  return acc;
}

// Minimal d >= 1 with o_d = e, or -1 if the orbit revisits a value first.
template <typename Model>
int orbit_depth(const Model& m, const iterid::Word& w, std::vector<typename Model::Elem> args, int budget) {
  std::set<typename Model::Elem> seen{args[0]};
  for (int d = 1; d <= budget; ++d) {
    args[0] = eval_word(m, w, args);
    if (args[0] == m.one()) return d;
    if (!seen.insert(args[0]).second) return -1;
  }
  return -2;
}

// ---------------------------------------------------------------------------
// Permutations of {0..n-1}; i^(gh) = (i^g)^h.

struct Perms {
  using Elem = std::vector<int>;
  int n;
  Elem one() const {
    Elem e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i;
    return e;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
    return c;
  }
  Elem inv(const Elem& a) const {
    Elem c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return c;
  }
  // "(1 2 3)(4 5)", 1-based.
  Elem parse(const std::string& s) const {
    Elem p = one();
    std::vector<int> cycle;
    int num = -1;
    for (char ch : s) {
      if (ch >= '0' && ch <= '9') {
        num = (num < 0 ? 0 : num * 10) + (ch - '0');
        continue;
      }
      if (num >= 0) cycle.push_back(num - 1);
      num = -1;
      if (ch == ')') {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          p[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        }
        cycle.clear();
      }
    }
    return p;
  }
  std::vector<Elem> all() const {
    std::vector<Elem> out;
    Elem p = one();
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  static bool even(const Elem& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
    return inversions % 2 == 0;
  }
};

// Closure-based derived series on a list of elements of any model.
template <typename Model>
std::vector<typename Model::Elem> subgroup_closure(const Model& m, std::vector<typename Model::Elem> gens) {
  std::set<typename Model::Elem> seen{m.one()};
  std::vector<typename Model::Elem> out{m.one()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      auto h = m.mul(out[i], g);
      if (seen.insert(h).second) out.push_back(h);
    }
  }
  return out;
}

template <typename Model>
std::vector<std::size_t> derived_series_sizes(const Model& m, const std::vector<typename Model::Elem>& group) {
  std::vector<std::size_t> sizes{group.size()};
  auto cur = group;
  while (true) {
    std::set<typename Model::Elem> comms;
    for (const auto& a : cur)
      for (const auto& b : cur) comms.insert(m.mul(m.mul(m.inv(a), m.inv(b)), m.mul(a, b)));
    auto next = subgroup_closure(m, std::vector<typename Model::Elem>(comms.begin(), comms.end()));
    if (next.size() == cur.size()) break;
    sizes.push_back(next.size());
    cur = next;
  }
  return sizes;
}

// ---------------------------------------------------------------------------
// Upper unitriangular 3x3 over Z/p as full matrices.

struct Unitri3 {
  using Elem = std::vector<std::int64_t>;  // 9 entries row-major
  std::int64_t p;
  Elem one() const { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c(9, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < 3; ++k) s += a[static_cast<std::size_t>(i * 3 + k)] * b[static_cast<std::size_t>(k * 3 + j)];
        c[static_cast<std::size_t>(i * 3 + j)] = ((s % p) + p) % p;
      }
    return c;
  }
  Elem inv(const Elem& a) const {
    // [[1,x,z],[0,1,y],[0,0,1]]^-1 = [[1,-x,xy-z],[0,1,-y],[0,0,1]]
    const std::int64_t x = a[1], z = a[2], y = a[5];
    auto md = [&](std::int64_t v) { return ((v % p) + p) % p; };
    return {1, md(-x), md(x * y - z), 0, 1, md(-y), 0, 0, 1};
  }
  Elem make(std::int64_t x, std::int64_t y, std::int64_t z) const { return {1, x, z, 0, 1, y, 0, 0, 1}; }
  std::vector<Elem> all() const {
    std::vector<Elem> out;
    for (std::int64_t x = 0; x < p; ++x)
      for (std::int64_t z = 0; z < p; ++z)
        for (std::int64_t y = 0; y < p; ++y) out.push_back(make(x, y, z));
    return out;
  }
};

// ---------------------------------------------------------------------------
// Lamplighter L wr Z (or wr Z/k) as affine maps [[X^t, F], [0, 1]] with F a
// Laurent polynomial over Z (modulus 0) or Z/R.

struct Laurent {
  struct Elem {
    std::int64_t t = 0;
    std::map<std::int64_t, std::int64_t> f;
    bool operator==(const Elem&) const = default;
    bool operator<(const Elem& o) const { return std::tie(t, f) < std::tie(o.t, o.f); }
  };
  std::int64_t modulus = 0;  // lamp ring
  std::int64_t base = 0;     // 0: base Z, else base Z/base

  std::int64_t norm(std::int64_t v) const { return modulus == 0 ? v : ((v % modulus) + modulus) % modulus; }
  std::int64_t pos(std::int64_t p) const { return base == 0 ? p : ((p % base) + base) % base; }
  Elem one() const { return {}; }
  Elem make(std::int64_t t, std::map<std::int64_t, std::int64_t> f) const {
    Elem e{pos(t), {}};
    for (const auto& [p, v] : f) add(e.f, pos(p), v);
    return e;
  }
  void add(std::map<std::int64_t, std::int64_t>& f, std::int64_t p, std::int64_t v) const {
    const std::int64_t s = norm(f[p] + v);
    if (s == 0) {
      f.erase(p);
    } else {
      f[p] = s;
    }
  }
  // [[X^a, F],[0,1]] [[X^b, G],[0,1]] = [[X^(a+b), F + X^a G],[0,1]]
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c{pos(a.t + b.t), a.f};
    for (const auto& [p, v] : b.f) add(c.f, pos(p + a.t), v);
    return c;
  }
  Elem inv(const Elem& a) const {
    Elem c{pos(-a.t), {}};
    for (const auto& [p, v] : a.f) add(c.f, pos(p - a.t), -v);
    return c;
  }
};

inline Laurent::Elem from_wreath(const Laurent& m, const iterid::Element& e) {
  const auto& w = e.as<iterid::WreathElement>();
  std::map<std::int64_t, std::int64_t> f;
  for (std::size_t i = 0; i < w.positions.size(); ++i) {
    const auto& lamp = w.lamps[i];
    const std::int64_t v = lamp.holds<iterid::Residue>() ? lamp.as<iterid::Residue>().value
                                                         : lamp.as<iterid::IntVector>().v.at(0);
    f[w.positions[i]] = v;
  }
  return m.make(w.base, f);
}

// ---------------------------------------------------------------------------
// Z x Z unitriangular matrices with a shift, as operators P^t M on finitely
// supported column vectors, P e_k = e_{k+1}. Products are formed by applying
// the operators to basis vectors.

struct ShiftOperators {
  using Vec = std::map<std::int64_t, std::int64_t>;
  struct Elem {
    std::int64_t t = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> m;  // strictly upper part
    bool operator==(const Elem&) const = default;
    bool operator<(const Elem& o) const { return std::tie(t, m) < std::tie(o.t, o.m); }
  };
  Elem one() const { return {}; }

  static std::set<std::int64_t> columns(const Elem& g) {
    std::set<std::int64_t> c;
    for (const auto& [ij, v] : g.m) c.insert(ij.second);
    return c;
  }
  static Vec apply(const Elem& g, const Vec& x) {
    Vec y;
    for (const auto& [j, xj] : x) {
      y[j] += xj;
      for (const auto& [ij, v] : g.m) {
        if (ij.second == j) y[ij.first] += v * xj;
      }
    }
    Vec out;
    for (const auto& [i, v] : y) {
      if (v != 0) out[i + g.t] = v;
    }
    return out;
  }
  Elem mul(const Elem& g, const Elem& h) const {
    Elem out{g.t + h.t, {}};
    std::set<std::int64_t> cols = columns(h);
    for (std::int64_t k : columns(g)) cols.insert(k - h.t);
    for (std::int64_t j : cols) {
      const Vec v = apply(g, apply(h, Vec{{j, 1}}));
      for (const auto& [i, c] : v) {
        const std::int64_t row = i - out.t;
        if (row == j) {
          if (c != 1) throw std::logic_error("diagonal lost");
        } else if (c != 0) {
          if (row > j) throw std::logic_error("lower entry");
          out.m[{row, j}] = c;
        }
      }
    }
    return out;
  }
  Elem inv(const Elem& g) const {
    // Back substitution for (I + A)^-1 on the finite index set.
    std::set<std::int64_t> idx;
    for (const auto& [ij, v] : g.m) {
      idx.insert(ij.first);
      idx.insert(ij.second);
    }
    std::vector<std::int64_t> ids(idx.begin(), idx.end());
    const std::size_t n = ids.size();
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0)), b = a;
    for (std::size_t i = 0; i < n; ++i) {
      a[i][i] = 1;
      b[i][i] = 1;
    }
    for (const auto& [ij, v] : g.m) {
      const auto r = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), ij.first) - ids.begin());
      const auto c = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), ij.second) - ids.begin());
      a[r][c] = v;
    }
    // b = a^-1, upper unitriangular: b[i][j] = -sum_{i<k<=j} a[i][k] b[k][j]
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t ii = j; ii-- > 0;) {
        std::int64_t s = 0;
        for (std::size_t k = ii + 1; k <= j; ++k) s += a[ii][k] * b[k][j];
        b[ii][j] = -s;
      }
    }
    Elem out{-g.t, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (b[i][j] != 0) out.m[{ids[i] + g.t, ids[j] + g.t}] = b[i][j];
    return out;
  }
};

inline ShiftOperators::Elem from_shift_matrix(const iterid::Element& e) {
  const auto& s = e.as<iterid::ShiftMatrix>();
  ShiftOperators::Elem out{s.shift, {}};
  for (const auto& en : s.entries) out.m[{en.i, en.j}] = en.v;
  return out;
}

// ---------------------------------------------------------------------------
// Grigorchuk group acting on binary strings; b = (a, c), c = (a, d),
// d = (1, b), a swaps the first letter.

inline void grig_act(char g, std::string& v, std::size_t from) {
  if (from >= v.size()) return;
  switch (g) {
    case 'a':
      v[from] = v[from] == '0' ? '1' : '0';
      return;
    case 'b':
      if (v[from] == '0') {
        grig_act('a', v, from + 1);
      } else {
        grig_act('c', v, from + 1);
      }
      return;
    case 'c':
      if (v[from] == '0') {
        grig_act('a', v, from + 1);
      } else {
        grig_act('d', v, from + 1);
      }
      return;
    case 'd':
      if (v[from] == '1') grig_act('b', v, from + 1);
      return;
    default:
      throw std::invalid_argument("not a Grigorchuk letter");
  }
}

// Whether the word moves some vertex of the given level.
inline bool grig_moves_level(const std::string& word, int level) {
  for (std::uint32_t code = 0; code < (1U << level); ++code) {
    std::string v;
    for (int i = 0; i < level; ++i) v += ((code >> i) & 1U) ? '1' : '0';
    const std::string orig = v;
    for (char g : word) grig_act(g, v, 0);
    if (v != orig) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// A finite model flattened to a multiplication table over element indices;
// index 0 is the identity.

struct Table {
  using Elem = int;
  std::vector<std::vector<int>> mul_table;
  std::vector<int> inverse;

  template <typename Model>
  static Table build(const Model& m, std::vector<typename Model::Elem> elems) {
    auto one = std::find(elems.begin(), elems.end(), m.one());
    if (one == elems.end()) throw std::logic_error("identity missing");
    std::iter_swap(elems.begin(), one);
    std::map<typename Model::Elem, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    Table t;
    t.mul_table.assign(elems.size(), std::vector<int>(elems.size()));
    t.inverse.assign(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) t.mul_table[i][j] = index.at(m.mul(elems[i], elems[j]));
      t.inverse[i] = index.at(m.inv(elems[i]));
    }
    return t;
  }
  int size() const { return static_cast<int>(inverse.size()); }
  int one() const { return 0; }
  int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
};

// Max depth over all tuples, or -1 if some orbit cycles away from e.
inline int exhaustive_depth(const Table& t, const iterid::Word& w) {
  const std::size_t n = static_cast<std::size_t>(w.arity());
  std::vector<int> args(n, 0);
  int worst = 0;
  while (true) {
    const int d = orbit_depth(t, w, args, t.size() + 1);
    if (d < 0) return -1;
    worst = std::max(worst, d);
    std::size_t k = 0;
    while (k < n && ++args[k] == t.size()) args[k++] = 0;
    if (k == n) return worst;
  }
}

}  // namespace oracle

#endif  // ITERID_TESTS_ORACLES_HPP
