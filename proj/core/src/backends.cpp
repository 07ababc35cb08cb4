#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "backends.hpp"
#include "checked.hpp"
#include "literal.hpp"

namespace iterid::detail {

namespace {

bool is_identity_literal(std::string_view text) { return trim(text) == "e"; }

[[noreturn]] void mismatch(const Group& g, const std::string& what) {
  throw BackendMismatch("element is not in " + g.name() + ": " + what);
}

// ---------------------------------------------------------------- cyclic(m)

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(const GroupDescriptor& d) : Group(d), m_(d.size) {}

  Element identity() const override { return Residue{0}; }
  Element op(const Element& g, const Element& h) const override {
    check(g);
    check(h);
    const std::int64_t a = g.as<Residue>().value;
    const std::int64_t b = h.as<Residue>().value;
    return Residue{a >= m_ - b ? a - (m_ - b) : a + b};
  }
  Element inv(const Element& g) const override {
    check(g);
    const std::int64_t a = g.as<Residue>().value;
    return Residue{a == 0 ? 0 : m_ - a};
  }
  std::vector<Element> enumerate() const override {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (std::int64_t i = 0; i < m_; ++i) out.emplace_back(Residue{i});
    return out;
  }
  Element random_element(Rng& rng, std::int64_t) const override { return Residue{rng.uniform(0, m_ - 1)}; }
  std::vector<Element> generators() const override {
    if (m_ == 1) return {};
    return {Residue{1}};
  }
  Element parse_element(std::string_view text) const override {
    if (is_identity_literal(text)) return identity();
    return Residue{mod(parse_int(text), m_)};
  }
  std::string format(const Element& g) const override {
    check(g);
    const std::int64_t v = g.as<Residue>().value;
    return v == 0 ? "e" : std::to_string(v);
  }
  void check(const Element& g) const override {
    if (!g.holds<Residue>()) mismatch(*this, "expected a residue");
    const std::int64_t v = g.as<Residue>().value;
    if (v < 0 || v >= m_) mismatch(*this, "residue out of range");
  }

 private:
  std::int64_t m_;
};

// ------------------------------------------------------------------ zd(d)

class FreeAbelianGroup final : public Group {
 public:
  explicit FreeAbelianGroup(const GroupDescriptor& d) : Group(d), d_(static_cast<std::size_t>(d.size)) {}

  Element identity() const override { return IntVector{std::vector<std::int64_t>(d_, 0)}; }
  Element op(const Element& g, const Element& h) const override {
    check(g);
    check(h);
    IntVector r = g.as<IntVector>();
    const auto& b = h.as<IntVector>().v;
    for (std::size_t i = 0; i < d_; ++i) r.v[i] = checked_add(r.v[i], b[i]);
    return r;
  }
  Element inv(const Element& g) const override {
    check(g);
    IntVector r = g.as<IntVector>();
    for (auto& x : r.v) x = checked_neg(x);
    return r;
  }
  Element random_element(Rng& rng, std::int64_t bound) const override {
    IntVector r;
    r.v.resize(d_);
    for (auto& x : r.v) x = rng.uniform(-bound, bound);
    return r;
  }
  std::vector<Element> generators() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < d_; ++i) {
      IntVector e{std::vector<std::int64_t>(d_, 0)};
      e.v[i] = 1;
      out.emplace_back(std::move(e));
    }
    return out;
  }
  Element parse_element(std::string_view text) const override {
    if (is_identity_literal(text)) return identity();
    const std::string_view t = trim(text);
    IntVector r;
    if (!t.empty() && t.front() == '[') {
      for (auto part : split_top(unwrap(t, '[', ']'), ',')) r.v.push_back(parse_int(part, offset_in(text, part)));
    } else {
      r.v.push_back(parse_int(t));
    }
    if (r.v.size() != d_) {
      throw ParseError("expected " + std::to_string(d_) + " coordinates, got " + std::to_string(r.v.size()), 0);
    }
    return r;
  }
  std::string format(const Element& g) const override {
    check(g);
    const auto& v = g.as<IntVector>().v;
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) return "e";
    if (d_ == 1) return std::to_string(v[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < d_; ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + "]";
  }
  void check(const Element& g) const override {
    if (!g.holds<IntVector>()) mismatch(*this, "expected an integer vector");
    if (g.as<IntVector>().v.size() != d_) mismatch(*this, "wrong dimension");
  }

 private:
  std::size_t d_;
};

// ------------------------------------------------------- sym(n) and alt(n)

bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.image.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.image.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p.image[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation cycle(std::size_t n, std::vector<std::uint8_t> points) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), std::uint8_t{0});
  for (std::size_t i = 0; i < points.size(); ++i) p.image[points[i]] = points[(i + 1) % points.size()];
  return p;
}

class PermutationGroup final : public Group {
 public:
  explicit PermutationGroup(const GroupDescriptor& d)
      : Group(d), n_(static_cast<std::size_t>(d.size)), alternating_(d.kind == GroupKind::kAlternating) {}

  Element identity() const override { return cycle(n_, {}); }
  Element op(const Element& g, const Element& h) const override {
    check(g);
    check(h);
    const auto& a = g.as<Permutation>().image;
    const auto& b = h.as<Permutation>().image;
    Permutation r;
    r.image.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) r.image[i] = b[a[i]];
    return r;
  }
  Element inv(const Element& g) const override {
    check(g);
    const auto& a = g.as<Permutation>().image;
    Permutation r;
    r.image.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) r.image[a[i]] = static_cast<std::uint8_t>(i);
    return r;
  }
  std::vector<Element> enumerate() const override {
    (void)order();
    Permutation p = identity().as<Permutation>();
    std::vector<Element> out;
    do {
      if (!alternating_ || is_even(p)) out.emplace_back(p);
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    return out;
  }
  Element random_element(Rng& rng, std::int64_t) const override {
    Permutation p = identity().as<Permutation>();
    for (std::size_t i = n_; i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(p.image[i - 1], p.image[j]);
    }
    if (alternating_ && !is_even(p)) std::swap(p.image[0], p.image[1]);
    return p;
  }
  std::vector<Element> generators() const override {
    std::vector<std::uint8_t> all(n_);
    std::iota(all.begin(), all.end(), std::uint8_t{0});
    if (!alternating_) {
      if (n_ < 2) return {};
      if (n_ == 2) return {cycle(n_, {0, 1})};
      return {cycle(n_, {0, 1}), cycle(n_, all)};
    }
    if (n_ < 3) return {};
    if (n_ == 3) return {cycle(n_, {0, 1, 2})};
    if (n_ % 2 == 1) return {cycle(n_, {0, 1, 2}), cycle(n_, all)};
    return {cycle(n_, {0, 1, 2}), cycle(n_, std::vector<std::uint8_t>(all.begin() + 1, all.end()))};
  }
  Element parse_element(std::string_view text) const override {
    const std::string_view t = trim(text);
    if (t == "e") return identity();
    Element result = identity();
    std::size_t pos = 0;
    while (pos < t.size()) {
      if (std::isspace(static_cast<unsigned char>(t[pos]))) {
        ++pos;
        continue;
      }
      if (t[pos] != '(') throw ParseError("expected '(' in cycle notation", offset_in(text, t) + pos);
      const std::size_t close = t.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated cycle", offset_in(text, t) + pos);
      std::vector<std::uint8_t> points;
      std::size_t i = pos + 1;
      while (i < close) {
        if (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < close && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j == i) throw ParseError(std::string("unexpected '") + t[i] + "' in cycle", offset_in(text, t) + i);
        const std::int64_t v = parse_int(t.substr(i, j - i), offset_in(text, t) + i);
        if (v < 1 || v > static_cast<std::int64_t>(n_)) {
          throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(n_), offset_in(text, t) + i);
        }
        const auto pt = static_cast<std::uint8_t>(v - 1);
        if (std::find(points.begin(), points.end(), pt) != points.end()) {
          throw ParseError("repeated point in cycle", offset_in(text, t) + i);
        }
        points.push_back(pt);
        i = j;
      }
      // Raw composition: partial products may be odd even when the whole is even.
      const Permutation c = cycle(n_, points);
      auto image = result.as<Permutation>().image;
      for (auto& x : image) x = c.image[x];
      result = Permutation{std::move(image)};
      pos = close + 1;
    }
    if (alternating_ && !is_even(result.as<Permutation>())) {
      throw std::invalid_argument("odd permutation is not in " + name());
    }
    return result;
  }
  std::string format(const Element& g) const override {
    check(g);
    const auto& a = g.as<Permutation>().image;
    std::string s;
    std::vector<bool> seen(n_, false);
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i] || a[i] == i) continue;
      s += '(';
      for (std::size_t j = i; !seen[j]; j = a[j]) {
        seen[j] = true;
        if (j != i) s += ' ';
        s += std::to_string(j + 1);
      }
      s += ')';
    }
    return s.empty() ? "e" : s;
  }
  void check(const Element& g) const override {
    if (!g.holds<Permutation>()) mismatch(*this, "expected a permutation");
    const auto& a = g.as<Permutation>().image;
    if (a.size() != n_) mismatch(*this, "wrong degree");
    if (alternating_ && !is_even(g.as<Permutation>())) mismatch(*this, "odd permutation");
  }

 private:
  std::size_t n_;
  bool alternating_;
};

// ----------------------------------------------------------- unitri(n, m)

class UnitriangularGroup final : public Group {
 public:
  explicit UnitriangularGroup(const GroupDescriptor& d)
      : Group(d), n_(static_cast<int>(d.size)), m_(d.modulus) {
    offsets_.assign(static_cast<std::size_t>(n_), 0);
    int off = 0;
    for (int i = 0; i < n_; ++i) {
      offsets_[static_cast<std::size_t>(i)] = off - (i + 1);
      off += n_ - 1 - i;
    }
    count_ = static_cast<std::size_t>(off);
  }

  Element identity() const override { return UnitriMatrix{n_, std::vector<std::int64_t>(count_, 0)}; }

  Element op(const Element& g, const Element& h) const override {
    check(g);
    check(h);
    const auto& a = g.as<UnitriMatrix>().entries;
    const auto& b = h.as<UnitriMatrix>().entries;
    UnitriMatrix r{n_, std::vector<std::int64_t>(count_, 0)};
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        std::int64_t acc = add(a[at(i, j)], b[at(i, j)]);
        for (int k = i + 1; k < j; ++k) acc = add(acc, mul(a[at(i, k)], b[at(k, j)]));
        r.entries[at(i, j)] = acc;
      }
    }
    return r;
  }

  Element inv(const Element& g) const override {
    check(g);
    const auto& a = g.as<UnitriMatrix>().entries;
    UnitriMatrix x{n_, std::vector<std::int64_t>(count_, 0)};
    for (int j = 0; j < n_; ++j) {
      for (int i = j - 1; i >= 0; --i) {
        std::int64_t acc = a[at(i, j)];
        for (int k = i + 1; k < j; ++k) acc = add(acc, mul(a[at(i, k)], x.entries[at(k, j)]));
        x.entries[at(i, j)] = neg(acc);
      }
    }
    return x;
  }

  std::vector<Element> enumerate() const override {
    (void)order();
    std::vector<Element> out;
    std::vector<std::size_t> sizes(count_, static_cast<std::size_t>(m_));
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
      UnitriMatrix r{n_, std::vector<std::int64_t>(count_, 0)};
      for (std::size_t k = 0; k < count_; ++k) r.entries[k] = static_cast<std::int64_t>(idx[k]);
      out.emplace_back(std::move(r));
    });
    return out;
  }

  Element random_element(Rng& rng, std::int64_t bound) const override {
    UnitriMatrix r{n_, std::vector<std::int64_t>(count_, 0)};
    for (auto& x : r.entries) x = m_ == 0 ? rng.uniform(-bound, bound) : rng.uniform(0, m_ - 1);
    return r;
  }

  std::vector<Element> generators() const override {
    std::vector<Element> out;
    for (int i = 0; i + 1 < n_; ++i) {
      UnitriMatrix r{n_, std::vector<std::int64_t>(count_, 0)};
      r.entries[at(i, i + 1)] = 1;
      out.emplace_back(std::move(r));
    }
    return out;
  }

  Element parse_element(std::string_view text) const override {
    if (is_identity_literal(text)) return identity();
    const std::string_view body = unwrap(text, '{', '}', offset_in(text, trim(text)));
    UnitriMatrix r{n_, std::vector<std::int64_t>(count_, 0)};
    for (auto part : split_top(body, ',')) {
      const std::size_t where = offset_in(text, part);
      const std::size_t colon = find_top(part, ':');
      if (colon == std::string_view::npos) throw ParseError("expected (i,j):value", where);
      const auto ij = split_top(unwrap(part.substr(0, colon), '(', ')', where), ',');
      if (ij.size() != 2) throw ParseError("expected (i,j)", where);
      const std::int64_t i = parse_int(ij[0], where);
      const std::int64_t j = parse_int(ij[1], where);
      if (i < 1 || j > n_ || i >= j) {
        throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not strictly upper in 1.." +
                             std::to_string(n_),
                         where);
      }
      std::int64_t v = parse_int(part.substr(colon + 1), where + colon + 1);
      if (m_ != 0) v = mod(v, m_);
      r.entries[at(static_cast<int>(i - 1), static_cast<int>(j - 1))] = v;
    }
    return r;
  }

  std::string format(const Element& g) const override {
    check(g);
    const auto& a = g.as<UnitriMatrix>().entries;
    std::string s;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const std::int64_t v = a[at(i, j)];
        if (v == 0) continue;
        if (!s.empty()) s += ", ";
        s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "):" + std::to_string(v);
      }
    }
    return s.empty() ? "e" : "{" + s + "}";
  }

  void check(const Element& g) const override {
    if (!g.holds<UnitriMatrix>()) mismatch(*this, "expected a unitriangular matrix");
    const auto& u = g.as<UnitriMatrix>();
    if (u.n != n_ || u.entries.size() != count_) mismatch(*this, "wrong matrix size");
    if (m_ != 0) {
      for (auto v : u.entries) {
        if (v < 0 || v >= m_) mismatch(*this, "entry out of range");
      }
    }
  }

 private:
  std::size_t at(int i, int j) const { return static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i)] + j); }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (m_ == 0) return checked_add(a, b);
    return (a + b) % m_;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (m_ == 0) return checked_mul(a, b);
    return (a * b) % m_;  // entries are below 2^31
  }
  std::int64_t neg(std::int64_t a) const {
    if (m_ == 0) return checked_neg(a);
    return a == 0 ? 0 : m_ - a;
  }

  int n_;
  std::int64_t m_;
  std::vector<int> offsets_;
  std::size_t count_ = 0;
};

// -------------------------------------------------------- product(G1,...)

class ProductGroup final : public Group {
 public:
  explicit ProductGroup(const GroupDescriptor& d) : Group(d) {
    for (const auto& c : d.children) factors_.push_back(make_group(c));
  }

  Element identity() const override {
    ProductElement p;
    for (const auto& f : factors_) p.parts.push_back(f->identity());
    return p;
  }
  Element op(const Element& g, const Element& h) const override {
    check_shape(g);
    check_shape(h);
    ProductElement p;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      p.parts.push_back(factors_[i]->op(g.as<ProductElement>().parts[i], h.as<ProductElement>().parts[i]));
    }
    return p;
  }
  Element inv(const Element& g) const override {
    check_shape(g);
    ProductElement p;
    for (std::size_t i = 0; i < factors_.size(); ++i) p.parts.push_back(factors_[i]->inv(g.as<ProductElement>().parts[i]));
    return p;
  }
  bool equal(const Element& g, const Element& h) const override {
    check_shape(g);
    check_shape(h);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (!factors_[i]->equal(g.as<ProductElement>().parts[i], h.as<ProductElement>().parts[i])) return false;
    }
    return true;
  }
  std::size_t hash(const Element& g) const override {
    check_shape(g);
    std::size_t h = 0x51ed27;
    for (std::size_t i = 0; i < factors_.size(); ++i) hash_combine(h, factors_[i]->hash(g.as<ProductElement>().parts[i]));
    return h;
  }
  std::vector<Element> enumerate() const override {
    (void)order();
    std::vector<std::vector<Element>> lists;
    std::vector<std::size_t> sizes;
    for (const auto& f : factors_) {
      lists.push_back(f->enumerate());
      sizes.push_back(lists.back().size());
    }
    std::vector<Element> out;
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
      ProductElement p;
      for (std::size_t i = 0; i < idx.size(); ++i) p.parts.push_back(lists[i][idx[i]]);
      out.emplace_back(std::move(p));
    });
    return out;
  }
  Element random_element(Rng& rng, std::int64_t bound) const override {
    ProductElement p;
    for (const auto& f : factors_) p.parts.push_back(f->random_element(rng, bound));
    return p;
  }
  std::vector<Element> generators() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      for (const auto& gen : factors_[i]->generators()) {
        ProductElement p = identity().as<ProductElement>();
        p.parts[i] = gen;
        out.emplace_back(std::move(p));
      }
    }
    return out;
  }
  Element parse_element(std::string_view text) const override {
    if (is_identity_literal(text)) return identity();
    const std::string_view body = unwrap(text, '<', '>', offset_in(text, trim(text)));
    const auto parts = split_top(body, '|');
    if (parts.size() != factors_.size()) {
      throw ParseError("expected " + std::to_string(factors_.size()) + " components separated by '|'", 0);
    }
    ProductElement p;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      try {
        p.parts.push_back(factors_[i]->parse_element(parts[i]));
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), offset_in(text, parts[i]) + e.position());
      }
    }
    return p;
  }
  std::string format(const Element& g) const override {
    check(g);
    if (is_identity(g)) return "e";
    std::string s = "<";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += '|';
      s += factors_[i]->format(g.as<ProductElement>().parts[i]);
    }
    return s + ">";
  }
  void check(const Element& g) const override {
    check_shape(g);
    for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i]->check(g.as<ProductElement>().parts[i]);
  }

 private:
  void check_shape(const Element& g) const {
    if (!g.holds<ProductElement>() || g.as<ProductElement>().parts.size() != factors_.size()) {
      mismatch(*this, "expected a tuple of " + std::to_string(factors_.size()) + " components");
    }
  }

  std::vector<GroupPtr> factors_;
};

}  // namespace

GroupPtr make_cyclic_group(const GroupDescriptor& desc) { return std::make_shared<CyclicGroup>(desc); }
GroupPtr make_free_abelian_group(const GroupDescriptor& desc) { return std::make_shared<FreeAbelianGroup>(desc); }
GroupPtr make_permutation_group(const GroupDescriptor& desc) { return std::make_shared<PermutationGroup>(desc); }
GroupPtr make_unitriangular_group(const GroupDescriptor& desc) { return std::make_shared<UnitriangularGroup>(desc); }
GroupPtr make_product_group(const GroupDescriptor& desc) { return std::make_shared<ProductGroup>(desc); }

}  // namespace iterid::detail
