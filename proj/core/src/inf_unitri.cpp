#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "backends.hpp"
#include "checked.hpp"
#include "literal.hpp"

namespace iterid::detail {

namespace {

using Sparse = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

Sparse to_sparse(const ShiftMatrix& m, std::int64_t shift_by) {
  Sparse s;
  for (const auto& e : m.entries) s.emplace(std::make_pair(checked_add(e.i, shift_by), checked_add(e.j, shift_by)), e.v);
  return s;
}

void accumulate(Sparse& into, std::int64_t i, std::int64_t j, std::int64_t v) {
  auto [it, inserted] = into.emplace(std::make_pair(i, j), v);
  if (!inserted) it->second = checked_add(it->second, v);
}

// Strictly upper part only: (A B)[i][j] = sum_k A[i][k] B[k][j].
Sparse strict_product(const Sparse& a, const Sparse& b) {
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> rows;
  for (const auto& [ij, v] : b) rows[ij.first].emplace_back(ij.second, v);
  Sparse out;
  for (const auto& [ik, av] : a) {
    const auto it = rows.find(ik.second);
    if (it == rows.end()) continue;
    for (const auto& [j, bv] : it->second) accumulate(out, ik.first, j, checked_mul(av, bv));
  }
  return out;
}

void prune(Sparse& s) {
  for (auto it = s.begin(); it != s.end();) {
    it = it->second == 0 ? s.erase(it) : std::next(it);
  }
}

// (I + A)(I + B) = I + A + B + AB.
Sparse unit_product(const Sparse& a, const Sparse& b) {
  Sparse out = a;
  for (const auto& [ij, v] : b) accumulate(out, ij.first, ij.second, v);
  for (const auto& [ij, v] : strict_product(a, b)) accumulate(out, ij.first, ij.second, v);
  prune(out);
  return out;
}

// (I + A)^-1 = I - A + A^2 - ...; A is nilpotent since its support is finite.
Sparse unit_inverse(const Sparse& a) {
  Sparse neg_a;
  for (const auto& [ij, v] : a) neg_a.emplace(ij, checked_neg(v));
  Sparse total = neg_a;
  Sparse term = neg_a;
  while (true) {
    term = strict_product(term, neg_a);
    prune(term);
    if (term.empty()) break;
    for (const auto& [ij, v] : term) accumulate(total, ij.first, ij.second, v);
  }
  prune(total);
  return total;
}

ShiftMatrix from_sparse(std::int64_t shift, const Sparse& s) {
  ShiftMatrix m;
  m.shift = shift;
  for (const auto& [ij, v] : s) {
    if (v != 0) m.entries.push_back({ij.first, ij.second, v});
  }
  return m;
}

// Elements (t, M) with M unitriangular over Z indexed by Z x Z. The product is
// (t1,M1)(t2,M2) = (t1+t2, a^-t2(M1) M2), a moving (i,j) to (i+1,j+1); then
// phi = (1, I) satisfies phi m_i phi^-1 = m_{i+1} for m_i = e_{i,i+1}(1).
class InfUnitriGroup final : public Group {
 public:
  explicit InfUnitriGroup(const GroupDescriptor& d) : Group(d) {}

  Element identity() const override { return ShiftMatrix{}; }

  Element op(const Element& g, const Element& h) const override {
    check_shape(g);
    check_shape(h);
    const auto& a = g.as<ShiftMatrix>();
    const auto& b = h.as<ShiftMatrix>();
    const Sparse left = to_sparse(a, checked_neg(b.shift));
    const Sparse right = to_sparse(b, 0);
    return from_sparse(checked_add(a.shift, b.shift), unit_product(left, right));
  }

  Element inv(const Element& g) const override {
    check_shape(g);
    const auto& a = g.as<ShiftMatrix>();
    const Sparse inverse = unit_inverse(to_sparse(a, 0));
    Sparse shifted;
    for (const auto& [ij, v] : inverse) shifted.emplace(std::make_pair(checked_add(ij.first, a.shift), checked_add(ij.second, a.shift)), v);
    return from_sparse(checked_neg(a.shift), shifted);
  }

  Element random_element(Rng& rng, std::int64_t bound) const override {
    const std::int64_t t = rng.uniform(-bound, bound);
    Sparse s;
    const std::int64_t count = rng.uniform(0, bound);
    for (std::int64_t k = 0; k < count; ++k) {
      const std::int64_t i = rng.uniform(-bound, bound);
      const std::int64_t j = i + rng.uniform(1, std::max<std::int64_t>(bound, 1));
      const std::int64_t v = rng.uniform(-bound, bound);
      accumulate(s, i, j, v);
    }
    prune(s);
    return from_sparse(t, s);
  }

  std::vector<Element> generators() const override {
    return {ShiftMatrix{1, {}}, ShiftMatrix{0, {{0, 1, 1}}}};
  }

  Element parse_element(std::string_view text) const override {
    const std::string_view t = trim(text);
    if (t == "e") return identity();
    const std::size_t at = offset_in(text, t);
    const std::string_view body = unwrap(t, '(', ')', at);
    const auto halves = split_top(body, ';');
    if (halves.empty() || halves.size() > 2) throw ParseError("expected (t:<shift>; (i,j):v, ...)", at);
    const std::string_view head = halves[0];
    const std::size_t head_colon = head.find(':');
    if (head_colon == std::string_view::npos || trim(head.substr(0, head_colon)) != "t") {
      throw ParseError("expected 't:<shift>'", offset_in(text, head));
    }
    const std::string_view shift_text = trim(head.substr(head_colon + 1));
    const std::int64_t shift = parse_int(shift_text, offset_in(text, shift_text));
    Sparse s;
    if (halves.size() == 2) {
      for (auto entry : split_top(halves[1], ',')) {
        const std::size_t where = offset_in(text, entry);
        const std::size_t colon = find_top(entry, ':');
        if (colon == std::string_view::npos) throw ParseError("expected (i,j):v", where);
        const auto ij = split_top(unwrap(entry.substr(0, colon), '(', ')', where), ',');
        if (ij.size() != 2) throw ParseError("expected (i,j)", where);
        const std::int64_t i = parse_int(ij[0], where);
        const std::int64_t j = parse_int(ij[1], where);
        if (i >= j) throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not above the diagonal", where);
        accumulate(s, i, j, parse_int(entry.substr(colon + 1), where + colon + 1));
      }
    }
    prune(s);
    return from_sparse(shift, s);
  }

  std::string format(const Element& g) const override {
    check(g);
    const auto& a = g.as<ShiftMatrix>();
    if (a.shift == 0 && a.entries.empty()) return "e";
    std::string s = "(t:" + std::to_string(a.shift) + ";";
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
      const auto& e = a.entries[k];
      s += k == 0 ? " " : ", ";
      s += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "):" + std::to_string(e.v);
    }
    return s + ")";
  }

  void check(const Element& g) const override {
    check_shape(g);
    const auto& entries = g.as<ShiftMatrix>().entries;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      if (e.i >= e.j || e.v == 0) throw BackendMismatch("malformed infunitri entry");
      if (k > 0 && !(std::make_pair(entries[k - 1].i, entries[k - 1].j) < std::make_pair(e.i, e.j))) {
        throw BackendMismatch("infunitri entries not sorted");
      }
    }
  }

 private:
  void check_shape(const Element& g) const {
    if (!g.holds<ShiftMatrix>()) throw BackendMismatch("element is not in infunitri");
  }
};

}  // namespace

GroupPtr make_inf_unitri_group(const GroupDescriptor& desc) { return std::make_shared<InfUnitriGroup>(desc); }

}  // namespace iterid::detail
