#include "iterid/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "checked.hpp"

namespace iterid {

namespace {

int infer_arity(std::span<const Syllable> syllables, int requested) {
  int max_var = 0;
  for (const auto& s : syllables) {
    if (s.var < 1) throw std::invalid_argument("variable index must be positive");
    max_var = std::max(max_var, s.var);
  }
  if (requested > 0 && requested < max_var) {
    throw std::invalid_argument("arity " + std::to_string(requested) +
                                " is smaller than variable index " + std::to_string(max_var));
  }
  return std::max({requested, max_var, 1});
}

}  // namespace

void WordBuilder::push(int var, std::int64_t exp) {
  if (exp == 0) return;
  if (var < 1) throw std::invalid_argument("variable index must be positive");
  arity_ = std::max(arity_, var);
  if (!out_.empty() && out_.back().var == var) {
    out_.back().exp = detail::checked_add(out_.back().exp, exp);
    if (out_.back().exp == 0) out_.pop_back();
    return;
  }
  if (out_.size() >= kMaxWordSyllables) throw std::length_error("word exceeds syllable limit");
  out_.push_back({var, exp});
}

void WordBuilder::append(const Word& w) {
  arity_ = std::max(arity_, w.arity());
  for (const auto& s : w.syllables()) push(s.var, s.exp);
}

void WordBuilder::append_inverse(const Word& w) {
  arity_ = std::max(arity_, w.arity());
  const auto syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) push(it->var, detail::checked_neg(it->exp));
}

void WordBuilder::append_power(const Word& w, std::int64_t k) {
  arity_ = std::max(arity_, w.arity());
  if (k == 0 || w.is_identity()) return;
  if (w.syllable_count() == 1) {
    const auto& s = w.syllables().front();
    push(s.var, detail::checked_mul(s.exp, k));
    return;
  }
  const Word p = power(w, k);
  append(p);
}

Word WordBuilder::build() && {
  Word w;
  w.arity_ = std::max(arity_, 1);
  w.syllables_ = std::move(out_);
  return w;
}

Word Word::identity(int arity) {
  Word w;
  w.arity_ = std::max(arity, 1);
  return w;
}

Word Word::generator(int var, int arity) {
  if (var < 1) throw std::invalid_argument("variable index must be positive");
  const Syllable s{var, 1};
  return from_syllables(std::span<const Syllable>(&s, 1), arity);
}

Word Word::from_syllables(std::span<const Syllable> raw, int arity) {
  WordBuilder b(infer_arity(raw, arity));
  for (const auto& s : raw) b.push(s.var, s.exp);
  return std::move(b).build();
}

std::uint64_t Word::letter_length() const {
  std::uint64_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return n;
}

int Word::max_variable() const {
  int m = 0;
  for (const auto& s : syllables_) m = std::max(m, s.var);
  return m;
}

bool Word::contains_variable(int var) const {
  return std::any_of(syllables_.begin(), syllables_.end(),
                     [var](const Syllable& s) { return s.var == var; });
}

Word Word::with_arity(int arity) const {
  if (arity < max_variable()) throw std::invalid_argument("arity smaller than a variable index in the word");
  Word w = *this;
  w.arity_ = std::max(arity, 1);
  return w;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = static_cast<std::size_t>(w.arity());
  for (const auto& s : w.syllables()) {
    detail::hash_combine(h, static_cast<std::size_t>(s.var));
    detail::hash_combine(h, static_cast<std::size_t>(s.exp));
  }
  return h;
}

Word free_reduce(std::span<const Syllable> raw, int arity) { return Word::from_syllables(raw, arity); }

Word operator*(const Word& a, const Word& b) {
  WordBuilder out(std::max(a.arity(), b.arity()));
  out.append(a);
  out.append(b);
  return std::move(out).build();
}

Word inverse(const Word& w) {
  WordBuilder out(w.arity());
  out.append_inverse(w);
  return std::move(out).build();
}

Word power(const Word& w, std::int64_t k) {
  if (k == 0 || w.is_identity()) return Word::identity(w.arity());
  Word base = k > 0 ? w : inverse(w);
  // |k| as unsigned so INT64_MIN is handled.
  std::uint64_t n = k > 0 ? static_cast<std::uint64_t>(k) : 0 - static_cast<std::uint64_t>(k);
  Word result = Word::identity(w.arity());
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Word conjugate(const Word& w, const Word& y) {
  WordBuilder out(std::max(w.arity(), y.arity()));
  out.append_inverse(y);
  out.append(w);
  out.append(y);
  return std::move(out).build();
}

Word commutator(const Word& a, const Word& b) {
  WordBuilder out(std::max(a.arity(), b.arity()));
  out.append_inverse(a);
  out.append_inverse(b);
  out.append(a);
  out.append(b);
  return std::move(out).build();
}

Word commutator(std::span<const Word> parts) {
  if (parts.size() < 2) throw std::invalid_argument("commutator needs at least two entries");
  Word acc = commutator(parts[0], parts[1]);
  for (std::size_t i = 2; i < parts.size(); ++i) acc = commutator(acc, parts[i]);
  return acc;
}

std::int64_t exponent_sum(const Word& w, int var) {
  if (var < 1 || var > w.arity()) {
    throw std::out_of_range("variable index " + std::to_string(var) + " outside 1.." +
                            std::to_string(w.arity()));
  }
  std::int64_t total = 0;
  for (const auto& s : w.syllables()) {
    if (s.var == var) total = detail::checked_add(total, s.exp);
  }
  return total;
}

Word substitute(const Word& w, std::span<const Word> images) {
  int arity = 1;
  for (const auto& img : images) arity = std::max(arity, img.arity());
  WordBuilder out(arity);
  for (const auto& s : w.syllables()) {
    if (static_cast<std::size_t>(s.var) > images.size()) {
      throw std::invalid_argument("no image for variable x" + std::to_string(s.var));
    }
    out.append_power(images[s.var - 1], s.exp);
  }
  return std::move(out).build();
}

Word shift_variables(const Word& w, int offset, int arity) {
  WordBuilder out(arity);
  for (const auto& s : w.syllables()) out.push(s.var + offset, s.exp);
  Word r = std::move(out).build();
  if (r.arity() > arity && arity > 0) throw std::invalid_argument("shifted word exceeds requested arity");
  return r;
}

Word engel_iterate(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("iteration count must be at least 1");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(w.arity()));
  images.push_back(w);
  for (int i = 2; i <= w.arity(); ++i) images.push_back(Word::generator(i, w.arity()));
  Word cur = w;
  for (int step = 2; step <= n; ++step) {
    images[0] = cur;
    cur = substitute(w, images);
  }
  return cur;
}

Word s_iterate(const Word& w, int n, std::int64_t arity_cap) {
  if (n < 1) throw std::invalid_argument("iteration count must be at least 1");
  const std::int64_t base = w.arity();
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total = detail::checked_mul(total, base);
    if (total > arity_cap) {
      throw std::length_error("s-iterate needs " + std::to_string(base) + "^" + std::to_string(n) +
                              " variables, above the cap of " + std::to_string(arity_cap));
    }
  }
  Word cur = w;
  for (int level = 2; level <= n; ++level) {
    const int block = cur.arity();
    const int next_arity = block * w.arity();
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(w.arity()));
    for (int i = 0; i < w.arity(); ++i) images.push_back(shift_variables(cur, i * block, next_arity));
    cur = substitute(w, images).with_arity(next_arity);
  }
  return cur;
}

std::string render_word(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(s.var);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

Word UVDecomposition::u() const {
  WordBuilder out(arity);
  for (const auto& t : conjugate_powers) {
    out.append(t.alpha);
    out.push(1, t.l);
    out.append_inverse(t.alpha);
  }
  return std::move(out).build();
}

Word UVDecomposition::recompose() const { return u() * tail; }

UVDecomposition decompose_uv(const Word& w) {
  UVDecomposition d;
  d.arity = w.arity();
  WordBuilder prefix(w.arity());
  Word alpha = Word::identity(w.arity());
  for (const auto& s : w.syllables()) {
    if (s.var == 1) {
      alpha = Word(std::move(prefix).build());
      d.conjugate_powers.push_back({alpha, s.exp});
      prefix = WordBuilder(w.arity());
      prefix.append(alpha);
    } else {
      prefix.push(s.var, s.exp);
    }
  }
  d.tail = std::move(prefix).build().with_arity(w.arity());
  return d;
}

namespace {

// [x1^l, u] = x1^-l u^-1 x1^l u
void append_x1_commutator(WordBuilder& out, std::int64_t l, const Word& u, bool inverted) {
  if (!inverted) {
    out.push(1, detail::checked_neg(l));
    out.append_inverse(u);
    out.push(1, l);
    out.append(u);
  } else {
    out.append_inverse(u);
    out.push(1, detail::checked_neg(l));
    out.append(u);
    out.push(1, l);
  }
}

}  // namespace

Word NilpotentDecomposition::commutator_part() const {
  WordBuilder out(arity);
  for (const auto& t : commutator_terms) append_x1_commutator(out, t.l, t.u, t.inverted);
  return std::move(out).build();
}

Word NilpotentDecomposition::recompose() const {
  WordBuilder out(arity);
  out.append(commutator_part());
  out.push(1, r);
  out.append(tail);
  return std::move(out).build();
}

NilpotentDecomposition decompose_nilpotent(const Word& w) {
  // Invariant while scanning: prefix = C * x1^a * P with C the emitted
  // commutator terms and P free of x1. Appending x1^l uses
  //   P x1^l = [x1^-l, P^-1]^-1 x1^l P
  //   x1^a [x1^m, u]^-1 = [x1^-a, u] [x1^(m-a), u]^-1 x1^a.
  NilpotentDecomposition d;
  d.arity = w.arity();
  Word prefix = Word::identity(w.arity());
  std::int64_t a = 0;
  for (const auto& s : w.syllables()) {
    if (s.var != 1) {
      WordBuilder b(w.arity());
      b.append(prefix);
      b.push(s.var, s.exp);
      prefix = std::move(b).build();
      continue;
    }
    if (!prefix.is_identity()) {
      const Word u = inverse(prefix);
      const std::int64_t m = detail::checked_neg(s.exp);
      if (a != 0) d.commutator_terms.push_back({detail::checked_neg(a), u, false});
      const std::int64_t shifted = detail::checked_sub(m, a);
      if (shifted != 0) d.commutator_terms.push_back({shifted, u, true});
    }
    a = detail::checked_add(a, s.exp);
  }
  d.r = a;
  d.tail = prefix.with_arity(w.arity());
  return d;
}

}  // namespace iterid
