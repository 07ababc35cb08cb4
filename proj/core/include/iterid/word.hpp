#ifndef ITERID_WORD_HPP
#define ITERID_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iterid {

/// One maximal power x_var^exp inside a word.
struct Syllable {
  int var = 1;
  std::int64_t exp = 1;

  bool operator==(const Syllable&) const = default;
};

/// Upper bound on the number of syllables any single word may hold. Iterated
/// substitution grows words geometrically; exceeding this throws
/// std::length_error instead of exhausting memory.
inline constexpr std::size_t kMaxWordSyllables = std::size_t{1} << 22;

/// An element of the free group F_n, always stored freely reduced.
///
/// Adjacent syllables carry distinct variables and every exponent is nonzero,
/// so two words are freely equivalent exactly when they compare equal. The
/// arity is the number of free generators the word lives over; it is at least
/// the largest variable index that occurs.
class Word {
 public:
  Word() = default;

  static Word identity(int arity = 1);
  static Word generator(int var, int arity = 0);
  /// Freely reduces `raw` (merging equal neighbours, dropping zero powers).
  static Word from_syllables(std::span<const Syllable> raw, int arity = 0);

  int arity() const { return arity_; }
  std::span<const Syllable> syllables() const { return syllables_; }
  std::size_t syllable_count() const { return syllables_.size(); }
  /// Number of letters, i.e. the sum of |exp|.
  std::uint64_t letter_length() const;
  bool is_identity() const { return syllables_.empty(); }
  /// Largest variable index occurring in the word (0 for the identity).
  int max_variable() const;
  bool contains_variable(int var) const;

  /// Same syllables over a larger (or equal) number of variables.
  Word with_arity(int arity) const;

  bool operator==(const Word&) const = default;

 private:
  friend class WordBuilder;

  int arity_ = 1;
  std::vector<Syllable> syllables_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

/// Incremental free reduction: pushing syllables keeps the buffer reduced.
class WordBuilder {
 public:
  explicit WordBuilder(int arity = 1) : arity_(arity) {}

  void push(int var, std::int64_t exp);
  void append(const Word& w);
  void append_inverse(const Word& w);
  void append_power(const Word& w, std::int64_t k);
  Word build() &&;

 private:
  int arity_;
  std::vector<Syllable> out_;
};

Word free_reduce(std::span<const Syllable> raw, int arity = 0);

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);
Word power(const Word& w, std::int64_t k);
/// w^y = y^-1 w y.
Word conjugate(const Word& w, const Word& y);
/// [a,b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);
/// Left-normed [[...[p1,p2],p3]...,pk]; throws std::invalid_argument for k < 2.
Word commutator(std::span<const Word> parts);

/// Sum of the exponents of x_var. Throws std::out_of_range unless
/// 1 <= var <= arity.
std::int64_t exponent_sum(const Word& w, int var);

/// Replaces x_i by images[i-1]. Images must cover every variable that occurs
/// in `w`. The result's arity is the largest image arity.
Word substitute(const Word& w, std::span<const Word> images);

/// Renames x_i to x_{i+offset}; the result has the given arity.
Word shift_variables(const Word& w, int offset, int arity);

/// Engel-type iterate: w_1 = w, w_{N+1} = w(w_N, x_2, ..., x_n).
Word engel_iterate(const Word& w, int n);

inline constexpr std::int64_t kDefaultSIterateArityCap = 4096;

/// Solvability-type iterate over n^N variables: w_1 = w and
/// w_{N+1}(y_1..y_{n^{N+1}}) = w(w_N(block_1), ..., w_N(block_n)).
/// Throws std::length_error if n^N exceeds `arity_cap`.
Word s_iterate(const Word& w, int n, std::int64_t arity_cap = kDefaultSIterateArityCap);

/// Word in the DSL grammar; the identity renders as "e".
std::string render_word(const Word& w);

/// Structure w = (prod alpha_i x1^{l_i} alpha_i^-1) * tail, with every alpha_i
/// and the tail free of x1.
struct UVDecomposition {
  struct Term {
    Word alpha;
    std::int64_t l = 0;
  };
  int arity = 1;
  std::vector<Term> conjugate_powers;
  Word tail;

  /// The product of the conjugate powers.
  Word u() const;
  Word recompose() const;
};

/// Left-to-right scan: the running x1-free prefix is the conjugator of each
/// x1-block, and what is left at the end becomes the tail.
UVDecomposition decompose_uv(const Word& w);

/// Structure w = (prod [x1^{l_j}, u_j]^{±1}) * x1^r * tail with u_j and the
/// tail free of x1 and r the exponent sum of x1.
struct NilpotentDecomposition {
  struct Term {
    std::int64_t l = 0;
    Word u;
    /// True when the term enters the product as [x1^l, u]^-1.
    bool inverted = false;
  };
  int arity = 1;
  std::vector<Term> commutator_terms;
  std::int64_t r = 0;
  Word tail;

  Word commutator_part() const;
  Word recompose() const;
};

NilpotentDecomposition decompose_nilpotent(const Word& w);

}  // namespace iterid

#endif  // ITERID_WORD_HPP
