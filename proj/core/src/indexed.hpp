#ifndef ITERID_SRC_INDEXED_HPP
#define ITERID_SRC_INDEXED_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "iterid/finite_group.hpp"
#include "iterid/word.hpp"
#include "parallel.hpp"

namespace iterid::detail {

inline int pow_index(const FiniteGroup& g, int a, std::int64_t k) {
  if (k < 0) {
    a = g.inv(a);
    k = -k;
  }
  int result = g.identity();
  int base = a;
  auto n = static_cast<std::uint64_t>(k);
  while (n > 0) {
    if (n & 1U) result = g.op(result, base);
    n >>= 1U;
    if (n > 0) base = g.op(base, base);
  }
  return result;
}

inline int evaluate_index(const FiniteGroup& g, const Word& w, std::span<const int> tuple) {
  int acc = g.identity();
  for (const auto& s : w.syllables()) acc = g.op(acc, pow_index(g, tuple[static_cast<std::size_t>(s.var - 1)], s.exp));
  return acc;
}

/// Evaluates w(x, tail) for varying x with the tail held fixed: syllable
/// values that do not involve x1 are computed once.
class TailEvaluator {
 public:
  TailEvaluator(const FiniteGroup& g, const Word& w) : g_(g) {
    for (const auto& s : w.syllables()) {
      syllables_.push_back(s);
      if (s.var == 1 && std::find(x1_exps_.begin(), x1_exps_.end(), s.exp) == x1_exps_.end()) {
        x1_exps_.push_back(s.exp);
      }
    }
    values_.resize(syllables_.size());
    x1_powers_.resize(x1_exps_.size());
  }

  /// tail[i] is the value of x_{i+2}.
  void set_tail(std::span<const int> tail) {
    for (std::size_t k = 0; k < syllables_.size(); ++k) {
      const auto& s = syllables_[k];
      values_[k] = s.var == 1 ? -1 : pow_index(g_, tail[static_cast<std::size_t>(s.var - 2)], s.exp);
    }
  }

  int operator()(int x) {
    for (std::size_t i = 0; i < x1_exps_.size(); ++i) x1_powers_[i] = pow_index(g_, x, x1_exps_[i]);
    int acc = g_.identity();
    for (std::size_t k = 0; k < syllables_.size(); ++k) {
      int v = values_[k];
      if (v < 0) {
        const auto it = std::find(x1_exps_.begin(), x1_exps_.end(), syllables_[k].exp);
        v = x1_powers_[static_cast<std::size_t>(it - x1_exps_.begin())];
      }
      acc = g_.op(acc, v);
    }
    return acc;
  }

 private:
  const FiniteGroup& g_;
  std::vector<Syllable> syllables_;
  std::vector<std::int64_t> x1_exps_;
  std::vector<int> values_;
  std::vector<int> x1_powers_;
};

}  // namespace iterid::detail


#endif  // ITERID_SRC_INDEXED_HPP
