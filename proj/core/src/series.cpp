#include <algorithm>
#include <vector>

#include "iterid/finite_group.hpp"

namespace iterid {

ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& gens) {
  // In a finite group closure under products already gives inverses.
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = 1;
  std::vector<int> distinct_gens;
  for (int x : gens) {
    if (std::find(distinct_gens.begin(), distinct_gens.end(), x) == distinct_gens.end()) distinct_gens.push_back(x);
  }
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int s : distinct_gens) {
      const int y = g.op(members[head], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  ElementSet gens;
  for (int x : a) {
    for (int y : b) {
      const int c = g.commutator(x, y);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        gens.push_back(c);
      }
    }
  }
  return generated_subgroup(g, gens);
}

ElementSet whole(const FiniteGroup& g) {
  ElementSet all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  return all;
}

}  // namespace

std::vector<ElementSet> derived_series(const FiniteGroup& g) {
  std::vector<ElementSet> series{whole(g)};
  while (true) {
    ElementSet next = commutator_subgroup(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<ElementSet> lower_central_series(const FiniteGroup& g) {
  const ElementSet all = whole(g);
  std::vector<ElementSet> series{all};
  while (true) {
    ElementSet next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().size() == 1; }

int derived_length(const FiniteGroup& g) {
  const auto s = derived_series(g);
  return s.back().size() == 1 ? static_cast<int>(s.size()) - 1 : -1;
}

}  // namespace iterid
