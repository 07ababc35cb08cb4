#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "iterid/dynamics.hpp"
#include "iterid/named_words.hpp"
#include "iterid/word_parser.hpp"
#include "oracles.hpp"

namespace iterid {
namespace {

std::vector<int> perm_vec(const Element& x) {
  std::vector<int> v;
  for (auto i : x.as<Permutation>().image) v.push_back(i);
  return v;
}

TEST(EvaluateTest, MatchesNaiveEvaluation) {
  const GroupPtr g = make_group("sym(4)");
  const oracle::Perms p{4};
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    std::vector<Syllable> raw;
    for (int k = 0; k < 6; ++k) raw.push_back({static_cast<int>(rng.uniform(1, 3)), rng.uniform(-3, 3)});
    const Word w = Word::from_syllables(raw, 3);
    std::vector<Element> tuple;
    std::vector<std::vector<int>> args;
    for (int k = 0; k < 3; ++k) {
      tuple.push_back(g->random_element(rng, 0));
      args.push_back(perm_vec(tuple.back()));
    }
    EXPECT_EQ(perm_vec(evaluate(w, *g, tuple)), oracle::eval_word(p, w, args));
  }
  const std::vector<Element> short_tuple{g->identity()};
  EXPECT_THROW(evaluate(parse_word("[x1,x2]"), *g, short_tuple), std::invalid_argument);
}

TEST(OrbitTest, MatchesNaiveIteration) {
  const GroupPtr g = make_group("sym(4)");
  const oracle::Perms p{4};
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    std::vector<Syllable> raw;
    for (int k = 0; k < 5; ++k) raw.push_back({static_cast<int>(rng.uniform(1, 2)), rng.uniform(-2, 2)});
    const Word w = Word::from_syllables(raw, 2);
    const Element x1 = g->random_element(rng, 0);
    const Element x2 = g->random_element(rng, 0);
    const std::vector<Element> tail{x2};
    const auto report = verbal_orbit(w, *g, x1, tail);
    const int want = oracle::orbit_depth(p, w, {perm_vec(x1), perm_vec(x2)}, 100);
    ASSERT_NE(want, -2);
    if (want > 0) {
      ASSERT_TRUE(report.reaches_identity()) << render_word(w);
      EXPECT_EQ(*report.depth(), want);
    } else {
      EXPECT_TRUE(report.enters_cycle()) << render_word(w);
    }
  }
}

TEST(OrbitTest, TraceAndCycleShape) {
  const GroupPtr g = make_group("alt(5)");
  const Word w = named_word("w_BWW");
  const std::vector<Element> tail{g->parse_element("(1 2 3)")};
  const auto r = verbal_orbit(w, *g, g->parse_element("(3 4 5)"), tail, 0, true);
  ASSERT_TRUE(r.enters_cycle());
  const auto& c = std::get<EntersCycle>(r.outcome);
  EXPECT_EQ(c.preperiod, 2);
  EXPECT_EQ(c.period, 3);
  ASSERT_EQ(r.trace.size(), 6U);
  EXPECT_EQ(r.trace[5], r.trace[2]);
}

TEST(OrbitTest, IdentityStartIsDepthOne) {
  const GroupPtr g = make_group("cyclic(5)");
  const auto r = verbal_orbit(parse_word("x1^2"), *g, g->identity(), {});
  EXPECT_EQ(r.depth(), std::optional<std::int64_t>(1));
}

TEST(OrbitTest, BudgetOnInfiniteGroup) {
  const GroupPtr g = make_group("int");
  const auto r = verbal_orbit(parse_word("x1^2"), *g, g->parse_element("1"), {}, 20);
  ASSERT_TRUE(r.exhausted());
  EXPECT_EQ(std::get<BudgetExhausted>(r.outcome).budget, 20);
  EXPECT_EQ(default_orbit_budget(*g), kDefaultInfiniteBudget);
}

TEST(CheckETest, ExhaustiveMatchesBruteForce) {
  const oracle::Perms p{3};
  const GroupPtr g = make_group("sym(3)");
  for (const char* text : {"[x1,x2]", "x1^6", "x1^2", "[x1,x2,x2]", "x2 x1^6 x2^-1"}) {
    const Word w = parse_word(text);
    const auto v = check_e_identity(w, g);
    int max_depth = 0;
    bool holds = true;
    const auto all = p.all();
    std::vector<std::vector<int>> args(static_cast<std::size_t>(w.arity()), p.one());
    // all tuples of length arity
    std::vector<std::size_t> idx(args.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < args.size(); ++k) args[k] = all[idx[k]];
      const int d = oracle::orbit_depth(p, w, args, 100);
      if (d < 0) holds = false;
      max_depth = std::max(max_depth, d);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == all.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    EXPECT_TRUE(v.exhaustive);
    EXPECT_EQ(v.status == Status::kHolds, holds) << text;
    if (holds) {
      EXPECT_EQ(v.max_depth_seen, max_depth) << text;
    } else {
      ASSERT_TRUE(v.witness.has_value());
      std::vector<std::vector<int>> wt;
      for (const auto& x : v.witness->tuple) wt.push_back(perm_vec(x));
      EXPECT_EQ(oracle::orbit_depth(p, w, wt, 100), -1);
    }
    EXPECT_EQ(v.tuples_checked, static_cast<std::uint64_t>(std::pow(6, w.arity())));
  }
}

TEST(CheckETest, SampledNeverHolds) {
  CheckOptions opt;
  opt.mode = CheckMode::kSampled;
  opt.samples = 50;
  const auto v = check_e_identity(parse_word("[x1,[x1,x2]]"), make_group("wreath(int,int)"), opt);
  EXPECT_EQ(v.status, Status::kInconclusive);
  EXPECT_EQ(v.tuples_reached, 50U);
  EXPECT_LE(v.max_depth_seen, 2);
  EXPECT_THROW(check_e_identity(parse_word("x1"), make_group("int")), std::domain_error);
}

TEST(CheckETest, WorkersDoNotChangeResult) {
  const GroupPtr g = make_group("alt(5)");
  CheckOptions one;
  CheckOptions four;
  four.workers = 4;
  const auto a = check_e_identity(named_word("w_BWW"), g, one);
  const auto b = check_e_identity(named_word("w_BWW"), g, four);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.depth_histogram, b.depth_histogram);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->tuple, b.witness->tuple);
}

TEST(DepthTest, ExactDepth) {
  // Class two: [x,y] is central, so [[x,y],y] = e and depth 2 is attained.
  const auto r = depth_e(parse_word("[x1,x2]"), make_group("unitri(3,3)"));
  ASSERT_TRUE(r.s_value.has_value());
  EXPECT_EQ(*r.s_value, 2);
  EXPECT_FALSE(depth_e(parse_word("[x1,x2]"), make_group("sym(3)")).s_value.has_value());
  EXPECT_FALSE(depth_e(named_word("w_BWW"), make_group("alt(5)")).s_value.has_value());
}

TEST(SIdentityTest, LevelsMatchBruteForce) {
  const oracle::Perms p{3};
  const GroupPtr g = make_group("sym(3)");
  const Word w0 = named_word("w0");
  const auto r = check_s_identity(w0, g);
  EXPECT_EQ(r.verdict.status, Status::kHolds);
  EXPECT_EQ(r.trace.level, 2);
  const auto all = p.all();
  for (int n = 1; n <= 2; ++n) {
    const Word it = s_iterate(w0, n);
    std::set<std::vector<int>> values;
    std::vector<std::size_t> idx(static_cast<std::size_t>(it.arity()), 0);
    std::vector<std::vector<int>> args(idx.size());
    while (true) {
      for (std::size_t k = 0; k < idx.size(); ++k) args[k] = all[idx[k]];
      values.insert(oracle::eval_word(p, it, args));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == all.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    EXPECT_EQ(r.trace.levels.at(static_cast<std::size_t>(n)).size, values.size()) << n;
  }
  EXPECT_EQ(check_s_identity(w0, make_group("sym(4)")).trace.level, 3);
  EXPECT_EQ(check_s_identity(w0, make_group("alt(5)")).verdict.status, Status::kFails);
}

TEST(SIdentityTest, AbelianLinearOnIntegers) {
  const GroupPtr z = make_group("int");
  EXPECT_EQ(check_s_identity(named_word("w0"), z).verdict.status, Status::kHolds);
  const auto r = check_s_identity(parse_word("x1 x2"), z);
  EXPECT_EQ(r.verdict.status, Status::kFails);
  EXPECT_EQ(r.verdict.certificate, "abelian-linear");
}

TEST(SampleTest, Deterministic) {
  const GroupPtr g = make_group("wreath(cyclic(3),int)");
  for (std::int64_t i = 0; i < 30; ++i) {
    EXPECT_EQ(sample_tuple(*g, 3, 5, i, 4), sample_tuple(*g, 3, 5, i, 4));
  }
  EXPECT_NE(sample_tuple(*g, 3, 5, 2, 4), sample_tuple(*g, 3, 6, 2, 4));
}

}  // namespace
}  // namespace iterid
