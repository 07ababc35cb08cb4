#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "iterid/finite_group.hpp"
#include "iterid/grigorchuk.hpp"
#include "iterid/group.hpp"
#include "iterid/projections.hpp"
#include "oracles.hpp"

namespace iterid {
namespace {

class GroupAxiomsTest : public ::testing::TestWithParam<const char*> {};

TEST_P(GroupAxiomsTest, Axioms) {
  const GroupPtr g = make_group(GetParam());
  Rng rng(42);
  const Element e = g->identity();
  for (int i = 0; i < 200; ++i) {
    const Element a = g->random_element(rng, 4);
    const Element b = g->random_element(rng, 4);
    const Element c = g->random_element(rng, 4);
    g->check(a);
    EXPECT_TRUE(g->equal(g->op(g->op(a, b), c), g->op(a, g->op(b, c))));
    EXPECT_TRUE(g->equal(g->op(a, e), a));
    EXPECT_TRUE(g->equal(g->op(e, a), a));
    EXPECT_TRUE(g->is_identity(g->op(a, g->inv(a))));
    EXPECT_TRUE(g->equal(g->parse_element(g->format(a)), a)) << g->format(a);
    if (g->equal(a, b)) {
      EXPECT_EQ(g->hash(a), g->hash(b));
    }
  }
  EXPECT_EQ(g->format(e), "e");
  EXPECT_TRUE(g->is_identity(g->parse_element("e")));
}

INSTANTIATE_TEST_SUITE_P(Backends, GroupAxiomsTest,
                         ::testing::Values("cyclic(5)", "zd(3)", "int", "sym(5)", "alt(4)", "unitri(4)",
                                           "unitri(3,5)", "wreath(cyclic(3),int)", "wreath(int,cyclic(4))",
                                           "wreath(sym(3),int)", "infunitri", "grigorchuk",
                                           "product(cyclic(2),sym(3))"));

TEST(GroupTest, EnumerateFinite) {
  for (const char* text : {"cyclic(6)", "sym(4)", "alt(5)", "unitri(3,3)", "wreath(cyclic(2),cyclic(3))",
                           "product(cyclic(2),alt(4))"}) {
    const GroupPtr g = make_group(text);
    const auto all = g->enumerate();
    EXPECT_EQ(all.size(), g->order()) << text;
    EXPECT_TRUE(g->is_identity(all.front()));
    std::set<Element> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
  }
  EXPECT_THROW(make_group("int")->enumerate(), std::domain_error);
}

TEST(GroupTest, MismatchedElementRejected) {
  const GroupPtr g = make_group("sym(3)");
  EXPECT_THROW(g->check(Element(Residue{1})), BackendMismatch);
  EXPECT_THROW(g->parse_element("(1 4)"), std::invalid_argument);
}

TEST(PermutationTest, MatchesArrayModel) {
  const GroupPtr g = make_group("sym(5)");
  const oracle::Perms p{5};
  const auto to_vec = [](const Element& x) {
    std::vector<int> v;
    for (auto i : x.as<Permutation>().image) v.push_back(i);
    return v;
  };
  const Element a = g->parse_element("(1 2 3)");
  const Element b = g->parse_element("(1 2)");
  EXPECT_EQ(to_vec(a), p.parse("(1 2 3)"));
  // Left-to-right: 1 -> 2 -> 1 under (1 2 3) then (1 2).
  EXPECT_EQ(g->format(g->op(a, b)), "(2 3)");
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Element x = g->random_element(rng, 0);
    const Element y = g->random_element(rng, 0);
    EXPECT_EQ(to_vec(g->op(x, y)), p.mul(to_vec(x), to_vec(y)));
    EXPECT_EQ(to_vec(g->inv(x)), p.inv(to_vec(x)));
  }
  for (const auto& x : make_group("alt(5)")->enumerate()) EXPECT_TRUE(oracle::Perms::even(to_vec(x)));
}

TEST(UnitriTest, MatchesMatrixModel) {
  const GroupPtr g = make_group("unitri(3,5)");
  const oracle::Unitri3 m{5};
  const auto to_mat = [&](const Element& x) {
    const auto& e = x.as<UnitriMatrix>().entries;
    return m.make(e[0], e[2], e[1]);
  };
  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const Element x = g->random_element(rng, 4);
    const Element y = g->random_element(rng, 4);
    EXPECT_EQ(to_mat(g->op(x, y)), m.mul(to_mat(x), to_mat(y)));
    EXPECT_EQ(to_mat(g->inv(x)), m.inv(to_mat(x)));
  }
}

class WreathOracleTest : public ::testing::TestWithParam<const char*> {};

TEST_P(WreathOracleTest, MatchesLaurentAffineModel) {
  const GroupPtr g = make_group(GetParam());
  const auto& d = g->descriptor();
  const std::int64_t modulus = d.lamp().kind == GroupKind::kCyclic ? d.lamp().size : 0;
  const oracle::Laurent m{modulus, d.base};
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const Element x = g->random_element(rng, 5);
    const Element y = g->random_element(rng, 5);
    EXPECT_EQ(oracle::from_wreath(m, g->op(x, y)), m.mul(oracle::from_wreath(m, x), oracle::from_wreath(m, y)));
    EXPECT_EQ(oracle::from_wreath(m, g->inv(x)), m.inv(oracle::from_wreath(m, x)));
  }
}

INSTANTIATE_TEST_SUITE_P(Lamplighters, WreathOracleTest,
                         ::testing::Values("wreath(int,int)", "wreath(cyclic(4),int)", "wreath(cyclic(2),int)",
                                           "wreath(cyclic(3),cyclic(5))", "wreath(int,cyclic(4))"));

TEST(WreathTest, TranslationMovesLamp) {
  const GroupPtr g = make_group("wreath(int,int)");
  const Element x = g->parse_element("(s:1;)");
  const Element a = g->parse_element("(s:0; 0:1)");
  EXPECT_EQ(g->format(g->op(x, a)), "(s:1; 1:1)");
  EXPECT_EQ(g->format(g->conj(a, g->inv(x))), "(s:0; 1:1)");
}

TEST(InfUnitriTest, MatchesOperatorModel) {
  const GroupPtr g = make_group("infunitri");
  const oracle::ShiftOperators m;
  Rng rng(10);
  for (int i = 0; i < 500; ++i) {
    const Element x = g->random_element(rng, 3);
    const Element y = g->random_element(rng, 3);
    EXPECT_EQ(oracle::from_shift_matrix(g->op(x, y)), m.mul(oracle::from_shift_matrix(x), oracle::from_shift_matrix(y)))
        << g->format(x) << " * " << g->format(y);
    EXPECT_EQ(oracle::from_shift_matrix(g->inv(x)), m.inv(oracle::from_shift_matrix(x))) << g->format(x);
  }
}

TEST(InfUnitriTest, ShiftConjugatesElementaryMatrices) {
  const GroupPtr g = make_group("infunitri");
  const Element phi = g->parse_element("(t:1;)");
  const Element m0 = g->parse_element("(t:0; (0,1):1)");
  // phi m_i phi^-1 = m_{i+1}
  EXPECT_EQ(g->format(g->op(g->op(phi, m0), g->inv(phi))), "(t:0; (1,2):1)");
  EXPECT_THROW(g->parse_element("(t:0; (1,0):1)"), std::invalid_argument);
}

TEST(GrigorchukTest, LevelActionMatchesRecursion) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    std::string word;
    const auto len = rng.uniform(0, 16);
    for (std::int64_t k = 0; k < len; ++k) word += "abcd"[rng.uniform(0, 3)];
    for (int level = 1; level <= 6; ++level) {
      const auto image = grigorchuk_level_action(word, level);
      for (std::uint32_t v = 0; v < image.size(); ++v) {
        std::string s;
        for (int k = level - 1; k >= 0; --k) s += ((v >> k) & 1U) ? '1' : '0';
        for (char c : word) oracle::grig_act(c, s, 0);
        std::uint32_t back = 0;
        for (char c : s) back = back * 2 + (c == '1' ? 1U : 0U);
        EXPECT_EQ(image[v], back) << word << " level " << level;
      }
    }
  }
}

TEST(GrigorchukTest, WordProblem) {
  EXPECT_EQ(grigorchuk_reduce("aabcd"), "");
  EXPECT_EQ(grigorchuk_reduce("bc"), "d");
  std::string ab8, ab16;
  for (int i = 0; i < 8; ++i) ab8 += "ab";
  ab16 = ab8 + ab8;
  EXPECT_FALSE(grigorchuk_is_trivial(ab8));
  EXPECT_TRUE(grigorchuk_is_trivial(ab16));
  EXPECT_TRUE(oracle::grig_moves_level(ab8, 8));
  EXPECT_FALSE(oracle::grig_moves_level(ab16, 10));

  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    std::string word;
    const auto len = rng.uniform(0, 12);
    for (std::int64_t k = 0; k < len; ++k) word += "abcd"[rng.uniform(0, 3)];
    EXPECT_EQ(grigorchuk_is_trivial(word), !oracle::grig_moves_level(word, 10)) << word;
  }
  EXPECT_THROW(grigorchuk_reduce("abx"), std::invalid_argument);
}

TEST(GrigorchukTest, EqualityIsSemantic) {
  const GroupPtr g = make_group("grigorchuk");
  std::string ab16;
  for (int i = 0; i < 16; ++i) ab16 += "ab";
  EXPECT_TRUE(g->is_identity(g->parse_element(ab16)));
  EXPECT_EQ(g->hash(g->parse_element(ab16)), g->hash(g->identity()));
}

TEST(FiniteGroupTest, DerivedSeriesMatchesClosure) {
  const oracle::Perms p4{4};
  std::vector<std::size_t> want = oracle::derived_series_sizes(p4, p4.all());
  const FiniteGroup s4(make_group("sym(4)"));
  std::vector<std::size_t> got;
  for (const auto& s : derived_series(s4)) got.push_back(s.size());
  EXPECT_EQ(got, want);
  EXPECT_EQ(derived_length(s4), 3);
  EXPECT_TRUE(is_solvable(s4));
  EXPECT_FALSE(is_nilpotent(s4));

  const oracle::Perms p5{5};
  std::vector<std::vector<int>> a5;
  for (const auto& x : p5.all())
    if (oracle::Perms::even(x)) a5.push_back(x);
  const FiniteGroup alt5(make_group("alt(5)"));
  got.clear();
  for (const auto& s : derived_series(alt5)) got.push_back(s.size());
  EXPECT_EQ(got, oracle::derived_series_sizes(p5, a5));
  EXPECT_FALSE(is_solvable(alt5));
  EXPECT_EQ(derived_length(alt5), -1);

  const oracle::Unitri3 u{3};
  const FiniteGroup ut(make_group("unitri(3,3)"));
  got.clear();
  for (const auto& s : derived_series(ut)) got.push_back(s.size());
  EXPECT_EQ(got, oracle::derived_series_sizes(u, u.all()));
  EXPECT_TRUE(is_nilpotent(ut));
  EXPECT_EQ(lower_central_series(ut).size(), 3U);
}

TEST(FiniteGroupTest, IndexedOperations) {
  const FiniteGroup g(make_group("sym(4)"));
  EXPECT_EQ(g.order(), 24);
  for (int a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.op(a, g.inv(a)), g.identity());
    EXPECT_EQ(g.index_of(g.element(a)), a);
    for (int b = 0; b < g.order(); b += 5) {
      EXPECT_EQ(g.element(g.op(a, b)), g.group().op(g.element(a), g.element(b)));
    }
  }
  EXPECT_EQ(g.element_order(g.index_of(g.group().parse_element("(1 2 3 4)"))), 4);
  EXPECT_THROW(FiniteGroup(make_group("int")), std::domain_error);
}

TEST(ProjectionTest, Homomorphisms) {
  const GroupDescriptor src = parse_group("wreath(cyclic(12),int)");
  const GroupPtr g = make_group(src);
  const GroupPtr lamp_target = make_group(lamp_projection_target(src, 4));
  const GroupPtr base_target = make_group(base_projection_target(src));
  EXPECT_EQ(lamp_target->name(), "wreath(cyclic(4),int)");
  EXPECT_EQ(base_target->name(), "int");
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const Element x = g->random_element(rng, 5);
    const Element y = g->random_element(rng, 5);
    EXPECT_EQ(lamp_projection(src, g->op(x, y), 4),
              lamp_target->op(lamp_projection(src, x, 4), lamp_projection(src, y, 4)));
    EXPECT_EQ(base_projection(src, g->op(x, y)), base_target->op(base_projection(src, x), base_projection(src, y)));
  }
  EXPECT_THROW(lamp_projection_target(src, 5), std::invalid_argument);
}

}  // namespace
}  // namespace iterid
