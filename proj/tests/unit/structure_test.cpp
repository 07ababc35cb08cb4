#include <gtest/gtest.h>

#include <vector>

#include "iterid/named_words.hpp"
#include "iterid/structure.hpp"
#include "iterid/word_parser.hpp"

namespace iterid {
namespace {

TEST(MembershipTest, Predicates) {
  EXPECT_EQ(parse_membership("lamp-subgroup"), Membership::kLampSubgroup);
  EXPECT_EQ(to_string(parse_membership("shift-zero")), "shift-zero");
  EXPECT_THROW(parse_membership("bogus"), std::invalid_argument);
  const GroupPtr w = make_group("wreath(cyclic(2),int)");
  EXPECT_TRUE(is_member(*w, Membership::kLampSubgroup, w->parse_element("(s:0; 3:1)")));
  EXPECT_FALSE(is_member(*w, Membership::kLampSubgroup, w->parse_element("(s:2; 3:1)")));
  const GroupPtr s = make_group("sym(4)");
  EXPECT_TRUE(is_member(*s, Membership::kEvenPermutation, s->parse_element("(1 2 3)")));
  EXPECT_FALSE(is_member(*s, Membership::kEvenPermutation, s->parse_element("(1 2)")));
  const GroupPtr u = make_group("infunitri");
  EXPECT_TRUE(is_member(*u, Membership::kShiftZero, u->parse_element("(t:0; (0,3):2)")));
}

TEST(ReturnTimesTest, TranslationPeriod) {
  // w_l(e, x) = x^l, which lies in the lamp subgroup exactly when 3 | l.
  const GroupPtr g = make_group("wreath(cyclic(2),cyclic(3))");
  const std::vector<Element> tail{g->parse_element("(s:1;)")};
  const auto r = return_times(parse_word("x1 x2"), g, tail, Membership::kLampSubgroup, 20);
  EXPECT_EQ(r.levels, (std::vector<std::int64_t>{3, 6, 9, 12, 15, 18}));
  EXPECT_TRUE(r.arithmetic);
  EXPECT_EQ(r.period, std::optional<std::int64_t>(3));
  EXPECT_THROW(return_times(parse_word("x1 x2"), g, tail, Membership::kShiftZero, 5), std::invalid_argument);
}

TEST(HomomorphismTest, ConjugatePowerPartIsHomomorphism) {
  for (const char* group : {"wreath(cyclic(2),int)", "wreath(cyclic(3),int)", "wreath(int,int)"}) {
    const GroupPtr g = make_group(group);
    const std::vector<Element> tail{g->parse_element("(s:1; 0:1)"), g->parse_element("(s:-2;)")};
    for (const char* word : {"[x1,x2]", "[x1,[x2,x3]]", "x2 x1^2 x2^-1 x3 x1 x3^-1"}) {
      EXPECT_TRUE(check_u_homomorphism(parse_word(word), g, tail, 100, 1)) << group << " " << word;
      EXPECT_TRUE(check_u_equivariance(parse_word(word), g, tail, 100, 1)) << group << " " << word;
    }
  }
  // y -> y t is not a homomorphism for t != e.
  const GroupPtr g = make_group("wreath(cyclic(3),int)");
  const std::vector<Element> tail{g->parse_element("(s:1;)")};
  EXPECT_FALSE(check_map_homomorphism(parse_word("x1 x2"), g, tail, 50, 2));
  EXPECT_THROW(check_map_homomorphism(parse_word("x1"), make_group("sym(3)"), {}, 5, 0), std::invalid_argument);
}

TEST(RandomLampTest, StaysInLampSubgroup) {
  const GroupPtr g = make_group("wreath(cyclic(4),int)");
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(is_member(*g, Membership::kLampSubgroup, random_lamp_element(*g, rng, 5)));
  }
}

TEST(NilpotentClassifyTest, FiniteCyclic) {
  // x -> x^6 on Z/12 reaches 0 after two steps; x -> x^4 on Z/6 cycles at 4.
  const auto a = classify_nilpotent(parse_word("x1^6"), make_group("cyclic(12)"));
  EXPECT_EQ(a.status, Status::kHolds);
  EXPECT_EQ(a.m, 6);
  EXPECT_EQ(a.r, 6);
  EXPECT_EQ(classify_nilpotent(parse_word("x1^4"), make_group("cyclic(6)")).status, Status::kFails);
  EXPECT_EQ(check_e_identity(parse_word("x1^6"), make_group("cyclic(12)")).status, Status::kHolds);
  EXPECT_EQ(check_e_identity(parse_word("x1^4"), make_group("cyclic(6)")).status, Status::kFails);
}

TEST(NilpotentClassifyTest, TailMustBeLaw) {
  const auto c = classify_nilpotent(parse_word("x1^3 [x2,x3]"), make_group("unitri(3,3)"));
  EXPECT_EQ(c.status, Status::kFails);
  EXPECT_FALSE(c.tail_is_identity);
  EXPECT_EQ(classify_nilpotent(parse_word("[x1,x2]"), make_group("unitri(3)")).status, Status::kHolds);
  EXPECT_EQ(classify_nilpotent(parse_word("x1^2"), make_group("unitri(3)")).status, Status::kFails);
  EXPECT_EQ(classify_nilpotent(parse_word("[x1,x2] x3 x3^-1"), make_group("zd(2)")).status, Status::kHolds);
  EXPECT_TRUE(is_declared_nilpotent(parse_group("product(cyclic(2),unitri(3,2))")));
  EXPECT_FALSE(is_declared_nilpotent(parse_group("sym(3)")));
  EXPECT_THROW(classify_nilpotent(parse_word("x1"), make_group("sym(3)")), std::invalid_argument);
}

TEST(SolvabilityTest, AgreesWithDerivedSeries) {
  for (const char* word : {"w_BW", "w_BWW", "w_BGGKPP"}) {
    const auto s4 = solvability_by_word(make_group("sym(4)"), word);
    EXPECT_TRUE(s4.solvable) << word;
    EXPECT_TRUE(s4.oracle_solvable);
    EXPECT_EQ(s4.derived_length, 3);
  }
  const auto a5 = solvability_by_word(make_group("alt(5)"), "w_BWW");
  EXPECT_FALSE(a5.solvable);
  EXPECT_EQ(a5.verdict.status, Status::kFails);
  EXPECT_TRUE(a5.verdict.exhaustive);
  EXPECT_THROW(solvability_by_word(make_group("sym(3)"), "w0"), std::invalid_argument);
}

}  // namespace
}  // namespace iterid
