#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordamalg/amalgamate.hpp"
#include "ordamalg/class_spec.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/error.hpp"
#include "ordamalg/oracle.hpp"
#include "ordamalg/reversing.hpp"

namespace ordamalg {
namespace {

using testing::chain;

constexpr OpKind kRev = OpKind::reversing;

Structure reversal(const std::string& name, const std::vector<std::string>& asc) {
  std::vector<std::pair<std::string, std::string>> g;
  for (std::size_t i = 0; i < asc.size(); ++i) g.emplace_back(asc[i], asc[asc.size() - 1 - i]);
  return chain(name, asc, {{"g", kRev, g}});
}

TEST(Classify, OddChainHasACenter) {
  const auto s = reversal("S", {"x", "y", "z"});
  const auto cls = classify(s, s.ops().front());
  EXPECT_EQ(cls.tags, (std::vector<Position>{Position::lower, Position::center, Position::upper}));
  EXPECT_EQ(cls.center, std::optional<ElemId>(1));
}

TEST(Classify, EvenChainHasNone) {
  const auto s = reversal("S", {"x", "y"});
  const auto cls = classify(s, s.ops().front());
  EXPECT_FALSE(cls.center.has_value());
  EXPECT_EQ(cls.tags, (std::vector<Position>{Position::lower, Position::upper}));
}

TEST(Classify, UndefinedValuesTakeTheirSideOfTheCenter) {
  const auto s = chain("S", {"x", "c", "y"}, {{"g", kRev, {{"c", "c"}}}});
  const auto cls = classify(s, s.ops().front());
  EXPECT_EQ(cls.tags, (std::vector<Position>{Position::lower, Position::center, Position::upper}));
  const auto t = chain("T", {"x", "y"}, {{"g", kRev, {}}});
  EXPECT_EQ(classify(t, t.ops().front()).tags, (std::vector<Position>{Position::untagged, Position::untagged}));
}

TEST(AddCenter, GoesBetweenLowerAndUpper) {
  const auto s = add_center(reversal("S", {"x", "y"}), "m");
  std::vector<std::string> asc;
  for (ElemId e : s.ascending()) asc.push_back(s.element(e));
  EXPECT_EQ(asc, (std::vector<std::string>{"x", "m", "y"}));
  EXPECT_TRUE(testing::naive_valid(s));
  EXPECT_EQ(common_center(s), s.index_of("m"));
}

TEST(AddCenter, Errors) {
  EXPECT_THROW(add_center(reversal("S", {"x", "y", "z"})), Error);
  EXPECT_THROW(add_center(reversal("S", {"x", "y"}), "x"), Error);
}

TEST(AlternatingOrder, FlipsWithParity) {
  const AmalgamationTriple t{chain("A", {"a", "c"}), chain("B", {"c", "b"}), chain("C", {"c"})};
  const auto E = poset_amalgam(t);
  const ElemId a = *E.E.index_of("a");
  const ElemId b = *E.E.index_of("b");
  EXPECT_EQ(alt_compare(E, 0, a, b), AltOrder::below);
  EXPECT_EQ(alt_compare(E, 1, a, b), AltOrder::above);
  EXPECT_EQ(alt_compare(E, 2, a, b), AltOrder::below);
  EXPECT_EQ(alt_compare(E, 1, a, a), AltOrder::equal);
}

TEST(AlignCenters, FreshCenterWhenNoneExists) {
  const AmalgamationTriple t{reversal("A", {"a0", "a1"}), reversal("B", {"b0", "b1"}), chain("C", {}, {{"g", kRev, {}}})};
  const auto al = align_centers(t);
  EXPECT_TRUE(al.fresh_center);
  EXPECT_EQ(al.center, kFreshCenter);
  EXPECT_TRUE(al.triple.C.contains(kFreshCenter));
  EXPECT_NO_THROW(validate_triple(al.triple));
}

TEST(AlignCenters, RenamesTheCenterOfB) {
  const AmalgamationTriple t{reversal("A", {"a0", "a", "a1"}), reversal("B", {"b0", "b", "b1"}),
                             chain("C", {}, {{"g", kRev, {}}})};
  const auto al = align_centers(t);
  EXPECT_FALSE(al.fresh_center);
  EXPECT_EQ(al.center, "a");
  EXPECT_EQ(al.b_names, (NameMap{{"b", "a"}}));
}

TEST(AmalgamateReversing, CenterlessInputsGiveACenterlessStrongAmalgam) {
  const AmalgamationTriple t{reversal("A", {"a0", "a1"}), reversal("B", {"b0", "b1"}), chain("C", {}, {{"g", kRev, {}}})};
  const auto r = amalgamate_reversing(t);
  EXPECT_EQ(r.D.size(), 4U);
  EXPECT_FALSE(r.D.contains(kFreshCenter));
  EXPECT_TRUE(testing::naive_valid(r.D));
  EXPECT_TRUE(testing::naive_is_inclusion(t.A, r.D));
  EXPECT_TRUE(testing::naive_is_inclusion(t.B, r.D));
}

TEST(AmalgamateReversing, ExhaustiveUpToFive) {
  const auto spec = parse_class_spec("lo_r");
  std::size_t n = for_each_triple(spec, {5, false}, [&](const AmalgamationTriple& t) {
    const auto r = amalgamate_reversing(t);
    ASSERT_TRUE(is_member(r.D, spec)) << membership_failure(r.D, spec);
    ASSERT_TRUE(is_embedding(t.A, r.D, r.e_A));
    ASSERT_TRUE(is_embedding(t.B, r.D, r.e_B));
    const bool c_centered = common_center(t.C).has_value();
    if (c_centered) ASSERT_TRUE(r.b_names.empty());
  });
  EXPECT_GT(n, 100U);
}

TEST(LinearizeReversing, RequiresAlignment) {
  const AmalgamationTriple t{reversal("A", {"a0", "a1"}), reversal("B", {"b0", "b1"}), chain("C", {}, {{"g", kRev, {}}})};
  try {
    linearize_reversing(amalgamate_posets(t));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAligned);
  }
}

TEST(Fgac, ExhaustiveUpToFive) {
  const auto spec = parse_class_spec("lo_fgac(1,1)");
  std::size_t n = for_each_triple(spec, {5, false}, [&](const AmalgamationTriple& t) {
    const auto D = linearize_fgac(amalgamate_posets(t));
    ASSERT_TRUE(is_member(D, spec)) << membership_failure(D, spec);
    ASSERT_TRUE(testing::naive_is_inclusion(t.A, D));
    ASSERT_TRUE(testing::naive_is_inclusion(t.B, D));
  });
  EXPECT_GT(n, 0U);
}

TEST(Fgac, NeedsACommonCenter) {
  const AmalgamationTriple t{reversal("A", {"a0", "a1"}), reversal("B", {"b0", "b1"}), chain("C", {}, {{"g", kRev, {}}})};
  EXPECT_THROW(linearize_fgac(amalgamate_posets(t)), Error);
}

}  // namespace
}  // namespace ordamalg
