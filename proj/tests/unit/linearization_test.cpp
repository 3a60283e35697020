#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordamalg/class_spec.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/error.hpp"
#include "ordamalg/linearization.hpp"
#include "ordamalg/oracle.hpp"

namespace ordamalg {
namespace {

using testing::chain;

ElemId at(const Structure& s, const std::string& name) { return *s.index_of(name); }

std::vector<std::string> ascending_names(const Structure& s) {
  std::vector<std::string> out;
  for (ElemId x : s.ascending()) out.push_back(s.element(x));
  return out;
}

AmalgamationTriple lop_example() {
  return {chain("A", {"a", "c"}, {{"f", OpKind::preserving, {{"a", "c"}, {"c", "c"}}}}),
          chain("B", {"b", "c"}, {{"f", OpKind::preserving, {{"b", "b"}, {"c", "c"}}}}),
          chain("C", {"c"}, {{"f", OpKind::preserving, {{"c", "c"}}}})};
}

TEST(Components, CutOfAnElementBelowC) {
  const auto pa = amalgamate_posets(lop_example());
  const Cut cut = component_of(pa, "a");
  EXPECT_TRUE(cut.C1.empty());
  ASSERT_EQ(cut.C2.size(), 1U);
  EXPECT_EQ(pa.E.element(cut.C2[0]), "c");
  EXPECT_EQ(component_of(pa, "b"), cut);
  EXPECT_THROW(component_of(pa, "c"), Error);
}

TEST(Components, EmptyCGivesOneComponent) {
  const auto pa = amalgamate_posets({chain("A", {"a1", "a2"}), chain("B", {"b"}), chain("C", {})});
  const auto comps = components(pa);
  ASSERT_EQ(comps.size(), 1U);
  EXPECT_EQ(comps[0].members.size(), 3U);
}

TEST(Components, NoneWhenAllSidesCoincide) {
  auto s = chain("S", {"x", "y"});
  EXPECT_TRUE(components(amalgamate_posets({s, s, s})).empty());
}

TEST(Components, TwoGapsOfATwoChain) {
  const AmalgamationTriple t{chain("A", {"a", "c0", "a2", "c1"}), chain("B", {"c0", "b", "c1"}),
                             chain("C", {"c0", "c1"})};
  const auto pa = amalgamate_posets(t);
  const auto comps = components(pa);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].members, std::vector<ElemId>{at(pa.E, "a")});
  EXPECT_TRUE(comps[0].cut.C1.empty());
  EXPECT_EQ(comps[1].members, (std::vector<ElemId>{at(pa.E, "a2"), at(pa.E, "b")}));
  EXPECT_EQ(comps[1].cut.C1.size(), 1U);
  // Elements in different components are always comparable.
  for (ElemId x : comps[0].members)
    for (ElemId y : comps[1].members) EXPECT_TRUE(pa.E.order().comparable(x, y));
}

TEST(LinearizePlain, IdenticalSides) {
  auto s = chain("S", {"x", "y"});
  const auto D = linearize_plain(amalgamate_posets({s, s, s}));
  EXPECT_EQ(ascending_names(D), (std::vector<std::string>{"x", "y"}));
}

TEST(LinearizePlain, AFirstInsideAComponent) {
  const AmalgamationTriple t{chain("A", {"a", "0"}), chain("B", {"b", "0"}), chain("C", {"0"})};
  EXPECT_EQ(ascending_names(linearize_plain(amalgamate_posets(t))), (std::vector<std::string>{"a", "b", "0"}));
}

TEST(LinearizePlain, AllSmallTriplesGiveLinearExtensionsWithInclusions) {
  for_each_triple(parse_class_spec("lo"), {4, false}, [&](const AmalgamationTriple& t) {
    const auto pa = amalgamate_posets(t);
    const auto D = linearize_plain(pa);
    ASSERT_TRUE(testing::naive_is_linear_order(D.order()));
    ASSERT_TRUE(extends_order(D, pa.E));
    ASSERT_TRUE(testing::naive_is_inclusion(t.A, D));
    ASSERT_TRUE(testing::naive_is_inclusion(t.B, D));
  });
}

TEST(BoundedExistsN, AbsentForIdentity) {
  const AmalgamationTriple t{chain("A", {"a", "c"}, {{"f", OpKind::preserving, {{"a", "a"}, {"c", "c"}}}}),
                             chain("B", {"b", "c"}, {{"f", OpKind::preserving, {{"b", "b"}, {"c", "c"}}}}),
                             chain("C", {"c"}, {{"f", OpKind::preserving, {{"c", "c"}}}})};
  const auto pa = amalgamate_posets(t);
  EXPECT_FALSE(bounded_exists_n(pa, pa.E.ops().front(), at(pa.E, "a"), at(pa.E, "b")).has_value());
}

TEST(BoundedExistsN, OneStepWitness) {
  const auto pa = amalgamate_posets(lop_example());
  EXPECT_EQ(bounded_exists_n(pa, pa.E.ops().front(), at(pa.E, "a"), at(pa.E, "b")), 1);
}

TEST(BoundedExistsN, OrbitsStabilizeWithinTheCarrierSize) {
  // For a total preserving f on a k-chain, f^n(x) is constant from n = k on.
  for (const auto& s : enumerate_class(parse_class_spec("lo_p"), 5)) {
    const UnaryOp& f = s.ops().front();
    for (ElemId x = 0; x < 5; ++x) {
      const ElemId at_k = f.iterate(x, 5);
      for (int n = 5; n <= 10; ++n) EXPECT_EQ(f.iterate(x, n), at_k);
    }
  }
}

TEST(LinearizeWithOp, IdentityOpMatchesPlain) {
  const AmalgamationTriple t{chain("A", {"a", "c"}, {{"f", OpKind::preserving, {{"a", "a"}, {"c", "c"}}}}),
                             chain("B", {"b", "c"}, {{"f", OpKind::preserving, {{"b", "b"}, {"c", "c"}}}}),
                             chain("C", {"c"}, {{"f", OpKind::preserving, {{"c", "c"}}}})};
  const auto pa = amalgamate_posets(t);
  EXPECT_EQ(linearize_with_op(pa).order(), linearize_plain(pa).order());
}

TEST(LinearizeWithOp, WitnessPutsBFirst) {
  const auto D = linearize_with_op(amalgamate_posets(lop_example()));
  EXPECT_EQ(ascending_names(D), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_TRUE(testing::naive_valid(D));
}

TEST(LinearizeWithOp, RejectsTwoOps) {
  const AmalgamationTriple t{
      chain("A", {"a"}, {{"f", OpKind::preserving, {{"a", "a"}}}, {"h", OpKind::preserving, {{"a", "a"}}}}),
      chain("B", {"b"}, {{"f", OpKind::preserving, {{"b", "b"}}}, {"h", OpKind::preserving, {{"b", "b"}}}}),
      chain("C", {}, {{"f", OpKind::preserving, {}}, {"h", OpKind::preserving, {}}})};
  try {
    linearize_with_op(amalgamate_posets(t));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MultipleOps);
  }
}

TEST(LinearizeWithOp, ExhaustiveUpToFiveAgreesWithOracle) {
  const auto spec = parse_class_spec("lo_p");
  std::size_t n = for_each_triple(spec, {5, true}, [&](const AmalgamationTriple& t) {
    const auto pa = amalgamate_posets(t);
    const auto D = linearize_with_op(pa);
    ASSERT_TRUE(testing::naive_valid(D));
    ASSERT_TRUE(testing::naive_is_linear_order(D.order()));
    ASSERT_TRUE(extends_order(D, pa.E));
    ASSERT_EQ(D.size(), pa.E.size());
    ASSERT_TRUE(testing::naive_is_inclusion(t.A, D));
    ASSERT_TRUE(testing::naive_is_inclusion(t.B, D));
    ASSERT_TRUE(strong_amalgam_search(t, spec).found());
  });
  EXPECT_GT(n, 1000U);
}

TEST(LinearizeAutomorphisms, EmptyFamilyMatchesPlain) {
  const AmalgamationTriple t{chain("A", {"a", "c"}), chain("B", {"b", "c"}), chain("C", {"c"})};
  const auto pa = amalgamate_posets(t);
  EXPECT_EQ(linearize_automorphisms(pa).order(), linearize_plain(pa).order());
}

TEST(LinearizeAutomorphisms, TwoAdditionsInOneGap) {
  auto id = [](const std::vector<std::string>& xs) {
    std::vector<std::pair<std::string, std::string>> g;
    for (const auto& x : xs) g.emplace_back(x, x);
    return g;
  };
  const AmalgamationTriple t{
      chain("A", {"c0", "a", "c1"}, {{"f", OpKind::automorphism, id({"c0", "a", "c1"})}}),
      chain("B", {"c0", "b", "c1"}, {{"f", OpKind::automorphism, id({"c0", "b", "c1"})}}),
      chain("C", {"c0", "c1"}, {{"f", OpKind::automorphism, id({"c0", "c1"})}})};
  const auto D = linearize_automorphisms(amalgamate_posets(t));
  EXPECT_EQ(ascending_names(D), (std::vector<std::string>{"c0", "a", "b", "c1"}));
  EXPECT_TRUE(testing::naive_valid(D));
}

TEST(LinearizeAutomorphisms, RejectsNonBijections) {
  EXPECT_THROW(linearize_automorphisms(amalgamate_posets(lop_example())), Error);
}

}  // namespace
}  // namespace ordamalg
