#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordamalg/class_spec.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/error.hpp"
#include "ordamalg/poset_amalgam.hpp"

namespace ordamalg {
namespace {

using testing::chain;

ElemId at(const Structure& s, const std::string& name) { return *s.index_of(name); }

// Order on A ∪ B straight from the definition: x <= y iff some path through at most one C point.
bool definitional_leq(const AmalgamationTriple& t, const std::string& x, const std::string& y) {
  auto le = [](const Structure& s, const std::string& p, const std::string& q) {
    return s.contains(p) && s.contains(q) && s.leq(*s.index_of(p), *s.index_of(q));
  };
  if (le(t.A, x, y) || le(t.B, x, y)) return true;
  for (const auto& c : t.C.elements())
    if ((le(t.A, x, c) && le(t.B, c, y)) || (le(t.B, x, c) && le(t.A, c, y))) return true;
  return false;
}

AmalgamationTriple example_36(bool with_h) {
  std::vector<testing::OpSpec> a_ops{{"f", OpKind::preserving, {{"a", "0"}, {"0", "0"}}}};
  std::vector<testing::OpSpec> b_ops{{"f", OpKind::preserving, {{"b", "b"}, {"0", "0"}}}};
  std::vector<testing::OpSpec> c_ops{{"f", OpKind::preserving, {{"0", "0"}}}};
  if (with_h) {
    a_ops.push_back({"h", OpKind::preserving, {{"a", "a"}, {"0", "0"}}});
    b_ops.push_back({"h", OpKind::preserving, {{"b", "0"}, {"0", "0"}}});
    c_ops.push_back({"h", OpKind::preserving, {{"0", "0"}}});
  }
  return {chain("A", {"a", "0"}, a_ops), chain("B", {"b", "0"}, b_ops), chain("C", {"0"}, c_ops)};
}

TEST(PosetAmalgam, IdenticalSidesGiveTheSameOrder) {
  auto s = chain("S", {"x", "y", "z"});
  const auto pa = poset_amalgam({s, s, s});
  EXPECT_EQ(pa.E.order(), s.order());
}

TEST(PosetAmalgam, CrossPairThroughCommonPoint) {
  const AmalgamationTriple t{chain("A", {"a", "c"}), chain("B", {"c", "b"}), chain("C", {"c"})};
  const auto pa = poset_amalgam(t);
  const auto& E = pa.E;
  EXPECT_TRUE(E.less(at(E, "a"), at(E, "b")));
  EXPECT_EQ(pa.why(at(E, "a"), at(E, "b")).clause, Clause::a_then_b);
  EXPECT_EQ(pa.why(at(E, "a"), at(E, "b")).witness, at(E, "c"));
  EXPECT_EQ(pa.why(at(E, "a"), at(E, "c")).clause, Clause::in_a);
}

TEST(PosetAmalgam, PointsInTheSameGapStayIncomparable) {
  const AmalgamationTriple t{chain("A", {"c0", "a", "c1"}), chain("B", {"c0", "b", "c1"}), chain("C", {"c0", "c1"})};
  const auto& E = poset_amalgam(t).E;
  EXPECT_FALSE(E.order().comparable(at(E, "a"), at(E, "b")));
}

TEST(PosetAmalgam, MatchesDefinitionAndIsPartialOrderOnAllSmallTriples) {
  const auto spec = parse_class_spec("po");
  std::size_t n = for_each_triple(spec, {4, false}, [&](const AmalgamationTriple& t) {
    const auto pa = poset_amalgam(t);
    ASSERT_TRUE(testing::naive_is_partial_order(pa.E.order()));
    for (const auto& x : pa.E.elements())
      for (const auto& y : pa.E.elements())
        ASSERT_EQ(pa.E.leq(at(pa.E, x), at(pa.E, y)), definitional_leq(t, x, y));
    ASSERT_TRUE(check_superamalgamation(pa));
  });
  EXPECT_GT(n, 500U);
}

TEST(ExtendOperations, IdentityStaysIdentity) {
  auto id = [](const std::vector<std::string>& xs) {
    std::vector<std::pair<std::string, std::string>> g;
    for (const auto& x : xs) g.emplace_back(x, x);
    return g;
  };
  const AmalgamationTriple t{chain("A", {"a", "c"}, {{"f", OpKind::preserving, id({"a", "c"})}}),
                             chain("B", {"c", "b"}, {{"f", OpKind::preserving, id({"c", "b"})}}),
                             chain("C", {"c"}, {{"f", OpKind::preserving, id({"c"})}})};
  const auto pa = amalgamate_posets(t);
  const UnaryOp& f = pa.E.ops().front();
  for (ElemId x = 0; x < static_cast<ElemId>(pa.E.size()); ++x) EXPECT_EQ(f(x), x);
}

TEST(ExtendOperations, CounterexampleOpsStayMonotoneOnThePosetAmalgam) {
  const auto pa = amalgamate_posets(example_36(true));
  for (const auto& op : pa.E.ops()) EXPECT_TRUE(testing::naive_op_respects_kind(pa.E, op)) << op.symbol;
  EXPECT_TRUE(validate(pa.E).ok());
}

TEST(ExtendOperations, ConflictOnCIsRejected) {
  AmalgamationTriple t{chain("A", {"c", "d"}, {{"f", OpKind::preserving, {{"c", "c"}, {"d", "d"}}}}),
                       chain("B", {"c", "d"}, {{"f", OpKind::preserving, {{"c", "d"}, {"d", "d"}}}}),
                       chain("C", {"c", "d"}, {{"f", OpKind::preserving, {{"c", "c"}, {"d", "d"}}}})};
  EXPECT_THROW(amalgamate_posets(t), Error);
}

TEST(ExtendOperations, LinearPreservingTriplesStayMonotone) {
  const auto spec = parse_class_spec("lo_p");
  for_each_triple(spec, {5, true}, [&](const AmalgamationTriple& t) {
    const auto pa = amalgamate_posets(t);
    ASSERT_TRUE(testing::naive_op_respects_kind(pa.E, pa.E.ops().front()));
  });
}

TEST(Superamalgamation, DetectsACrossPairWithoutWitness) {
  const AmalgamationTriple t{chain("A", {"c0", "a", "c1"}), chain("B", {"c0", "b", "c1"}), chain("C", {"c0", "c1"})};
  const auto pa = poset_amalgam(t);
  EXPECT_TRUE(check_superamalgamation(pa));
  Relation r = pa.E.order();
  r.set(at(pa.E, "a"), at(pa.E, "b"));
  Structure forced("E", pa.E.elements(), r, Linearity::partial, {});
  EXPECT_FALSE(check_superamalgamation(forced, t));
}

TEST(Superamalgamation, VacuousWhenAllSidesCoincide) {
  auto s = chain("S", {"x", "y"});
  EXPECT_TRUE(check_superamalgamation(poset_amalgam({s, s, s})));
}

}  // namespace
}  // namespace ordamalg
