#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordamalg/class_spec.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/error.hpp"
#include "ordamalg/oracle.hpp"
#include "ordamalg/poset_amalgam.hpp"

namespace ordamalg {
namespace {

using testing::chain;

std::vector<char> same_side_pairs(const AmalgamationTriple& t, const Structure& E) {
  const std::size_t n = E.size();
  std::vector<char> fixed(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = E.element(static_cast<ElemId>(i));
      const auto& y = E.element(static_cast<ElemId>(j));
      fixed[i * n + j] = (t.A.contains(x) && t.A.contains(y)) || (t.B.contains(x) && t.B.contains(y));
    }
  return fixed;
}

TEST(LinearExtensions, MatchTheCount) {
  for (const auto& r : order_representatives(Linearity::partial, 4)) {
    const auto exts = linear_extensions(r);
    EXPECT_EQ(exts.size(), testing::count_linear_extensions(r));
    for (std::size_t i = 1; i < exts.size(); ++i) EXPECT_LT(exts[i - 1], exts[i]);
  }
}

TEST(LinearExtensions, AntichainOfFour) {
  EXPECT_EQ(linear_extensions(Relation::identity(4)).size(), 24U);
}

TEST(StrongSearch, CandidateCountsForChains) {
  const auto spec = parse_class_spec("lo_p");
  for_each_triple(spec, {4, false}, [&](const AmalgamationTriple& t) {
    const auto v = strong_amalgam_search(t, spec, {false, 1});
    const auto E = poset_amalgam(t).E;
    ASSERT_EQ(v.searched, testing::count_linear_extensions(E.order()));
    ASSERT_TRUE(v.found());
  });
}

TEST(StrongSearch, CandidateCountsForPosets) {
  const auto spec = parse_class_spec("po");
  for_each_triple(spec, {4, false}, [&](const AmalgamationTriple& t) {
    const auto v = strong_amalgam_search(t, spec, {false, 1});
    const auto E = poset_amalgam(t).E;
    ASSERT_EQ(v.searched, testing::count_partial_orders(E.order(), same_side_pairs(t, E)));
    ASSERT_EQ(v.valid, v.searched);
  });
}

TEST(StrongSearch, FindsAWitnessWithInclusions) {
  const AmalgamationTriple t{chain("A", {"a", "0"}), chain("B", {"b", "0"}), chain("C", {"0"})};
  const auto v = strong_amalgam_search(t, parse_class_spec("lo"));
  ASSERT_TRUE(v.found());
  EXPECT_EQ(v.kind, VerdictKind::StrongAmalgam);
  EXPECT_TRUE(testing::naive_is_inclusion(t.A, *v.D));
  EXPECT_TRUE(testing::naive_is_inclusion(t.B, *v.D));
}

TEST(StrongSearch, ThreadsGiveTheSameVerdict) {
  const auto spec = parse_class_spec("lo_p");
  for_each_triple(spec, {4, true}, [&](const AmalgamationTriple& t) {
    const auto one = strong_amalgam_search(t, spec, {false, 1});
    const auto four = strong_amalgam_search(t, spec, {false, 4});
    ASSERT_EQ(one.kind, four.kind);
    ASSERT_EQ(one.searched, four.searched);
    ASSERT_EQ(one.valid, four.valid);
    const auto first1 = strong_amalgam_search(t, spec, {true, 1});
    const auto first4 = strong_amalgam_search(t, spec, {true, 4});
    ASSERT_EQ(first1.D, first4.D);
  });
}

TEST(AmalgamSearch, IdentifiesWhenNothingElseWorks) {
  constexpr OpKind kSp = OpKind::strict_preserving;
  const AmalgamationTriple t{chain("A", {"a", "0"}, {{"f", kSp, {{"a", "0"}}}}),
                             chain("B", {"b", "0"}, {{"f", kSp, {{"b", "0"}}}}),
                             chain("C", {"0"}, {{"f", kSp, {}}})};
  auto spec = parse_class_spec("lo_sp");
  spec.allow_partial = true;
  EXPECT_EQ(strong_amalgam_search(t, spec).kind, VerdictKind::NoneWithinBounds);
  const auto v = amalgam_search(t, spec, 0);
  ASSERT_EQ(v.kind, VerdictKind::Amalgam);
  EXPECT_EQ(v.D->size(), 2U);
  EXPECT_EQ(v.b_names, (NameMap{{"b", "a"}}));
}

TEST(AmalgamSearch, ReportsStrongWhenPossible) {
  const AmalgamationTriple t{chain("A", {"a"}), chain("B", {"b"}), chain("C", {})};
  EXPECT_EQ(amalgam_search(t, parse_class_spec("lo"), 1).kind, VerdictKind::StrongAmalgam);
}

TEST(AmalgamSearch, BoundsAreChecked) {
  const AmalgamationTriple t{chain("A", {"a"}), chain("B", {"b"}), chain("C", {})};
  try {
    amalgam_search(t, parse_class_spec("lo"), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundsExceeded);
  }
  EXPECT_THROW(amalgam_search(t, parse_class_spec("lo"), -1), Error);
}

}  // namespace
}  // namespace ordamalg
