#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordamalg/class_spec.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/error.hpp"
#include "ordamalg/oracle.hpp"
#include "ordamalg/strict_identify.hpp"

namespace ordamalg {
namespace {

using testing::chain;

constexpr OpKind kSp = OpKind::strict_preserving;

// a < 0 and b < 0 both sent to 0, with f undefined on 0.
AmalgamationTriple meeting_orbits() {
  return {chain("A", {"a", "0"}, {{"f", kSp, {{"a", "0"}}}}),
          chain("B", {"b", "0"}, {{"f", kSp, {{"b", "0"}}}}),
          chain("C", {"0"}, {{"f", kSp, {}}})};
}

TEST(Identification, OrbitsMeetingInC) {
  const auto t = meeting_orbits();
  const auto id = compute_identification(t);
  const ElemId a = *t.A.index_of("a");
  const ElemId b = *t.B.index_of("b");
  ASSERT_EQ(id.phi.count(a), 1U);
  EXPECT_EQ(id.phi.at(a), b);
  EXPECT_EQ(id.witness.at(a).n, 1);
  EXPECT_EQ(t.C.element(id.witness.at(a).c), "0");
  EXPECT_FALSE(id.trivial(t));
  EXPECT_FALSE(identification_property_holds(t));
}

TEST(Identification, TrivialWhenOrbitsAvoidEachOther) {
  const AmalgamationTriple t{chain("A", {"a", "0"}, {{"f", kSp, {{"a", "0"}}}}),
                             chain("B", {"0", "b"}, {{"f", kSp, {{"0", "b"}}}}),
                             chain("C", {"0"}, {{"f", kSp, {}}})};
  EXPECT_TRUE(compute_identification(t).trivial(t));
  EXPECT_TRUE(identification_property_holds(t));
}

TEST(Identification, WitnessLessFollowsTheOrderInC) {
  const AmalgamationTriple t{
      chain("A", {"a", "a1", "c", "c1"}, {{"f", kSp, {{"a", "c"}, {"a1", "c1"}}}}),
      chain("B", {"b", "b1", "c", "c1"}, {{"f", kSp, {{"b", "c"}, {"b1", "c1"}}}}),
      chain("C", {"c", "c1"}, {{"f", kSp, {}}})};
  const auto id = compute_identification(t);
  const ElemId a = *t.A.index_of("a");
  const ElemId a1 = *t.A.index_of("a1");
  EXPECT_EQ(witness_less(t, id, a, a1), std::optional<bool>(true));
  EXPECT_EQ(witness_less(t, id, a1, a), std::optional<bool>(false));
}

TEST(Identification, IdentifiedTripleMergesMatchedElements) {
  const auto it = build_identified_triple(meeting_orbits(), compute_identification(meeting_orbits()));
  EXPECT_EQ(it.triple.C.size(), 2U);
  EXPECT_TRUE(it.triple.B.contains("a"));
  EXPECT_EQ(it.b_names, (NameMap{{"b", "a"}}));
  EXPECT_NO_THROW(validate_triple(it.triple));
}

TEST(AmalgamateStrict, MergesTheTwoPreimages) {
  const auto t = meeting_orbits();
  const auto r = amalgamate_strict(t);
  EXPECT_EQ(r.D.size(), 2U);
  EXPECT_TRUE(is_embedding(t.A, r.D, r.e_A));
  EXPECT_TRUE(is_embedding(t.B, r.D, r.e_B));
  EXPECT_EQ(r.D.element(r.e_B.image[static_cast<std::size_t>(*t.B.index_of("b"))]), "a");
  // The two embeddings agree on C.
  for (const auto& c : t.C.elements())
    EXPECT_EQ(r.e_A.image[static_cast<std::size_t>(*t.A.index_of(c))],
              r.e_B.image[static_cast<std::size_t>(*t.B.index_of(c))]);
}

TEST(AmalgamateStrict, NoStrongAmalgamForMeetingOrbits) {
  auto spec = parse_class_spec("lo_sp");
  spec.allow_partial = true;
  EXPECT_FALSE(strong_amalgam_search(meeting_orbits(), spec).found());
}

TEST(AmalgamateStrict, RejectsNonStrictSignatures) {
  const AmalgamationTriple t{chain("A", {"a"}, {{"f", OpKind::preserving, {{"a", "a"}}}}),
                             chain("B", {"b"}, {{"f", OpKind::preserving, {{"b", "b"}}}}),
                             chain("C", {}, {{"f", OpKind::preserving, {}}})};
  EXPECT_THROW(compute_identification(t), Error);
}

// Total strictly reversing ops on a finite chain are exactly the reversal; every triple amalgamates.
TEST(AmalgamateStrict, TotalStrictReversingExhaustive) {
  const auto spec = parse_class_spec("lo_sr");
  std::size_t n = for_each_triple(spec, {5, false}, [&](const AmalgamationTriple& t) {
    const auto r = amalgamate_strict(t);
    ASSERT_TRUE(is_member(r.D, spec)) << membership_failure(r.D, spec);
    ASSERT_TRUE(is_embedding(t.A, r.D, r.e_A));
    ASSERT_TRUE(is_embedding(t.B, r.D, r.e_B));
  });
  EXPECT_GT(n, 0U);
}

// With partial ops the construction either fails loudly or returns a member with embeddings
// that agree on C; whenever it succeeds the oracle finds an amalgam too.
TEST(AmalgamateStrict, PartialStrictPreservingSmallTriples) {
  auto spec = parse_class_spec("lo_sp");
  spec.allow_partial = true;
  std::size_t built = 0;
  std::size_t failed = 0;
  for_each_triple(spec, {4, true}, [&](const AmalgamationTriple& t) {
    AmalgamResult r;
    try {
      r = amalgamate_strict(t);
    } catch (const Error& e) {
      ASSERT_TRUE(e.code() == ErrorCode::ConstructionFailed || e.code() == ErrorCode::PhiNotFunction ||
                  e.code() == ErrorCode::PhiNotOrderIso)
          << e.what();
      ++failed;
      return;
    }
    ++built;
    ASSERT_TRUE(is_member(r.D, spec)) << membership_failure(r.D, spec);
    ASSERT_TRUE(is_embedding(t.A, r.D, r.e_A));
    ASSERT_TRUE(is_embedding(t.B, r.D, r.e_B));
    for (const auto& c : t.C.elements())
      ASSERT_EQ(r.e_A.image[static_cast<std::size_t>(*t.A.index_of(c))],
                r.e_B.image[static_cast<std::size_t>(*t.B.index_of(c))]);
    ASSERT_TRUE(amalgam_search(t, spec, 0).found());
  });
  EXPECT_GT(built, failed);
}

}  // namespace
}  // namespace ordamalg
