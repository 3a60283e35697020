#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordamalg/poset_amalgam.hpp"

namespace ordamalg {

/// Reserved name for a freshly added center.
inline constexpr const char* kFreshCenter = "⊙";

enum class Position { lower, upper, center, untagged };

std::string_view to_string(Position p);

struct CenterClassification {
  std::vector<Position> tags;  // indexed like the structure's carrier
  std::optional<ElemId> center;
};

/// lower if g(d) > d, upper if g(d) < d, center if g(d) = d. Where g is undefined the element is
/// tagged by its position relative to the center, or untagged without one.
/// Throws MultipleCenters.
CenterClassification classify(const Structure& s, const UnaryOp& g);

/// The single order reversing op of `s`; throws InvalidArgument otherwise.
const UnaryOp& sole_reversing_op(const Structure& s);

/// S* = S plus a fixed point of g placed above all lower and below all upper elements.
/// Requires exactly one op, reversing and total. Throws CenterExists, NameCollision.
Structure add_center(const Structure& s, const std::string& center_name = kFreshCenter);

struct AlignedTriple {
  AmalgamationTriple triple;
  NameMap b_names;             // original B-name -> aligned name, for renamed elements
  bool fresh_center = false;   // true when the common center is a new element in all three
  std::string center;
};

/// Makes A, B and C share one named center (adding and renaming centers as needed).
AlignedTriple align_centers(const AmalgamationTriple& t, const std::string& fresh_name = kFreshCenter);

/// Result of comparing d and e under <_E^n (<_E for even n, >_E for odd n).
enum class AltOrder { below, above, incomparable, equal };

AltOrder alt_compare(const PosetAmalgam& E, int n, ElemId d, ElemId e);

/// Least n in [1, n_max] with g^n(x) <_E^n g^n(y). n_max <= 0 means 2(|A| + |B|).
std::optional<int> bounded_exists_alt(const PosetAmalgam& E, const UnaryOp& g, ElemId x, ElemId y,
                                      int n_max = 0);

/// Linearizes the amalgam of an aligned triple with one order reversing op: lower components
/// put b first iff g^n(b) <_E^n g^n(a) for some n, upper components put a first iff
/// g^n(a) <_E^n g^n(b) for some n. Throws NotAligned when C has no center.
Structure linearize_reversing(const PosetAmalgam& E);

/// align_centers, poset amalgam, linearize_reversing. A center that was new in all three
/// structures is removed again, so D is built on A ∪ B.
AmalgamResult amalgamate_reversing(const AmalgamationTriple& t);

/// Automorphisms and antiautomorphisms with a common center c in C: <=_E pairs are kept,
/// incomparable pairs below c go A-first, above c B-first. Throws NotBijective, NoCommonCenter.
Structure linearize_fgac(const PosetAmalgam& E);

/// The common fixed point in C of every op, if any.
std::optional<ElemId> common_center(const Structure& s);

}  // namespace ordamalg
