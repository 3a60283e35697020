#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ordamalg/poset_amalgam.hpp"

namespace ordamalg {

/// Elements of A (resp. B) whose f-orbit meets C at the same point and step as some element of
/// the other side, with the matching phi : C_A -> C_B.
struct IdentificationData {
  struct Witness {
    int n = 0;
    ElemId c = kUndefined;  // index in C
  };

  std::vector<ElemId> C_A;  // A indices, carrier order
  std::vector<ElemId> C_B;  // B indices, carrier order
  std::map<ElemId, ElemId> phi;
  std::map<ElemId, Witness> witness;  // least n with f_A^n(a) = c = f_B^n(phi(a))

  /// True when phi only relates the elements of C to themselves.
  bool trivial(const AmalgamationTriple& t) const;
};

/// Requires exactly one op of a strict kind. n ranges over [0, n_max]; n_max <= 0 means |A| + |B|.
/// Throws PhiNotFunction when the witnesses do not define a bijection, PhiNotOrderIso when phi
/// fails to preserve and reflect the order or to commute with f.
IdentificationData compute_identification(const AmalgamationTriple& t, int n_max = 0);

/// For a, a1 in C_A with witnesses (n, c), (m, c1), m >= n and r = m - n:
/// a < a1 iff f_C^r(c) <^m c1, computed inside C, where <^m flips with the parity of m for
/// reversing kinds. The roles swap when n > m. Empty when f_C^r(c) is undefined.
std::optional<bool> witness_less(const AmalgamationTriple& t, const IdentificationData& id,
                                 ElemId a, ElemId a1);

struct IdentifiedTriple {
  AmalgamationTriple triple;
  NameMap b_names;  // B-name -> A-name for the identified elements outside C
};

/// Renames phi(a) to a in B for every a in C_A \ C, then intersects: the new C is C_1 ≅ C_A.
IdentifiedTriple build_identified_triple(const AmalgamationTriple& t, const IdentificationData& id);

/// f_A(a) = c = f_B(b) with c in C implies that a and b are the same element of C.
bool identification_property_holds(const AmalgamationTriple& t);

/// Identification followed by linearize_with_op (strict preserving), or by center alignment,
/// identification and linearize_reversing (strict reversing). The output is validated;
/// ConstructionFailed when it is not a class member.
AmalgamResult amalgamate_strict(const AmalgamationTriple& t);

}  // namespace ordamalg
