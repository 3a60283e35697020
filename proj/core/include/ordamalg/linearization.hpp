#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordamalg/poset_amalgam.hpp"

namespace ordamalg {

/// A cut (C1, C2) of C, as D-indices sorted ascending by <=_E.
struct Cut {
  std::vector<ElemId> C1;
  std::vector<ElemId> C2;

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Elements of D \ C sitting in one cut, as D-indices in carrier order.
struct Component {
  Cut cut;
  std::vector<ElemId> members;
};

/// C1 = {c in C : c <_E d}, C2 = {c in C : d <_E c}. Throws ElementInC when d is in C.
Cut component_of(const PosetAmalgam& E, ElemId d);
Cut component_of(const PosetAmalgam& E, const std::string& name);

/// Nonempty components, ordered by ascending |C1|.
std::vector<Component> components(const PosetAmalgam& E);

/// Decides an <=_E-incomparable pair a in A \ C, b in B \ C: true puts b below a.
using PairRule = std::function<bool(ElemId a, ElemId b)>;

/// Keeps <=_E and resolves each incomparable pair by `b_before_a`. Throws NotLinearInputs
/// unless A and B are linear, ConstructionFailed when the result is not a linear order
/// (possible only with partial operations). The result carries E's operations.
Structure linearize_with_rule(const PosetAmalgam& E, const PairRule& b_before_a);

/// Every incomparable pair is resolved with the A element first.
Structure linearize_plain(const PosetAmalgam& E);

/// Least n in [1, n_max] with f^n(b) <_E f^n(a), both sides defined. n_max <= 0 means |A| + |B|.
std::optional<int> bounded_exists_n(const PosetAmalgam& E, const UnaryOp& f, ElemId a, ElemId b,
                                    int n_max = 0);

/// One order preserving op: within a component b < a iff bounded_exists_n finds a witness.
/// `E` must carry the extended op (see extend_operations). Throws MultipleOps, NotLinearInputs.
Structure linearize_with_op(const PosetAmalgam& E);

/// A family of automorphisms; incomparable pairs are resolved A-first. Throws NotBijective.
Structure linearize_automorphisms(const PosetAmalgam& E);

/// Total-order-extension check shared by the constructions and by tests.
bool extends_order(const Structure& D, const Structure& E);

}  // namespace ordamalg
