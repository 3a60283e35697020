#pragma once

#include <vector>

#include "ordamalg/structure.hpp"

namespace ordamalg {

/// Index bookkeeping for D = A ∪ B: A's elements first (in A's order), then B \ C.
class UnionLayout {
 public:
  UnionLayout() = default;
  explicit UnionLayout(const AmalgamationTriple& t);

  std::size_t size() const noexcept { return a_of_.size(); }
  ElemId from_a(ElemId a) const { return from_a_[static_cast<std::size_t>(a)]; }
  ElemId from_b(ElemId b) const { return from_b_[static_cast<std::size_t>(b)]; }
  /// kUndefined when d is not in A (resp. B).
  ElemId a_of(ElemId d) const { return a_of_[static_cast<std::size_t>(d)]; }
  ElemId b_of(ElemId d) const { return b_of_[static_cast<std::size_t>(d)]; }

  bool in_a(ElemId d) const { return a_of(d) != kUndefined; }
  bool in_b(ElemId d) const { return b_of(d) != kUndefined; }
  bool in_c(ElemId d) const { return in_a(d) && in_b(d); }

  /// D-indices of C, in C's carrier order.
  const std::vector<ElemId>& c_members() const noexcept { return c_members_; }

 private:
  std::vector<ElemId> from_a_;
  std::vector<ElemId> from_b_;
  std::vector<ElemId> a_of_;
  std::vector<ElemId> b_of_;
  std::vector<ElemId> c_members_;
};

/// Which clause of the amalgam order produced d <= e.
enum class Clause {
  none,
  in_a,       // d, e in A and d <=_A e
  in_b,       // d, e in B and d <=_B e (and not both in A)
  a_then_b,   // d in A, e in B, d <=_A c <=_B e
  b_then_a,   // d in B, e in A, d <=_B c <=_A e
};

struct Provenance {
  Clause clause = Clause::none;
  ElemId witness = kUndefined;  // D-index of c for the cross clauses
};

struct PosetAmalgam {
  AmalgamationTriple triple;
  UnionLayout layout;
  Structure E;  // carrier A ∪ B, linearity partial
  std::vector<Provenance> provenance;

  const Provenance& why(ElemId d, ElemId e) const {
    return provenance[static_cast<std::size_t>(d) * layout.size() + static_cast<std::size_t>(e)];
  }
};

/// An amalgam together with embeddings of the original A and B. When the construction had to
/// rename or identify elements, `b_names` records B-name -> D-name for the changed ones.
struct AmalgamResult {
  Structure D;
  EmbeddingMap e_A;
  EmbeddingMap e_B;
  NameMap b_names;
};

/// The smallest order on A ∪ B extending both sides: <=_A ∪ <=_B ∪ (<=_A∘<=_B) ∪ (<=_B∘<=_A).
/// The result carries no operations; see extend_operations. Throws InvalidTriple.
PosetAmalgam poset_amalgam(const AmalgamationTriple& t, const TripleOptions& options = {});

/// Each op becomes f_A ∪ f_B on A ∪ B. Throws OperationConflict if A and B disagree on C.
PosetAmalgam extend_operations(const PosetAmalgam& amalgam);

/// poset_amalgam followed by extend_operations.
PosetAmalgam amalgamate_posets(const AmalgamationTriple& t, const TripleOptions& options = {});

/// For every a in A, b in B with a <=_E b there is c in C with a <=_A c <=_B b, and
/// symmetrically. `E` must have carrier A ∪ B (by name).
bool check_superamalgamation(const Structure& E, const AmalgamationTriple& t);
bool check_superamalgamation(const PosetAmalgam& amalgam);

}  // namespace ordamalg
