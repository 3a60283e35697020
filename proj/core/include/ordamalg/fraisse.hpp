#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordamalg/class_spec.hpp"
#include "ordamalg/structure.hpp"

namespace ordamalg {

/// A ⊕ B: every element of A below every element of B, ops by graph union.
/// Throws CarrierOverlap on shared names, InvalidArgument on differing signatures or
/// non-linear inputs.
Structure jep_concatenate(const Structure& A, const Structure& B);

/// Indices of the substructure generated by `generators` (closure under every op, where defined).
std::vector<ElemId> generated(const Structure& s, const std::vector<ElemId>& generators);

/// Upper bound on the size of an n-generated member, when the class has a single op and an
/// every-quantified condition f^(m+1) = f^q with q <= m: each generator contributes at most
/// its orbit x, f(x), ..., f^m(x), so the bound is (m + 1) * n.
std::optional<std::size_t> generated_size_bound(const ClassSpec& spec, std::size_t n);

struct BoundReport {
  bool applicable = false;
  bool pass = true;
  std::uint64_t members = 0;
  std::uint64_t generator_sets = 0;
  std::string violation;  // first failing member and generator set

  std::string describe() const;
};

/// Checks generated_size_bound on every generator set of every enumerated member of size <= max_size.
BoundReport check_generated_size_bound(const ClassSpec& spec, std::size_t max_size);

/// S ⊆ T one-point class extension and an embedding e: S -> M that does not extend.
struct ExtensionWitness {
  Structure S;
  Structure T;
  std::string point;  // the element of T outside S
  NameMap e;          // S-name -> M-name
};

struct ExtensionReport {
  bool pass = true;
  std::size_t level = 0;
  std::uint64_t pairs = 0;       // (S, T) pairs examined
  std::uint64_t embeddings = 0;  // embeddings e examined
  std::optional<ExtensionWitness> witness;

  std::string describe() const;
};

/// Level-k extension property of M: every embedding of S into M extends to T into M, for every
/// class member T with |T| <= k and every element p of T whose removal leaves a substructure S
/// in the class. FAIL carries the first witness in canonical order.
ExtensionReport check_extension_property(const Structure& M, const ClassSpec& spec, std::size_t k);

/// Same quantifiers, but T only has to embed into N ⊇ M (the next stage of a chain).
ExtensionReport check_extension_into(const Structure& M, const Structure& N, const ClassSpec& spec,
                                     std::size_t k);

/// M' ⊇ M in the class such that every embedding S -> M extends to T -> M' for every S ⊆ T in
/// the class with |T| <= k. Missing extensions are realized one at a time by amalgamating T with
/// the current stage over the image of S, in canonical (T, S, e) order. New elements are named
/// x0, x1, ... skipping names already present. Throws ClassNotAmalgamable when the class has no
/// constructive procedure, SizeCapExceeded when k exceeds the enumeration cap.
Structure extension_step(const Structure& M, const ClassSpec& spec, std::size_t k);

struct FraisseChain {
  std::vector<Structure> stages;
  ClassSpec spec;
};

/// stages[0] = M0, stages[i + 1] = extension_step(stages[i]); stops early once a step adds nothing.
FraisseChain build_chain(const Structure& M0, const ClassSpec& spec, std::size_t k,
                         std::size_t steps);

/// Back-and-forth spot check: every isomorphism between substructures of M with fewer than k
/// elements extends to any one further point whose addition keeps the domain closed.
/// Returns the number of (isomorphism, point) cases, or nullopt on the first failure.
std::optional<std::uint64_t> check_one_point_homogeneity(const Structure& M, std::size_t k);

}  // namespace ordamalg
