#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordamalg/class_spec.hpp"
#include "ordamalg/structure.hpp"

namespace ordamalg {

enum class VerdictKind { StrongAmalgam, Amalgam, NoneWithinBounds };

std::string_view to_string(VerdictKind kind);

struct SearchOptions {
  bool stop_at_first = true;
  unsigned threads = 1;
};

/// Either a concrete amalgam with embeddings of A and B, or exhaustion of the declared bounds.
struct OracleVerdict {
  VerdictKind kind = VerdictKind::NoneWithinBounds;
  std::optional<Structure> D;
  EmbeddingMap e_A;
  EmbeddingMap e_B;
  NameMap b_names;              // B-name -> D-name where they differ
  std::uint64_t searched = 0;   // candidates examined
  std::uint64_t valid = 0;      // validating candidates (all of them unless stop_at_first)
  std::string bounds;

  bool found() const { return kind != VerdictKind::NoneWithinBounds; }
};

/// All linear extensions of a partial order, in lexicographic order of the element sequence
/// (bottom first, ties broken by index).
std::vector<std::vector<ElemId>> linear_extensions(const Relation& order);

/// Tries every order on A ∪ B that restricts to <=_A and <=_B (every linear extension of the
/// poset amalgam for linear classes), with ops extended by graph union and, for partial classes,
/// every completion of undefined values (undefined first). An order whose defined part already
/// violates monotonicity counts as one candidate. The first candidate that is a class member wins.
OracleVerdict strong_amalgam_search(const AmalgamationTriple& t, const ClassSpec& spec,
                                    const SearchOptions& options = {});

/// Like strong_amalgam_search over quotients of A ∪ B: for extra = 0..max_extra fresh elements
/// and injective matchings of A \ C with B \ C of increasing size. StrongAmalgam is reported when
/// no elements were identified. Throws BoundsExceeded when max_extra is outside [0, 3].
OracleVerdict amalgam_search(const AmalgamationTriple& t, const ClassSpec& spec, int max_extra,
                             const SearchOptions& options = {});

}  // namespace ordamalg
