#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordamalg/relation.hpp"

namespace ordamalg {

enum class OpKind {
  preserving,
  strict_preserving,
  reversing,
  strict_reversing,
  automorphism,
  antiautomorphism,
};

std::string_view to_string(OpKind kind);
std::optional<OpKind> parse_op_kind(std::string_view text);

/// True for kinds whose monotonicity runs backwards (reversing, strict_reversing, antiautomorphism).
bool is_reversing_kind(OpKind kind);
/// True for kinds that must be total bijections.
bool requires_bijection(OpKind kind);
/// True for kinds that forbid collapsing a strict pair (strict_* and the bijective kinds).
bool is_strict_kind(OpKind kind);

enum class Linearity { partial, linear };

/// A tagged partial unary operation. graph[x] is the image of x or kUndefined.
struct UnaryOp {
  std::string symbol;
  OpKind kind = OpKind::preserving;
  std::vector<ElemId> graph;

  bool defined(ElemId x) const { return graph[static_cast<std::size_t>(x)] != kUndefined; }
  ElemId operator()(ElemId x) const { return graph[static_cast<std::size_t>(x)]; }
  bool total() const;
  bool bijective() const;

  /// n-fold iterate; kUndefined as soon as an intermediate value is undefined.
  ElemId iterate(ElemId x, int n) const;

  friend bool operator==(const UnaryOp&, const UnaryOp&) = default;
};

using NameMap = std::map<std::string, std::string>;

/// Element names: nonempty, no whitespace, and none of  ( ) , #  or the arrow "->".
bool is_valid_element_name(std::string_view name);
bool is_valid_symbol(std::string_view symbol);

/// A finite carrier with an order relation and a family of tagged partial unary operations.
///
/// Construction checks only shape (unique names, matrix size, op images in range, unique
/// symbols); order-theoretic invariants are reported by validate(). Operations are kept
/// sorted by symbol. Equality ignores the structure's display name.
class Structure {
 public:
  Structure() = default;
  Structure(std::string name, std::vector<std::string> elements, Relation order,
            Linearity linearity, std::vector<UnaryOp> ops);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element(ElemId i) const { return elements_[static_cast<std::size_t>(i)]; }
  std::optional<ElemId> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  const Relation& order() const noexcept { return order_; }
  bool leq(ElemId i, ElemId j) const { return order_(i, j); }
  bool less(ElemId i, ElemId j) const { return order_.strictly(i, j); }

  Linearity linearity() const noexcept { return linearity_; }
  bool is_linear() const noexcept { return linearity_ == Linearity::linear; }

  const std::vector<UnaryOp>& ops() const noexcept { return ops_; }
  const UnaryOp* find_op(std::string_view symbol) const;

  /// Elements sorted ascending; only meaningful when the order is total.
  std::vector<ElemId> ascending() const;

  Structure with_name(std::string name) const;
  Structure with_linearity(Linearity linearity) const;
  Structure with_ops(std::vector<UnaryOp> ops) const;

  /// Induced substructure on the given indices, in that order. Operation values that leave
  /// the subset become undefined.
  Structure restricted_to(const std::vector<ElemId>& indices) const;

  /// Induced substructure without the named element (which must exist).
  Structure without(std::string_view name) const;

  friend bool operator==(const Structure& a, const Structure& b);

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::unordered_map<std::string, ElemId> index_;
  Relation order_;
  Linearity linearity_ = Linearity::partial;
  std::vector<UnaryOp> ops_;
};

/// Name-based convenience construction. The order is the reflexive-transitive closure of
/// the given generator pairs (or the chain, when chain() was used).
class StructureBuilder {
 public:
  explicit StructureBuilder(std::string name = "S") : name_(std::move(name)) {}

  StructureBuilder& elements(std::vector<std::string> names);
  /// Sets the elements (if not yet set) and a linear order ascending in the given sequence.
  StructureBuilder& chain(std::vector<std::string> ascending);
  StructureBuilder& less(const std::string& lo, const std::string& hi);
  StructureBuilder& linearity(Linearity linearity);
  StructureBuilder& op(std::string symbol, OpKind kind,
                       std::vector<std::pair<std::string, std::string>> graph);

  Structure build() const;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::pair<std::string, std::string>> pairs_;
  std::optional<Linearity> linearity_;
  struct PendingOp {
    std::string symbol;
    OpKind kind;
    std::vector<std::pair<std::string, std::string>> graph;
  };
  std::vector<PendingOp> ops_;
};

enum class ViolationKind {
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  NotTotal,
  OpNotTotal,
  OpNotBijective,
  Monotonicity,
  Strictness,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

/// Every violated structural invariant; empty report iff the structure is valid.
ValidationReport validate(const Structure& s);

/// Only the operation checks for one op (monotonicity per kind, totality, bijectivity).
void validate_op(const Structure& s, const UnaryOp& op, ValidationReport& report);

/// image[i] is the target index of source element i.
struct EmbeddingMap {
  std::vector<ElemId> image;

  friend bool operator==(const EmbeddingMap&, const EmbeddingMap&) = default;
};

/// Order embedding (preserves and reflects) that commutes with every shared op wherever the
/// source value is defined. Throws MapNotInjective / ImageOutsideTarget, InvalidArgument when
/// the map is not total on the source.
bool is_embedding(const Structure& source, const Structure& target, const EmbeddingMap& map);

/// Map sending every source element to the same-named target element.
EmbeddingMap inclusion_map(const Structure& source, const Structure& target);
EmbeddingMap map_from_names(const Structure& source, const Structure& target,
                            const NameMap& names);
/// Like map_from_names, but names absent from `renames` map to the same name.
EmbeddingMap map_with_renames(const Structure& source, const Structure& target,
                              const NameMap& renames);
NameMap names_of(const Structure& source, const Structure& target, const EmbeddingMap& map);

/// Rename elements; names absent from the map keep their name.
Structure rename(const Structure& s, const NameMap& names);
NameMap inverse(const NameMap& names);

struct TripleOptions {
  bool allow_empty_c = true;
};

/// A, B, C in inclusion form: carrier(C) = carrier(A) ∩ carrier(B).
struct AmalgamationTriple {
  Structure A;
  Structure B;
  Structure C;
};

/// Throws InvalidTriple describing the first broken triple invariant.
void validate_triple(const AmalgamationTriple& t, const TripleOptions& options = {});

/// C = A restricted to the common names. Throws IntersectionMismatch when A and B induce
/// different order or operation values on the common part, InvalidTriple on signature
/// mismatch (or an empty intersection when forbidden).
AmalgamationTriple intersect_to_triple(const Structure& A, const Structure& B,
                                       const TripleOptions& options = {});

/// Op symbols with kinds, in symbol order.
std::vector<std::pair<std::string, OpKind>> signature(const Structure& s);

}  // namespace ordamalg
