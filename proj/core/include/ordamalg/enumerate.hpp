#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ordamalg/class_spec.hpp"

namespace ordamalg {

/// Largest carrier enumerate_class accepts: 7 for linear classes, 5 for partial orders,
/// overridden by the ORDAMALG_SIZE_CAP environment variable.
std::size_t size_cap(const ClassSpec& spec);

/// One order relation per isomorphism class of (linear or partial) orders on n elements.
std::vector<Relation> order_representatives(Linearity linearity, std::size_t n);

/// Every op graph of the given kind on an order of size n (undefined values allowed when
/// `allow_partial`), in lexicographic order of the graph with undefined first.
std::vector<std::vector<ElemId>> operation_graphs(const Relation& order, OpKind kind,
                                                  bool allow_partial);

/// One member per isomorphism class, elements named e0, e1, ..., sorted by canonical key.
/// Throws SizeCapExceeded.
std::vector<Structure> enumerate_class(const ClassSpec& spec, std::size_t size);

struct TripleEnumeration {
  std::size_t max_union = 4;
  /// Skip triples with A = C or B = C.
  bool proper_only = false;
};

/// All amalgamation triples of class members with |A ∪ B| <= max_union: A and B range over
/// enumerate_class representatives, C over substructures of A that are class members, and C is
/// placed into B by every injective map under which it is a substructure of B. When A = C or
/// B = C the triple is determined by the other side and its substructure, so those are visited
/// once per (structure, substructure) rather than once per placement. A's elements are named
/// a0.., B's new elements b0.. . Returns the number of triples visited.
std::size_t for_each_triple(const ClassSpec& spec, const TripleEnumeration& options,
                            const std::function<void(const AmalgamationTriple&)>& visit);

}  // namespace ordamalg
