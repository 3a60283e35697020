#pragma once

// Reference computations written from the definitions, sharing no code with the library's
// algorithms. Tests compare library results against these.

#include <cstdint>
#include <string>
#include <vector>

#include "ordamalg/structure.hpp"

namespace ordamalg::testing {

/// Number of linear extensions, by dynamic programming over down-sets (bitmasks).
std::uint64_t count_linear_extensions(const Relation& order);

/// Number of partial orders R on n elements that contain `base` and agree with it on every pair
/// marked in `fixed` (row-major n*n), by brute force over all relations. n <= 5.
std::uint64_t count_partial_orders(const Relation& base, const std::vector<char>& fixed);

/// Reflexive, antisymmetric, transitive and total, checked triple by triple.
bool naive_is_linear_order(const Relation& r);
bool naive_is_partial_order(const Relation& r);

/// Definitional monotonicity of one op for its kind, over all pairs where both values exist.
bool naive_op_respects_kind(const Structure& s, const UnaryOp& op);

/// Valid order and every op respecting its kind (bijective kinds total and bijective).
bool naive_valid(const Structure& s);

/// map[name in src] = name in dst; order preserved and reflected, ops commute where defined in src.
bool naive_is_embedding(const Structure& src, const Structure& dst, const NameMap& map);

/// Embedding by identical names.
bool naive_is_inclusion(const Structure& src, const Structure& dst);

/// Chain with the given ascending element names and ops (symbol, kind, graph by names).
struct OpSpec {
  std::string symbol;
  OpKind kind;
  std::vector<std::pair<std::string, std::string>> graph;
};
Structure chain(const std::string& name, const std::vector<std::string>& ascending,
                const std::vector<OpSpec>& ops = {});

}  // namespace ordamalg::testing
