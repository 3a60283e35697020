#pragma once

#include <vector>

#include "ordamalg/structure.hpp"

namespace ordamalg {

/// Isomorphism-invariant encoding: the lexicographically least encoding of
/// (order matrix, op graphs in symbol order) over all carrier bijections onto {0..n-1}.
/// Exact, exponential in the carrier size; intended for n <= 8.
using CanonicalKey = std::vector<int>;

CanonicalKey canonical_key(const Structure& s);

/// Isomorphic copy realizing canonical_key, elements named e0, e1, ... by position.
Structure canonical_form(const Structure& s);

/// Brute-force isomorphism test over all bijections; independent of canonical_key.
bool isomorphic_brute_force(const Structure& a, const Structure& b);

}  // namespace ordamalg
