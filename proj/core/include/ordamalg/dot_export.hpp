#pragma once

#include <string>

#include "ordamalg/structure.hpp"

namespace ordamalg {

/// Graphviz rendering, byte-for-byte deterministic:
///
///   digraph "<structure name>" {
///     "<element>";                                    one line per element, carrier order
///     "<x>" -> "<y>";                                 one line per covering pair x < y
///     "<x>" -> "<f(x)>" [style=dashed, label="<f>"];  op edges, ops by symbol, then carrier order
///   }
///
/// Cover edges are sorted by the carrier positions of (x, y). Identifiers are double-quoted with
/// '"' and '\' escaped by a backslash. Lines are indented by two spaces and end in '\n'.
std::string export_dot(const Structure& s);

}  // namespace ordamalg
