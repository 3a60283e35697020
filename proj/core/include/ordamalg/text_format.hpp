#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordamalg/structure.hpp"

namespace ordamalg {

// Line-oriented structure text format ('#' starts a comment):
//
//   structure <name>
//   elements: e1 e2 ...
//   order: linear e1 e2 ...          total order, ascending
//   order: pairs (e1,e2) (e2,e3)     generators; reflexive-transitive closure is taken
//   op <symbol> kind=<kind>: e1->e2 e2->e2 ...
//   end
//
// Outside structure blocks a document may carry embedding lines `map: a->x b->y`.

struct TextDocument {
  std::vector<Structure> structures;
  std::vector<NameMap> maps;
};

/// Throws Error(ParseError) with a "line N:" prefix.
TextDocument parse_document(std::string_view text);
std::vector<Structure> parse_structures(std::string_view text);
/// Exactly one structure expected.
Structure parse_structure(std::string_view text);

TextDocument read_document_file(const std::string& path);

std::string serialize(const Structure& s);
std::string serialize_map(const NameMap& map);

}  // namespace ordamalg
