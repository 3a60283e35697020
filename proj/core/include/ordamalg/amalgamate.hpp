#pragma once

#include <optional>
#include <string>

#include "ordamalg/class_spec.hpp"
#include "ordamalg/poset_amalgam.hpp"

namespace ordamalg {

enum class Procedure {
  poset,          // poset amalgam with operations extended by union
  plain,          // linear, no operations
  with_op,        // one order preserving operation
  strict,         // one strict operation, via identification
  reversing,      // one order reversing operation, via center alignment
  automorphisms,  // automorphisms only
  fgac,           // automorphisms and antiautomorphisms with a common center
};

std::string_view to_string(Procedure p);

/// The constructive procedure for a class, if there is one.
std::optional<Procedure> procedure_for(const ClassSpec& spec);

/// Why a class has no procedure, naming the registry entry that refutes amalgamation.
std::string unsupported_reason(const ClassSpec& spec);

/// Runs the class's procedure on a triple of class members. Throws UnsupportedClass when the
/// class has none, InvalidArgument when a structure of the triple is not a class member.
AmalgamResult amalgamate(const AmalgamationTriple& t, const ClassSpec& spec);

}  // namespace ordamalg
