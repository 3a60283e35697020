#include "ordamalg/amalgamate.hpp"

#include <algorithm>

#include "ordamalg/error.hpp"
#include "ordamalg/linearization.hpp"
#include "ordamalg/reversing.hpp"
#include "ordamalg/strict_identify.hpp"

namespace ordamalg {

std::string_view to_string(Procedure p) {
  switch (p) {
    case Procedure::poset: return "poset";
    case Procedure::plain: return "plain";
    case Procedure::with_op: return "with_op";
    case Procedure::strict: return "strict";
    case Procedure::reversing: return "reversing";
    case Procedure::automorphisms: return "automorphisms";
    case Procedure::fgac: return "fgac";
  }
  return "?";
}

std::optional<Procedure> procedure_for(const ClassSpec& spec) {
  if (spec.linearity == Linearity::partial) return Procedure::poset;
  const auto kinds = signature_kinds(spec);
  if (kinds.empty()) return Procedure::plain;
  if (kinds.size() == 1) {
    switch (kinds.front()) {
      case OpKind::preserving: return Procedure::with_op;
      case OpKind::strict_preserving:
      case OpKind::strict_reversing: return Procedure::strict;
      case OpKind::reversing: return Procedure::reversing;
      case OpKind::automorphism: return Procedure::automorphisms;
      case OpKind::antiautomorphism: return Procedure::fgac;
    }
  }
  const bool all_auto = std::all_of(kinds.begin(), kinds.end(),
                                    [](OpKind k) { return k == OpKind::automorphism; });
  if (all_auto) return Procedure::automorphisms;
  const bool bijective = std::all_of(kinds.begin(), kinds.end(), requires_bijection);
  if (bijective && spec.require_common_center) return Procedure::fgac;
  return std::nullopt;
}

std::string unsupported_reason(const ClassSpec& spec) {
  const auto kinds = signature_kinds(spec);
  auto count = [&](auto pred) { return std::count_if(kinds.begin(), kinds.end(), pred); };
  const auto reversing = count([](OpKind k) { return is_reversing_kind(k); });
  const auto preserving = static_cast<long>(kinds.size()) - reversing;
  const bool all_bijective = std::all_of(kinds.begin(), kinds.end(), requires_bijection);
  const bool all_strict = std::all_of(kinds.begin(), kinds.end(), is_strict_kind);
  std::string why = "class " + spec.text + " has no amalgamation procedure: ";
  if (all_bijective)
    return why + "antiautomorphisms without a required common center need not amalgamate "
                 "(counterexample thm43_b_iii)";
  if (reversing >= 2)
    return why + "two order reversing operations fail amalgamation even with a common center "
                 "(counterexamples thm43_b_i, thm43_b_iv)";
  if (reversing >= 1 && preserving >= 1)
    return why + "an order preserving and an order reversing operation fail amalgamation "
                 "(counterexample thm43_b_ii)";
  if (all_strict)
    return why + "two strict order preserving operations fail amalgamation "
                 "(counterexample thm31_c_ii)";
  return why + "two order preserving operations fail amalgamation (counterexample thm31_c_i)";
}

AmalgamResult amalgamate(const AmalgamationTriple& t, const ClassSpec& spec) {
  const auto proc = procedure_for(spec);
  if (!proc) throw Error(ErrorCode::UnsupportedClass, unsupported_reason(spec));
  for (const auto* s : {&t.A, &t.B, &t.C}) {
    const std::string why = membership_failure(*s, spec);
    if (!why.empty())
      throw Error(ErrorCode::InvalidArgument, "'" + s->name() + "' is not in class " + spec.text + ": " + why);
  }
  auto inclusions = [&](Structure D) {
    AmalgamResult r;
    r.e_A = inclusion_map(t.A, D);
    r.e_B = inclusion_map(t.B, D);
    r.D = std::move(D);
    return r;
  };
  switch (*proc) {
    case Procedure::poset: return inclusions(amalgamate_posets(t).E.with_name("D"));
    case Procedure::plain: return inclusions(linearize_plain(amalgamate_posets(t)));
    case Procedure::with_op: return inclusions(linearize_with_op(amalgamate_posets(t)));
    case Procedure::strict: return amalgamate_strict(t);
    case Procedure::reversing: return amalgamate_reversing(t);
    case Procedure::automorphisms: return inclusions(linearize_automorphisms(amalgamate_posets(t)));
    case Procedure::fgac: return inclusions(linearize_fgac(amalgamate_posets(t)));
  }
  throw Error(ErrorCode::UnsupportedClass, unsupported_reason(spec));
}

}  // namespace ordamalg
