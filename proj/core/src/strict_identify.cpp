#include "ordamalg/strict_identify.hpp"

#include <set>

#include "ordamalg/error.hpp"
#include "ordamalg/linearization.hpp"
#include "ordamalg/reversing.hpp"

namespace ordamalg {
namespace {

const UnaryOp& sole_strict_op(const Structure& s) {
  if (s.ops().size() != 1)
    throw Error(ErrorCode::MultipleOps, "strict identification needs exactly one operation");
  const UnaryOp& f = s.ops().front();
  if (!is_strict_kind(f.kind))
    throw Error(ErrorCode::InvalidArgument, "op '" + f.symbol + "' is not of a strict kind");
  return f;
}

// For each x of `from`, the elements y of `to` and least step n with f^n(x) = c = f^n(y).
struct SideMatch {
  std::map<ElemId, std::set<ElemId>> partners;
  std::map<ElemId, IdentificationData::Witness> witness;
};

SideMatch match_side(const Structure& from, const Structure& to, const Structure& C, int n_max) {
  const UnaryOp& ff = from.ops().front();
  const UnaryOp& ft = to.ops().front();
  // iterates of `to` that land in C, keyed by (n, c).
  std::map<std::pair<int, ElemId>, std::vector<ElemId>> landing;
  for (ElemId y = 0; y < static_cast<ElemId>(to.size()); ++y) {
    ElemId v = y;
    for (int n = 0; n <= n_max && v != kUndefined; ++n, v = ft(v))
      if (auto c = C.index_of(to.element(v))) landing[{n, *c}].push_back(y);
  }
  SideMatch out;
  for (ElemId x = 0; x < static_cast<ElemId>(from.size()); ++x) {
    ElemId v = x;
    for (int n = 0; n <= n_max && v != kUndefined; ++n, v = ff(v)) {
      auto c = C.index_of(from.element(v));
      if (!c) continue;
      auto it = landing.find({n, *c});
      if (it == landing.end()) continue;
      if (!out.witness.count(x)) out.witness[x] = {n, *c};
      out.partners[x].insert(it->second.begin(), it->second.end());
    }
  }
  return out;
}

bool alt_less(const Structure& s, ElemId x, ElemId y, int m, bool reversing) {
  if (reversing && m % 2 != 0) std::swap(x, y);
  return s.less(x, y);
}

}  // namespace

bool IdentificationData::trivial(const AmalgamationTriple& t) const {
  for (const auto& [a, b] : phi)
    if (!t.C.contains(t.A.element(a)) || t.A.element(a) != t.B.element(b)) return false;
  return true;
}

IdentificationData compute_identification(const AmalgamationTriple& t, int n_max) {
  const UnaryOp& fa = sole_strict_op(t.A);
  sole_strict_op(t.B);
  if (n_max <= 0) n_max = static_cast<int>(t.A.size() + t.B.size());

  const SideMatch from_a = match_side(t.A, t.B, t.C, n_max);
  const SideMatch from_b = match_side(t.B, t.A, t.C, n_max);

  IdentificationData id;
  for (const auto& [a, partners] : from_a.partners) {
    if (partners.size() != 1)
      throw Error(ErrorCode::PhiNotFunction,
                  "'" + t.A.element(a) + "' matches several elements of B");
    id.C_A.push_back(a);
    id.phi[a] = *partners.begin();
    id.witness[a] = from_a.witness.at(a);
  }
  std::set<ElemId> image;
  for (const auto& [a, b] : id.phi) {
    if (!image.insert(b).second)
      throw Error(ErrorCode::PhiNotFunction, "'" + t.B.element(b) + "' matches several elements of A");
  }
  for (const auto& [b, partners] : from_b.partners) {
    id.C_B.push_back(b);
    if (!image.count(b))
      throw Error(ErrorCode::PhiNotFunction, "'" + t.B.element(b) + "' has no preimage");
  }
  if (image.size() != id.C_B.size())
    throw Error(ErrorCode::PhiNotFunction, "phi is not onto C_B");

  const UnaryOp& fb = t.B.ops().front();
  for (const auto& [a, b] : id.phi) {
    for (const auto& [a1, b1] : id.phi) {
      if (t.A.less(a, a1) != t.B.less(b, b1))
        throw Error(ErrorCode::PhiNotOrderIso, "phi does not preserve the order of '" +
                                                   t.A.element(a) + "' and '" + t.A.element(a1) + "'");
    }
    if (fa.defined(a)) {
      auto it = id.phi.find(fa(a));
      if (it == id.phi.end() || fb(b) != it->second)
        throw Error(ErrorCode::PhiNotOrderIso,
                    "phi does not commute with " + fa.symbol + " at '" + t.A.element(a) + "'");
    }
  }
  return id;
}

std::optional<bool> witness_less(const AmalgamationTriple& t, const IdentificationData& id,
                                 ElemId a, ElemId a1) {
  const auto& w = id.witness.at(a);
  const auto& w1 = id.witness.at(a1);
  const UnaryOp& fc = t.C.ops().front();
  const bool reversing = is_reversing_kind(fc.kind);
  if (w1.n >= w.n) {
    const ElemId shifted = fc.iterate(w.c, w1.n - w.n);
    if (shifted == kUndefined) return std::nullopt;
    return alt_less(t.C, shifted, w1.c, w1.n, reversing);
  }
  const ElemId shifted = fc.iterate(w1.c, w.n - w1.n);
  if (shifted == kUndefined) return std::nullopt;
  return a != a1 && !alt_less(t.C, shifted, w.c, w.n, reversing);
}

IdentifiedTriple build_identified_triple(const AmalgamationTriple& t, const IdentificationData& id) {
  IdentifiedTriple out;
  for (const auto& [a, b] : id.phi) {
    const std::string& an = t.A.element(a);
    const std::string& bn = t.B.element(b);
    if (an != bn) out.b_names[bn] = an;
  }
  out.triple = out.b_names.empty() ? t : intersect_to_triple(t.A, rename(t.B, out.b_names));
  return out;
}

bool identification_property_holds(const AmalgamationTriple& t) {
  for (std::size_t k = 0; k < t.A.ops().size(); ++k) {
    const UnaryOp& fa = t.A.ops()[k];
    const UnaryOp& fb = t.B.ops()[k];
    for (ElemId a = 0; a < static_cast<ElemId>(t.A.size()); ++a) {
      if (!fa.defined(a) || !t.C.contains(t.A.element(fa(a)))) continue;
      for (ElemId b = 0; b < static_cast<ElemId>(t.B.size()); ++b) {
        if (!fb.defined(b) || t.B.element(fb(b)) != t.A.element(fa(a))) continue;
        if (t.A.element(a) != t.B.element(b) || !t.C.contains(t.A.element(a))) return false;
      }
    }
  }
  return true;
}

AmalgamResult amalgamate_strict(const AmalgamationTriple& t) {
  const UnaryOp& f = sole_strict_op(t.A);
  AmalgamResult out;
  Structure D;
  NameMap b_names;
  if (!is_reversing_kind(f.kind)) {
    const IdentifiedTriple it = build_identified_triple(t, compute_identification(t));
    D = linearize_with_op(amalgamate_posets(it.triple));
    b_names = it.b_names;
  } else {
    const AlignedTriple aligned = align_centers(t);
    const IdentifiedTriple it =
        build_identified_triple(aligned.triple, compute_identification(aligned.triple));
    D = linearize_reversing(amalgamate_posets(it.triple));
    if (aligned.fresh_center) D = D.without(aligned.center);
    for (const auto& name : t.B.elements()) {
      std::string cur = name;
      if (auto i = aligned.b_names.find(cur); i != aligned.b_names.end()) cur = i->second;
      if (auto i = it.b_names.find(cur); i != it.b_names.end()) cur = i->second;
      if (cur != name) b_names[name] = cur;
    }
  }
  const ValidationReport report = validate(D);
  if (!report.ok())
    throw Error(ErrorCode::ConstructionFailed, "strict amalgam does not validate: " + report.summary());
  out.e_A = map_with_renames(t.A, D, {});
  out.e_B = map_with_renames(t.B, D, b_names);
  out.b_names = std::move(b_names);
  out.D = std::move(D);
  return out;
}

}  // namespace ordamalg
