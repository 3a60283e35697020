#include "ordamalg/poset_amalgam.hpp"

#include "ordamalg/error.hpp"

namespace ordamalg {

UnionLayout::UnionLayout(const AmalgamationTriple& t) {
  const auto na = static_cast<ElemId>(t.A.size());
  const auto nb = static_cast<ElemId>(t.B.size());
  from_a_.resize(static_cast<std::size_t>(na));
  from_b_.resize(static_cast<std::size_t>(nb));
  for (ElemId a = 0; a < na; ++a) {
    from_a_[static_cast<std::size_t>(a)] = a;
    a_of_.push_back(a);
    b_of_.push_back(kUndefined);
  }
  for (ElemId b = 0; b < nb; ++b) {
    if (auto a = t.A.index_of(t.B.element(b))) {
      from_b_[static_cast<std::size_t>(b)] = *a;
      b_of_[static_cast<std::size_t>(*a)] = b;
    } else {
      from_b_[static_cast<std::size_t>(b)] = static_cast<ElemId>(a_of_.size());
      a_of_.push_back(kUndefined);
      b_of_.push_back(b);
    }
  }
  for (const auto& name : t.C.elements()) c_members_.push_back(*t.A.index_of(name));
}

PosetAmalgam poset_amalgam(const AmalgamationTriple& t, const TripleOptions& options) {
  validate_triple(t, options);
  PosetAmalgam out;
  out.triple = t;
  out.layout = UnionLayout(t);
  const UnionLayout& L = out.layout;
  const auto n = static_cast<ElemId>(L.size());

  std::vector<std::string> names(L.size());
  for (ElemId d = 0; d < n; ++d)
    names[static_cast<std::size_t>(d)] = L.in_a(d) ? t.A.element(L.a_of(d)) : t.B.element(L.b_of(d));

  Relation leq(L.size());
  out.provenance.assign(L.size() * L.size(), Provenance{});
  auto record = [&](ElemId d, ElemId e, Clause clause, ElemId witness) {
    leq.set(d, e);
    out.provenance[static_cast<std::size_t>(d) * L.size() + static_cast<std::size_t>(e)] = {clause, witness};
  };
  for (ElemId d = 0; d < n; ++d) {
    for (ElemId e = 0; e < n; ++e) {
      if (L.in_a(d) && L.in_a(e)) {
        if (t.A.leq(L.a_of(d), L.a_of(e))) record(d, e, Clause::in_a, kUndefined);
        continue;
      }
      if (L.in_b(d) && L.in_b(e)) {
        if (t.B.leq(L.b_of(d), L.b_of(e))) record(d, e, Clause::in_b, kUndefined);
        continue;
      }
      // Exactly one of d, e lies in A \ C and the other in B \ C.
      const bool a_side = L.in_a(d);
      for (ElemId c : L.c_members()) {
        const bool first = a_side ? t.A.leq(L.a_of(d), L.a_of(c)) : t.B.leq(L.b_of(d), L.b_of(c));
        const bool second = a_side ? t.B.leq(L.b_of(c), L.b_of(e)) : t.A.leq(L.a_of(c), L.a_of(e));
        if (first && second) {
          record(d, e, a_side ? Clause::a_then_b : Clause::b_then_a, c);
          break;
        }
      }
    }
  }
  out.E = Structure("E", std::move(names), std::move(leq), Linearity::partial, {});
  return out;
}

PosetAmalgam extend_operations(const PosetAmalgam& amalgam) {
  PosetAmalgam out = amalgam;
  const auto& t = amalgam.triple;
  const UnionLayout& L = amalgam.layout;
  const auto n = static_cast<ElemId>(L.size());
  std::vector<UnaryOp> ops;
  for (const auto& fa : t.A.ops()) {
    const UnaryOp* fb = t.B.find_op(fa.symbol);
    if (fb == nullptr) throw Error(ErrorCode::OperationConflict, "B lacks op '" + fa.symbol + "'");
    UnaryOp f{fa.symbol, fa.kind, std::vector<ElemId>(L.size(), kUndefined)};
    for (ElemId d = 0; d < n; ++d) {
      ElemId va = kUndefined;
      ElemId vb = kUndefined;
      if (L.in_a(d) && fa.defined(L.a_of(d))) va = L.from_a(fa(L.a_of(d)));
      if (L.in_b(d) && fb->defined(L.b_of(d))) vb = L.from_b((*fb)(L.b_of(d)));
      if (va != kUndefined && vb != kUndefined && va != vb)
        throw Error(ErrorCode::OperationConflict,
                    "A and B disagree on " + fa.symbol + "(" + amalgam.E.element(d) + ")");
      f.graph[static_cast<std::size_t>(d)] = va != kUndefined ? va : vb;
    }
    ops.push_back(std::move(f));
  }
  out.E = amalgam.E.with_ops(std::move(ops));
  return out;
}

PosetAmalgam amalgamate_posets(const AmalgamationTriple& t, const TripleOptions& options) {
  return extend_operations(poset_amalgam(t, options));
}

bool check_superamalgamation(const Structure& E, const AmalgamationTriple& t) {
  std::vector<ElemId> c_in_a;
  std::vector<ElemId> c_in_b;
  for (const auto& name : t.C.elements()) {
    c_in_a.push_back(*t.A.index_of(name));
    c_in_b.push_back(*t.B.index_of(name));
  }
  auto e_index = [&](const std::string& name) {
    auto i = E.index_of(name);
    if (!i) throw Error(ErrorCode::InvalidArgument, "'" + name + "' missing from amalgam");
    return *i;
  };
  for (ElemId a = 0; a < static_cast<ElemId>(t.A.size()); ++a) {
    const ElemId ea = e_index(t.A.element(a));
    for (ElemId b = 0; b < static_cast<ElemId>(t.B.size()); ++b) {
      const ElemId eb = e_index(t.B.element(b));
      if (E.leq(ea, eb)) {
        bool witnessed = false;
        for (std::size_t k = 0; k < c_in_a.size() && !witnessed; ++k)
          witnessed = t.A.leq(a, c_in_a[k]) && t.B.leq(c_in_b[k], b);
        if (!witnessed) return false;
      }
      if (E.leq(eb, ea)) {
        bool witnessed = false;
        for (std::size_t k = 0; k < c_in_a.size() && !witnessed; ++k)
          witnessed = t.B.leq(b, c_in_b[k]) && t.A.leq(c_in_a[k], a);
        if (!witnessed) return false;
      }
    }
  }
  return true;
}

bool check_superamalgamation(const PosetAmalgam& amalgam) {
  return check_superamalgamation(amalgam.E, amalgam.triple);
}

}  // namespace ordamalg
