#include "ordamalg/reversing.hpp"

#include "ordamalg/error.hpp"
#include "ordamalg/linearization.hpp"

namespace ordamalg {

std::string_view to_string(Position p) {
  switch (p) {
    case Position::lower: return "lower";
    case Position::upper: return "upper";
    case Position::center: return "center";
    case Position::untagged: return "untagged";
  }
  return "?";
}

CenterClassification classify(const Structure& s, const UnaryOp& g) {
  CenterClassification out;
  out.tags.assign(s.size(), Position::untagged);
  const auto n = static_cast<ElemId>(s.size());
  for (ElemId d = 0; d < n; ++d) {
    if (!g.defined(d)) continue;
    const ElemId gd = g(d);
    if (gd == d) {
      if (out.center)
        throw Error(ErrorCode::MultipleCenters, "'" + s.element(*out.center) + "' and '" +
                                                    s.element(d) + "' are both fixed by " + g.symbol);
      out.center = d;
      out.tags[static_cast<std::size_t>(d)] = Position::center;
    } else if (s.less(gd, d)) {
      out.tags[static_cast<std::size_t>(d)] = Position::upper;
    } else if (s.less(d, gd)) {
      out.tags[static_cast<std::size_t>(d)] = Position::lower;
    }
  }
  if (out.center) {
    const ElemId c = *out.center;
    for (ElemId d = 0; d < n; ++d) {
      if (g.defined(d)) continue;
      if (s.less(d, c)) out.tags[static_cast<std::size_t>(d)] = Position::lower;
      else if (s.less(c, d)) out.tags[static_cast<std::size_t>(d)] = Position::upper;
    }
  }
  return out;
}

const UnaryOp& sole_reversing_op(const Structure& s) {
  if (s.ops().size() != 1 || !is_reversing_kind(s.ops().front().kind))
    throw Error(ErrorCode::InvalidArgument,
                "expected exactly one order reversing operation on '" + s.name() + "'");
  return s.ops().front();
}

Structure add_center(const Structure& s, const std::string& center_name) {
  const UnaryOp& g = sole_reversing_op(s);
  if (!g.total())
    throw Error(ErrorCode::InvalidArgument, "adding a center needs a total operation");
  const CenterClassification cls = classify(s, g);
  if (cls.center)
    throw Error(ErrorCode::CenterExists, "'" + s.element(*cls.center) + "' is already a center");
  if (s.contains(center_name))
    throw Error(ErrorCode::NameCollision, "center name '" + center_name + "' is already in use");

  const std::size_t n = s.size();
  const auto c = static_cast<ElemId>(n);
  std::vector<std::string> names = s.elements();
  names.push_back(center_name);
  Relation order(n + 1);
  for (ElemId d = 0; d < c; ++d)
    for (ElemId e = 0; e < c; ++e) order.set(d, e, s.leq(d, e));
  order.set(c, c);
  for (ElemId d = 0; d < c; ++d) {
    if (cls.tags[static_cast<std::size_t>(d)] == Position::lower) order.set(d, c);
    else order.set(c, d);
  }
  UnaryOp g2 = g;
  g2.graph.push_back(c);
  return Structure(s.name(), std::move(names), std::move(order), s.linearity(), {std::move(g2)});
}

AlignedTriple align_centers(const AmalgamationTriple& t, const std::string& fresh_name) {
  auto center_name = [](const Structure& s) -> std::optional<std::string> {
    auto c = classify(s, sole_reversing_op(s)).center;
    if (!c) return std::nullopt;
    return s.element(*c);
  };
  AlignedTriple out;
  const auto cc = center_name(t.C);
  if (cc) {
    out.triple = t;
    out.center = *cc;
    return out;
  }
  const auto ca = center_name(t.A);
  const auto cb = center_name(t.B);
  if (ca && cb) {
    out.b_names[*cb] = *ca;
    out.triple = intersect_to_triple(t.A, rename(t.B, out.b_names));
    out.center = *ca;
  } else if (ca) {
    out.triple = intersect_to_triple(t.A, add_center(t.B, *ca));
    out.center = *ca;
  } else if (cb) {
    out.triple = intersect_to_triple(add_center(t.A, *cb), t.B);
    out.center = *cb;
  } else {
    out.triple = intersect_to_triple(add_center(t.A, fresh_name), add_center(t.B, fresh_name));
    out.center = fresh_name;
    out.fresh_center = true;
  }
  return out;
}

AltOrder alt_compare(const PosetAmalgam& E, int n, ElemId d, ElemId e) {
  if (d == e) return AltOrder::equal;
  bool below = E.E.less(d, e);
  bool above = E.E.less(e, d);
  if (n % 2 != 0) std::swap(below, above);
  if (below) return AltOrder::below;
  if (above) return AltOrder::above;
  return AltOrder::incomparable;
}

std::optional<int> bounded_exists_alt(const PosetAmalgam& E, const UnaryOp& g, ElemId x, ElemId y,
                                      int n_max) {
  if (n_max <= 0) n_max = 2 * static_cast<int>(E.triple.A.size() + E.triple.B.size());
  for (int k = 1; k <= n_max; ++k) {
    x = g(x);
    y = g(y);
    if (x == kUndefined || y == kUndefined) return std::nullopt;
    if (alt_compare(E, k, x, y) == AltOrder::below) return k;
  }
  return std::nullopt;
}

Structure linearize_reversing(const PosetAmalgam& E) {
  if (E.E.ops().size() != 1)
    throw Error(ErrorCode::MultipleOps, "exactly one operation is supported, got " +
                                            std::to_string(E.E.ops().size()));
  const UnaryOp& g = E.E.ops().front();
  if (!is_reversing_kind(g.kind))
    throw Error(ErrorCode::InvalidArgument, "op '" + g.symbol + "' must be order reversing");
  const Structure& C = E.triple.C;
  const auto center = classify(C, sole_reversing_op(C)).center;
  if (!center) throw Error(ErrorCode::NotAligned, "C has no center; align the triple first");
  const ElemId c = E.layout.from_a(*E.triple.A.index_of(C.element(*center)));
  return linearize_with_rule(E, [&](ElemId a, ElemId b) {
    if (E.E.leq(a, c)) return bounded_exists_alt(E, g, b, a).has_value();
    return !bounded_exists_alt(E, g, a, b).has_value();
  });
}

AmalgamResult amalgamate_reversing(const AmalgamationTriple& t) {
  const AlignedTriple aligned = align_centers(t);
  Structure D = linearize_reversing(amalgamate_posets(aligned.triple));
  if (aligned.fresh_center) D = D.without(aligned.center);
  AmalgamResult out;
  out.e_A = map_with_renames(t.A, D, {});
  out.e_B = map_with_renames(t.B, D, aligned.b_names);
  out.b_names = aligned.b_names;
  out.D = std::move(D);
  return out;
}

std::optional<ElemId> common_center(const Structure& s) {
  for (ElemId c = 0; c < static_cast<ElemId>(s.size()); ++c) {
    bool fixed = true;
    for (const auto& op : s.ops()) fixed = fixed && op(c) == c;
    if (fixed) return c;
  }
  return std::nullopt;
}

Structure linearize_fgac(const PosetAmalgam& E) {
  bool has_reversing = false;
  for (const auto* s : {&E.triple.A, &E.triple.B}) {
    for (const auto& op : s->ops()) {
      if (!op.total() || !op.bijective())
        throw Error(ErrorCode::NotBijective,
                    "op '" + op.symbol + "' is not a bijection of " + s->name());
      has_reversing = has_reversing || is_reversing_kind(op.kind);
    }
  }
  if (!has_reversing) return linearize_plain(E);
  const auto center = common_center(E.triple.C);
  if (!center) throw Error(ErrorCode::NoCommonCenter, "the operations share no center in C");
  const ElemId c = E.layout.from_a(*E.triple.A.index_of(E.triple.C.element(*center)));
  return linearize_with_rule(E, [&](ElemId a, ElemId) { return E.E.less(c, a); });
}

}  // namespace ordamalg
