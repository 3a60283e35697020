#include "ordamalg/linearization.hpp"

#include <algorithm>
#include <map>

#include "ordamalg/error.hpp"

namespace ordamalg {
namespace {

bool is_chain(const Structure& s) { return s.is_linear() && s.order().is_total(); }

void require_linear_inputs(const PosetAmalgam& E) {
  if (!is_chain(E.triple.A) || !is_chain(E.triple.B))
    throw Error(ErrorCode::NotLinearInputs, "A and B must be linearly ordered");
}

void sort_by_order(std::vector<ElemId>& xs, const Structure& s) {
  std::sort(xs.begin(), xs.end(), [&](ElemId x, ElemId y) { return s.less(x, y); });
}

}  // namespace

Cut component_of(const PosetAmalgam& E, ElemId d) {
  if (E.layout.in_c(d))
    throw Error(ErrorCode::ElementInC, "'" + E.E.element(d) + "' belongs to C");
  Cut cut;
  for (ElemId c : E.layout.c_members()) {
    if (E.E.less(c, d)) cut.C1.push_back(c);
    else if (E.E.less(d, c)) cut.C2.push_back(c);
  }
  sort_by_order(cut.C1, E.E);
  sort_by_order(cut.C2, E.E);
  return cut;
}

Cut component_of(const PosetAmalgam& E, const std::string& name) {
  auto d = E.E.index_of(name);
  if (!d) throw Error(ErrorCode::UnknownName, "no element '" + name + "' in the amalgam");
  return component_of(E, *d);
}

std::vector<Component> components(const PosetAmalgam& E) {
  std::vector<Component> out;
  std::map<std::vector<ElemId>, std::size_t> by_lower;
  for (ElemId d = 0; d < static_cast<ElemId>(E.layout.size()); ++d) {
    if (E.layout.in_c(d)) continue;
    Cut cut = component_of(E, d);
    auto [it, fresh] = by_lower.try_emplace(cut.C1, out.size());
    if (fresh) out.push_back(Component{std::move(cut), {}});
    out[it->second].members.push_back(d);
  }
  std::stable_sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    return x.cut.C1.size() < y.cut.C1.size();
  });
  return out;
}

Structure linearize_with_rule(const PosetAmalgam& E, const PairRule& b_before_a) {
  require_linear_inputs(E);
  const UnionLayout& L = E.layout;
  const auto n = static_cast<ElemId>(L.size());
  Relation order(L.size());
  for (ElemId d = 0; d < n; ++d) {
    for (ElemId e = 0; e < n; ++e) {
      if (E.E.leq(d, e)) {
        order.set(d, e);
      } else if (!E.E.leq(e, d)) {
        // Linear A and B leave only cross pairs between A \ C and B \ C incomparable.
        const bool d_in_a = L.in_a(d);
        const ElemId a = d_in_a ? d : e;
        const ElemId b = d_in_a ? e : d;
        const bool b_first = b_before_a(a, b);
        if (d_in_a != b_first) order.set(d, e);
      }
    }
  }
  if (!order.is_partial_order() || !order.is_total())
    throw Error(ErrorCode::ConstructionFailed,
                "the component rule does not produce a linear order on these inputs");
  return Structure("D", E.E.elements(), std::move(order), Linearity::linear, E.E.ops());
}

Structure linearize_plain(const PosetAmalgam& E) {
  return linearize_with_rule(E, [](ElemId, ElemId) { return false; });
}

std::optional<int> bounded_exists_n(const PosetAmalgam& E, const UnaryOp& f, ElemId a, ElemId b,
                                    int n_max) {
  if (n_max <= 0) n_max = static_cast<int>(E.triple.A.size() + E.triple.B.size());
  ElemId x = a;
  ElemId y = b;
  for (int k = 1; k <= n_max; ++k) {
    x = f(x);
    y = f(y);
    if (x == kUndefined || y == kUndefined) return std::nullopt;
    if (E.E.less(y, x)) return k;
  }
  return std::nullopt;
}

Structure linearize_with_op(const PosetAmalgam& E) {
  require_linear_inputs(E);
  if (E.E.ops().size() != 1)
    throw Error(ErrorCode::MultipleOps, "exactly one operation is supported, got " +
                                            std::to_string(E.E.ops().size()));
  const UnaryOp& f = E.E.ops().front();
  if (is_reversing_kind(f.kind))
    throw Error(ErrorCode::InvalidArgument, "op '" + f.symbol + "' must be order preserving");
  return linearize_with_rule(
      E, [&](ElemId a, ElemId b) { return bounded_exists_n(E, f, a, b).has_value(); });
}

Structure linearize_automorphisms(const PosetAmalgam& E) {
  for (const auto* s : {&E.triple.A, &E.triple.B}) {
    for (const auto& op : s->ops()) {
      if (!op.total() || !op.bijective())
        throw Error(ErrorCode::NotBijective,
                    "op '" + op.symbol + "' is not a bijection of " + s->name());
      if (is_reversing_kind(op.kind))
        throw Error(ErrorCode::InvalidArgument, "op '" + op.symbol + "' must be an automorphism");
    }
  }
  return linearize_plain(E);
}

bool extends_order(const Structure& D, const Structure& E) {
  for (ElemId d = 0; d < static_cast<ElemId>(E.size()); ++d) {
    for (ElemId e = 0; e < static_cast<ElemId>(E.size()); ++e) {
      if (!E.leq(d, e)) continue;
      auto dd = D.index_of(E.element(d));
      auto de = D.index_of(E.element(e));
      if (!dd || !de || !D.leq(*dd, *de)) return false;
    }
  }
  return true;
}

}  // namespace ordamalg
