#include "ordamalg/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "ordamalg/canonical.hpp"
#include "ordamalg/error.hpp"

namespace ordamalg {

std::size_t size_cap(const ClassSpec& spec) {
  if (const char* env = std::getenv("ORDAMALG_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return spec.linearity == Linearity::linear ? 7 : 5;
}

std::vector<Relation> order_representatives(Linearity linearity, std::size_t n) {
  if (linearity == Linearity::linear) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) r.set(static_cast<ElemId>(i), static_cast<ElemId>(j));
    return {r};
  }
  // Every finite poset has a natural labelling, so upper-triangular orders cover all classes.
  std::vector<std::pair<ElemId, ElemId>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(static_cast<ElemId>(i), static_cast<ElemId>(j));
  std::map<CanonicalKey, Relation> seen;
  const std::size_t total = std::size_t{1} << slots.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    Relation r = Relation::identity(n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1U) r.set(slots[k].first, slots[k].second);
    if (!r.is_transitive()) continue;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    Structure s("P", names, r, Linearity::partial, {});
    seen.emplace(canonical_key(s), r);
  }
  std::vector<Relation> out;
  for (auto& [key, r] : seen) out.push_back(std::move(r));
  return out;
}

namespace {

bool pair_ok(const Relation& order, OpKind kind, ElemId x, ElemId fx, ElemId y, ElemId fy) {
  if (fx == kUndefined || fy == kUndefined) return true;
  const bool rev = is_reversing_kind(kind);
  const bool strict = is_strict_kind(kind);
  auto check = [&](ElemId lo, ElemId flo, ElemId hi, ElemId fhi) {
    if (!order(lo, hi) || lo == hi) return true;
    const ElemId a = rev ? fhi : flo;
    const ElemId b = rev ? flo : fhi;
    if (!order(a, b)) return false;
    return !strict || a != b;
  };
  return check(x, fx, y, fy) && check(y, fy, x, fx);
}

void graphs_rec(const Relation& order, OpKind kind, bool allow_partial, std::vector<ElemId>& g,
                std::size_t x, std::vector<char>& used, std::vector<std::vector<ElemId>>& out) {
  const std::size_t n = order.size();
  if (x == n) {
    out.push_back(g);
    return;
  }
  const bool bijective = requires_bijection(kind);
  const ElemId first = allow_partial && !bijective ? kUndefined : 0;
  for (ElemId v = first; v < static_cast<ElemId>(n); ++v) {
    if (bijective && used[static_cast<std::size_t>(v)]) continue;
    bool ok = true;
    for (std::size_t y = 0; y < x && ok; ++y)
      ok = pair_ok(order, kind, static_cast<ElemId>(x), v, static_cast<ElemId>(y), g[y]);
    if (!ok) continue;
    g[x] = v;
    if (bijective) used[static_cast<std::size_t>(v)] = 1;
    graphs_rec(order, kind, allow_partial, g, x + 1, used, out);
    if (bijective) used[static_cast<std::size_t>(v)] = 0;
  }
  g[x] = kUndefined;
}

}  // namespace

std::vector<std::vector<ElemId>> operation_graphs(const Relation& order, OpKind kind,
                                                  bool allow_partial) {
  std::vector<std::vector<ElemId>> out;
  std::vector<ElemId> g(order.size(), kUndefined);
  std::vector<char> used(order.size(), 0);
  graphs_rec(order, kind, allow_partial, g, 0, used, out);
  return out;
}

std::vector<Structure> enumerate_class(const ClassSpec& spec, std::size_t size) {
  if (size > size_cap(spec))
    throw Error(ErrorCode::SizeCapExceeded, "size " + std::to_string(size) + " exceeds the cap " +
                                                std::to_string(size_cap(spec)));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  std::map<CanonicalKey, Structure> found;
  for (const Relation& order : order_representatives(spec.linearity, size)) {
    std::vector<std::vector<std::vector<ElemId>>> choices;
    for (const auto& [sym, kind] : spec.signature)
      choices.push_back(operation_graphs(order, kind, spec.allow_partial));
    std::vector<std::size_t> pick(choices.size(), 0);
    const bool empty_choice =
        std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
    if (empty_choice) continue;
    while (true) {
      std::vector<UnaryOp> ops;
      for (std::size_t k = 0; k < choices.size(); ++k)
        ops.push_back({spec.signature[k].first, spec.signature[k].second, choices[k][pick[k]]});
      Structure s("S", names, order, spec.linearity, std::move(ops));
      if (is_member(s, spec)) {
        CanonicalKey key = canonical_key(s);
        if (!found.count(key)) found.emplace(std::move(key), canonical_form(s));
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  std::vector<Structure> out;
  for (auto& [key, s] : found) out.push_back(std::move(s));
  return out;
}

namespace {

Structure named(const Structure& s, const std::string& prefix) {
  NameMap m;
  for (std::size_t i = 0; i < s.size(); ++i) m[s.element(static_cast<ElemId>(i))] = prefix + std::to_string(i);
  return rename(s, m).with_name(prefix == "a" ? "A" : "B");
}

bool subset_closed(const Structure& a, unsigned mask) {
  for (const auto& op : a.ops())
    for (ElemId x = 0; x < static_cast<ElemId>(a.size()); ++x)
      if ((mask >> x & 1U) && op.defined(x) && !(mask >> op(x) & 1U)) return false;
  return true;
}

// Injective maps from `from` (indices into A) to B, lexicographic.
void injections(std::size_t k, std::size_t nb, std::vector<ElemId>& cur, std::vector<char>& used,
                const std::function<void()>& emit) {
  if (cur.size() == k) {
    emit();
    return;
  }
  for (ElemId v = 0; v < static_cast<ElemId>(nb); ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = 1;
    cur.push_back(v);
    injections(k, nb, cur, used, emit);
    cur.pop_back();
    used[static_cast<std::size_t>(v)] = 0;
  }
}

}  // namespace

std::size_t for_each_triple(const ClassSpec& spec, const TripleEnumeration& options,
                            const std::function<void(const AmalgamationTriple&)>& visit) {
  const std::size_t max_union = options.max_union;
  std::vector<std::vector<Structure>> as(max_union + 1);
  std::vector<std::vector<Structure>> bs(max_union + 1);
  for (std::size_t k = 0; k <= max_union; ++k) {
    for (const auto& s : enumerate_class(spec, k)) {
      as[k].push_back(named(s, "a"));
      bs[k].push_back(s);
    }
  }
  std::size_t visited = 0;
  auto emit = [&](const AmalgamationTriple& t) {
    ++visited;
    visit(t);
  };

  // A = C: one triple per member B and substructure C of B (up to isomorphism of the triple).
  if (!options.proper_only) {
    for (std::size_t nb = 0; nb <= max_union; ++nb) {
      for (const Structure& Braw : bs[nb]) {
        for (unsigned mask = 0; mask < (1U << nb); ++mask) {
          if (!subset_closed(Braw, mask)) continue;
          NameMap m;
          std::vector<ElemId> sub;
          int in_c = 0, fresh = 0;
          for (ElemId y = 0; y < static_cast<ElemId>(nb); ++y) {
            if (mask >> y & 1U) {
              sub.push_back(y);
              m[Braw.element(y)] = "a" + std::to_string(in_c++);
            } else {
              m[Braw.element(y)] = "b" + std::to_string(fresh++);
            }
          }
          const Structure B = rename(Braw, m).with_name("B");
          Structure C = B.restricted_to(sub).with_name("C");
          if (!is_member(C, spec)) continue;
          emit({C.with_name("A"), B, C});
        }
      }
    }
  }

  for (std::size_t na = 0; na <= max_union; ++na) {
    for (const Structure& A : as[na]) {
      for (unsigned mask = 0; mask < (1U << na); ++mask) {
        if (!subset_closed(A, mask)) continue;
        std::vector<ElemId> sub;
        for (ElemId x = 0; x < static_cast<ElemId>(na); ++x)
          if (mask >> x & 1U) sub.push_back(x);
        const std::size_t nc = sub.size();
        if (nc == na) continue;  // covered above
        Structure C = A.restricted_to(sub).with_name("C");
        if (!is_member(C, spec)) continue;
        // B = C.
        if (!options.proper_only) emit({A, C.with_name("B"), C});
        for (std::size_t nb = nc + 1; nb + na - nc <= max_union; ++nb) {
          for (const Structure& Braw : bs[nb]) {
            std::vector<ElemId> img;
            std::vector<char> used(nb, 0);
            injections(nc, nb, img, used, [&] {
              for (std::size_t i = 0; i < nc; ++i)
                for (std::size_t j = 0; j < nc; ++j)
                  if (A.leq(sub[i], sub[j]) != Braw.leq(img[i], img[j])) return;
              for (std::size_t k = 0; k < A.ops().size(); ++k) {
                const UnaryOp& fa = A.ops()[k];
                const UnaryOp& fb = Braw.ops()[k];
                for (std::size_t i = 0; i < nc; ++i) {
                  ElemId want = kUndefined;
                  if (fa.defined(sub[i])) {
                    const auto pos = std::find(sub.begin(), sub.end(), fa(sub[i])) - sub.begin();
                    want = img[static_cast<std::size_t>(pos)];
                  }
                  if (fb(img[i]) != want) return;
                }
              }
              NameMap m;
              std::vector<char> hit(nb, 0);
              for (std::size_t i = 0; i < nc; ++i) {
                m[Braw.element(img[i])] = A.element(sub[i]);
                hit[static_cast<std::size_t>(img[i])] = 1;
              }
              int fresh = 0;
              for (std::size_t y = 0; y < nb; ++y)
                if (!hit[y]) m[Braw.element(static_cast<ElemId>(y))] = "b" + std::to_string(fresh++);
              emit({A, rename(Braw, m).with_name("B"), C});
            });
          }
        }
      }
    }
  }
  return visited;
}

}  // namespace ordamalg
