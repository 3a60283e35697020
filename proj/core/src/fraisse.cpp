#include "ordamalg/fraisse.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ordamalg/amalgamate.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/error.hpp"

namespace ordamalg {

Structure jep_concatenate(const Structure& A, const Structure& B) {
  if (!A.is_linear() || !B.is_linear())
    throw Error(ErrorCode::InvalidArgument, "concatenation needs linear structures");
  if (signature(A) != signature(B))
    throw Error(ErrorCode::InvalidArgument, "concatenation needs equal signatures");
  for (const auto& name : B.elements())
    if (A.contains(name)) throw Error(ErrorCode::CarrierOverlap, "element '" + name + "' is in both carriers");

  const std::size_t na = A.size();
  const std::size_t n = na + B.size();
  std::vector<std::string> names = A.elements();
  names.insert(names.end(), B.elements().begin(), B.elements().end());
  Relation order(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = static_cast<ElemId>(i);
      const auto b = static_cast<ElemId>(j);
      bool le = false;
      if (i < na && j < na) le = A.leq(a, b);
      else if (i >= na && j >= na) le = B.leq(static_cast<ElemId>(i - na), static_cast<ElemId>(j - na));
      else le = i < na;
      if (le) order.set(a, b);
    }
  }
  std::vector<UnaryOp> ops;
  for (std::size_t k = 0; k < A.ops().size(); ++k) {
    UnaryOp op{A.ops()[k].symbol, A.ops()[k].kind, A.ops()[k].graph};
    for (ElemId v : B.ops()[k].graph)
      op.graph.push_back(v == kUndefined ? kUndefined : static_cast<ElemId>(v + static_cast<ElemId>(na)));
    ops.push_back(std::move(op));
  }
  return Structure("D", std::move(names), std::move(order), Linearity::linear, std::move(ops));
}

std::vector<ElemId> generated(const Structure& s, const std::vector<ElemId>& generators) {
  std::vector<char> in(s.size(), 0);
  std::vector<ElemId> queue;
  for (ElemId g : generators) {
    if (!in[static_cast<std::size_t>(g)]) {
      in[static_cast<std::size_t>(g)] = 1;
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& op : s.ops()) {
      const ElemId y = op(queue[head]);
      if (y != kUndefined && !in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::optional<std::size_t> generated_size_bound(const ClassSpec& spec, std::size_t n) {
  if (spec.signature.size() != 1) return std::nullopt;
  std::optional<std::size_t> best;
  for (const auto& c : spec.conditions) {
    if (c.kind != Condition::Kind::IterEq || !c.every || c.n > c.m || c.m < 0) continue;
    if (c.symbol != spec.signature.front().first) continue;
    const std::size_t bound = static_cast<std::size_t>(c.m + 1) * n;
    if (!best || bound < *best) best = bound;
  }
  return best;
}

std::string BoundReport::describe() const {
  if (!applicable) return "no generated-substructure bound applies to this class";
  std::string out = std::string(pass ? "PASS" : "FAIL") + " generated-substructure bound on " +
                    std::to_string(members) + " members, " + std::to_string(generator_sets) +
                    " generator sets";
  if (!violation.empty()) out += "; " + violation;
  return out;
}

BoundReport check_generated_size_bound(const ClassSpec& spec, std::size_t max_size) {
  BoundReport report;
  report.applicable = generated_size_bound(spec, 1).has_value();
  if (!report.applicable) return report;
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (const Structure& s : enumerate_class(spec, size)) {
      ++report.members;
      for (unsigned mask = 0; mask < (1U << size); ++mask) {
        std::vector<ElemId> gens;
        for (std::size_t i = 0; i < size; ++i)
          if (mask >> i & 1U) gens.push_back(static_cast<ElemId>(i));
        ++report.generator_sets;
        const std::size_t got = generated(s, gens).size();
        const std::size_t bound = *generated_size_bound(spec, gens.size());
        if (got > bound && report.pass) {
          report.pass = false;
          report.violation = std::to_string(gens.size()) + " generators of a " + std::to_string(size) +
                             "-element member generate " + std::to_string(got) + " > " + std::to_string(bound);
        }
      }
    }
  }
  return report;
}

namespace {

// Whether the assignment of x is consistent with every assigned element (x included).
bool consistent(const Structure& src, const Structure& dst, const std::vector<ElemId>& img, ElemId x) {
  const ElemId fx = img[static_cast<std::size_t>(x)];
  for (ElemId y = 0; y < static_cast<ElemId>(src.size()); ++y) {
    const ElemId fy = img[static_cast<std::size_t>(y)];
    if (fy == kUndefined) continue;
    if (src.leq(x, y) != dst.leq(fx, fy) || src.leq(y, x) != dst.leq(fy, fx)) return false;
  }
  for (std::size_t k = 0; k < src.ops().size(); ++k) {
    const UnaryOp& f = src.ops()[k];
    const UnaryOp& g = dst.ops()[k];
    for (ElemId y = 0; y < static_cast<ElemId>(src.size()); ++y) {
      const ElemId iy = img[static_cast<std::size_t>(y)];
      if (iy == kUndefined || !f.defined(y)) continue;
      const ElemId ify = img[static_cast<std::size_t>(f(y))];
      if (ify != kUndefined && g(iy) != ify) return false;
    }
  }
  return true;
}

// Completes img (kUndefined = unassigned) to embeddings src -> dst; visit returns true to stop.
// Returns true when stopped.
bool complete(const Structure& src, const Structure& dst, std::vector<ElemId>& img,
              std::vector<char>& used, const std::function<bool(const std::vector<ElemId>&)>& visit) {
  const auto it = std::find(img.begin(), img.end(), kUndefined);
  if (it == img.end()) return visit(img);
  const auto x = static_cast<ElemId>(it - img.begin());
  for (ElemId v = 0; v < static_cast<ElemId>(dst.size()); ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    *it = v;
    if (consistent(src, dst, img, x)) {
      used[static_cast<std::size_t>(v)] = 1;
      const bool stop = complete(src, dst, img, used, visit);
      used[static_cast<std::size_t>(v)] = 0;
      if (stop) {
        *it = kUndefined;
        return true;
      }
    }
    *it = kUndefined;
  }
  return false;
}

std::vector<std::vector<ElemId>> all_embeddings(const Structure& src, const Structure& dst) {
  std::vector<std::vector<ElemId>> out;
  if (src.ops().size() != dst.ops().size()) return out;
  std::vector<ElemId> img(src.size(), kUndefined);
  std::vector<char> used(dst.size(), 0);
  complete(src, dst, img, used, [&](const std::vector<ElemId>& m) {
    out.push_back(m);
    return false;
  });
  return out;
}

// Whether the partial map img (defined on S's positions inside T) extends to an embedding T -> N.
bool extends(const Structure& T, const Structure& N, std::vector<ElemId> img) {
  std::vector<char> used(N.size(), 0);
  for (ElemId v : img)
    if (v != kUndefined) used[static_cast<std::size_t>(v)] = 1;
  return complete(T, N, img, used, [](const std::vector<ElemId>&) { return true; });
}

bool closed(const Structure& s, const std::vector<char>& in) {
  for (const auto& op : s.ops())
    for (ElemId x = 0; x < static_cast<ElemId>(s.size()); ++x)
      if (in[static_cast<std::size_t>(x)] && op.defined(x) && !in[static_cast<std::size_t>(op(x))]) return false;
  return true;
}

struct Case {
  const Structure* T;
  std::vector<ElemId> sub;  // indices of S inside T, ascending
  Structure S;
};

// Class members T with |T| <= k and class-member substructures S ⊊ T, in canonical order.
// With one_point, only |S| = |T| - 1.
std::vector<Case> cases(const std::vector<Structure>& members, const ClassSpec& spec, bool one_point) {
  std::vector<Case> out;
  for (const Structure& T : members) {
    const std::size_t n = T.size();
    for (unsigned mask = 0; mask + 1 < (1U << n); ++mask) {
      std::vector<char> in(n, 0);
      std::vector<ElemId> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) {
          in[i] = 1;
          sub.push_back(static_cast<ElemId>(i));
        }
      if (one_point && sub.size() + 1 != n) continue;
      if (!closed(T, in)) continue;
      Structure S = T.restricted_to(sub).with_name("S");
      if (!is_member(S, spec)) continue;
      out.push_back({&T, std::move(sub), std::move(S)});
    }
  }
  return out;
}

std::vector<Structure> members_up_to(const ClassSpec& spec, std::size_t k) {
  std::vector<Structure> out;
  for (std::size_t t = 1; t <= k; ++t)
    for (auto& s : enumerate_class(spec, t)) out.push_back(s.with_name("T"));
  return out;
}

std::vector<ElemId> lift(const Case& c, const std::vector<ElemId>& e) {
  std::vector<ElemId> img(c.T->size(), kUndefined);
  for (std::size_t i = 0; i < c.sub.size(); ++i) img[static_cast<std::size_t>(c.sub[i])] = e[i];
  return img;
}

std::string brief(const Structure& s) {
  std::ostringstream out;
  const auto seq = s.is_linear() ? s.ascending() : [&] {
    std::vector<ElemId> v(s.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<ElemId>(i);
    return v;
  }();
  out << "{";
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? (s.is_linear() ? " < " : ", ") : "") << s.element(seq[i]);
  out << "}";
  for (const auto& op : s.ops()) {
    out << " " << op.symbol << ":";
    bool any = false;
    for (ElemId x = 0; x < static_cast<ElemId>(s.size()); ++x)
      if (op.defined(x)) {
        out << (any ? "," : "") << " " << s.element(x) << "->" << s.element(op(x));
        any = true;
      }
    if (!any) out << " (empty)";
  }
  return out.str();
}

}  // namespace

std::string ExtensionReport::describe() const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << " extension property at level " << level << " (" << pairs
      << " pairs, " << embeddings << " embeddings)";
  if (witness) {
    out << "; witness S = " << brief(witness->S) << ", T = " << brief(witness->T) << ", new point "
        << witness->point << ", e =";
    bool first = true;
    for (const auto& [s, m] : witness->e) {
      out << (first ? " " : ", ") << s << "->" << m;
      first = false;
    }
    if (witness->e.empty()) out << " (empty)";
  }
  return out.str();
}

ExtensionReport check_extension_into(const Structure& M, const Structure& N, const ClassSpec& spec,
                                     std::size_t k) {
  ExtensionReport report;
  report.level = k;
  const auto members = members_up_to(spec, k);
  for (const Case& c : cases(members, spec, true)) {
    ++report.pairs;
    for (const auto& e : all_embeddings(c.S, M)) {
      ++report.embeddings;
      std::vector<ElemId> img = lift(c, e);
      // Indices in M become indices in N by name.
      for (ElemId& v : img)
        if (v != kUndefined) v = *N.index_of(M.element(v));
      if (extends(*c.T, N, img)) continue;
      ExtensionWitness w;
      w.S = c.S;
      w.T = *c.T;
      for (ElemId p = 0; p < static_cast<ElemId>(c.T->size()); ++p)
        if (!std::binary_search(c.sub.begin(), c.sub.end(), p)) w.point = c.T->element(p);
      for (std::size_t i = 0; i < e.size(); ++i) w.e[c.S.element(static_cast<ElemId>(i))] = M.element(e[i]);
      report.pass = false;
      report.witness = std::move(w);
      return report;
    }
  }
  return report;
}

ExtensionReport check_extension_property(const Structure& M, const ClassSpec& spec, std::size_t k) {
  return check_extension_into(M, M, spec, k);
}

Structure extension_step(const Structure& M, const ClassSpec& spec, std::size_t k) {
  if (!procedure_for(spec))
    throw Error(ErrorCode::ClassNotAmalgamable, unsupported_reason(spec));
  if (const std::string why = membership_failure(M, spec); !why.empty())
    throw Error(ErrorCode::InvalidArgument, "stage is not in class " + spec.text + ": " + why);

  Structure cur = M;
  std::size_t fresh = 0;
  auto fresh_name = [&] {
    std::string name;
    do name = "x" + std::to_string(fresh++);
    while (cur.contains(name));
    return name;
  };

  const auto members = members_up_to(spec, k);
  for (const Case& c : cases(members, spec, false)) {
    for (const auto& e : all_embeddings(c.S, M)) {
      std::vector<ElemId> img = lift(c, e);
      for (ElemId& v : img)
        if (v != kUndefined) v = *cur.index_of(M.element(v));
      if (extends(*c.T, cur, img)) continue;

      NameMap names;
      for (ElemId x = 0; x < static_cast<ElemId>(c.T->size()); ++x) {
        const ElemId v = img[static_cast<std::size_t>(x)];
        names[c.T->element(x)] = v == kUndefined ? fresh_name() : cur.element(v);
      }
      AmalgamationTriple t;
      try {
        t = intersect_to_triple(cur.with_name("A"), rename(*c.T, names).with_name("B"));
      } catch (const Error& err) {
        throw Error(ErrorCode::ConstructionFailed,
                    std::string("extension needs undefined values the stage defines: ") + err.what());
      }
      cur = amalgamate(t, spec).D.with_name(M.name());
    }
  }
  return cur;
}

FraisseChain build_chain(const Structure& M0, const ClassSpec& spec, std::size_t k, std::size_t steps) {
  FraisseChain chain{{M0}, spec};
  for (std::size_t i = 0; i < steps; ++i) {
    Structure next = extension_step(chain.stages.back(), spec, k);
    if (next.size() == chain.stages.back().size()) break;
    chain.stages.push_back(std::move(next));
  }
  return chain;
}

namespace {

bool exact_iso(const Structure& M, const std::vector<ElemId>& xs, const std::vector<ElemId>& ys) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (M.leq(xs[i], xs[j]) != M.leq(ys[i], ys[j])) return false;
    for (const auto& op : M.ops()) {
      const ElemId fx = op(xs[i]);
      const ElemId fy = op(ys[i]);
      const auto px = std::find(xs.begin(), xs.end(), fx) - xs.begin();
      const auto py = std::find(ys.begin(), ys.end(), fy) - ys.begin();
      if (px != py) return false;  // both outside (== size) or the same position
    }
  }
  return true;
}

bool closed_set(const Structure& M, const std::vector<ElemId>& xs) {
  std::vector<char> in(M.size(), 0);
  for (ElemId x : xs) in[static_cast<std::size_t>(x)] = 1;
  return closed(M, in);
}

void subsets(std::size_t n, std::size_t size, std::size_t from, std::vector<ElemId>& cur,
             std::vector<std::vector<ElemId>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(static_cast<ElemId>(i));
    subsets(n, size, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<std::uint64_t> check_one_point_homogeneity(const Structure& M, std::size_t k) {
  std::uint64_t cases_seen = 0;
  const std::size_t n = M.size();
  for (std::size_t size = 0; size < k && size <= n; ++size) {
    std::vector<std::vector<ElemId>> sets;
    std::vector<ElemId> cur;
    subsets(n, size, 0, cur, sets);
    std::erase_if(sets, [&](const auto& s) { return !closed_set(M, s); });
    for (const auto& xs : sets) {
      for (const auto& base : sets) {
        std::vector<ElemId> ys = base;
        do {
          if (!exact_iso(M, xs, ys)) continue;
          for (ElemId p = 0; p < static_cast<ElemId>(n); ++p) {
            if (std::find(xs.begin(), xs.end(), p) != xs.end()) continue;
            std::vector<ElemId> xp = xs;
            xp.push_back(p);
            if (!closed_set(M, xp)) continue;
            ++cases_seen;
            bool found = false;
            for (ElemId q = 0; q < static_cast<ElemId>(n) && !found; ++q) {
              if (std::find(ys.begin(), ys.end(), q) != ys.end()) continue;
              std::vector<ElemId> yq = ys;
              yq.push_back(q);
              found = closed_set(M, yq) && exact_iso(M, xp, yq);
            }
            if (!found) return std::nullopt;
          }
        } while (std::next_permutation(ys.begin(), ys.end()));
      }
    }
  }
  return cases_seen;
}

}  // namespace ordamalg
