#include "ordamalg/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "ordamalg/error.hpp"
#include "ordamalg/poset_amalgam.hpp"

namespace ordamalg {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::StrongAmalgam: return "StrongAmalgam";
    case VerdictKind::Amalgam: return "Amalgam";
    case VerdictKind::NoneWithinBounds: return "NoneWithinBounds";
  }
  return "?";
}

std::vector<std::vector<ElemId>> linear_extensions(const Relation& order) {
  const std::size_t n = order.size();
  std::vector<std::vector<ElemId>> out;
  std::vector<ElemId> seq;
  std::vector<char> placed(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (seq.size() == n) {
      out.push_back(seq);
      return;
    }
    for (ElemId x = 0; x < static_cast<ElemId>(n); ++x) {
      if (placed[static_cast<std::size_t>(x)]) continue;
      bool minimal = true;
      for (ElemId y = 0; y < static_cast<ElemId>(n) && minimal; ++y)
        minimal = placed[static_cast<std::size_t>(y)] || !order.strictly(y, x);
      if (!minimal) continue;
      placed[static_cast<std::size_t>(x)] = 1;
      seq.push_back(x);
      self(self);
      seq.pop_back();
      placed[static_cast<std::size_t>(x)] = 0;
    }
  };
  rec(rec);
  return out;
}

namespace {

// A carrier with a fixed partial order to extend; `fixed` pairs must keep their base value.
struct SearchProblem {
  std::vector<std::string> names;
  Relation base;
  std::vector<char> fixed;
  std::vector<UnaryOp> ops;

  bool is_fixed(ElemId x, ElemId y) const {
    return fixed[static_cast<std::size_t>(x) * names.size() + static_cast<std::size_t>(y)] != 0;
  }
};

struct SearchResult {
  std::optional<Structure> D;
  std::uint64_t searched = 0;
  std::uint64_t valid = 0;
};

std::vector<Relation> candidate_orders(const SearchProblem& p, Linearity linearity) {
  const std::size_t n = p.names.size();
  std::vector<Relation> out;
  if (linearity == Linearity::linear) {
    for (const auto& seq : linear_extensions(p.base)) {
      Relation r(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) r.set(seq[i], seq[j]);
      out.push_back(std::move(r));
    }
    return out;
  }
  std::vector<std::pair<ElemId, ElemId>> free;
  for (ElemId x = 0; x < static_cast<ElemId>(n); ++x)
    for (ElemId y = x + 1; y < static_cast<ElemId>(n); ++y)
      if (!p.is_fixed(x, y) && !p.base.comparable(x, y)) free.emplace_back(x, y);
  std::vector<int> state(free.size(), 0);
  while (true) {
    Relation r = p.base;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (state[k] == 1) r.set(free[k].first, free[k].second);
      if (state[k] == 2) r.set(free[k].second, free[k].first);
    }
    if (r.is_transitive() && r.is_antisymmetric()) out.push_back(std::move(r));
    std::size_t k = 0;
    while (k < state.size() && ++state[k] == 3) state[k++] = 0;
    if (k == state.size()) break;
  }
  return out;
}

bool restrictions_exact(const SearchProblem& p, const Relation& r) {
  const auto n = static_cast<ElemId>(p.names.size());
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (p.is_fixed(x, y) && r(x, y) != p.base(x, y)) return false;
  return true;
}

// Monotonicity (and injectivity for bijective kinds) of the values already defined.
bool defined_part_ok(const Relation& r, const UnaryOp& op) {
  const auto n = static_cast<ElemId>(r.size());
  const bool rev = is_reversing_kind(op.kind);
  const bool strict = is_strict_kind(op.kind);
  for (ElemId x = 0; x < n; ++x) {
    if (!op.defined(x)) continue;
    for (ElemId y = 0; y < n; ++y) {
      if (x == y || !op.defined(y)) continue;
      if (requires_bijection(op.kind) && op(x) == op(y)) return false;
      if (!r(x, y)) continue;
      const ElemId a = rev ? op(y) : op(x);
      const ElemId b = rev ? op(x) : op(y);
      if (!r(a, b) || (strict && a == b)) return false;
    }
  }
  return true;
}

struct OrderOutcome {
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  std::optional<Structure> hit;
  std::uint64_t hit_at = 0;  // 1-based candidate number of the hit inside this order
};

OrderOutcome process_order(const SearchProblem& p, const ClassSpec& spec, const Relation& r,
                           bool stop_at_first) {
  OrderOutcome out;
  if (!restrictions_exact(p, r)) {
    out.candidates = 1;
    return out;
  }
  for (const auto& op : p.ops) {
    if (!defined_part_ok(r, op)) {
      out.candidates = 1;
      return out;
    }
  }
  const auto n = static_cast<ElemId>(p.names.size());
  std::vector<std::pair<std::size_t, ElemId>> slots;
  for (std::size_t k = 0; k < p.ops.size(); ++k)
    for (ElemId x = 0; x < n; ++x)
      if (!p.ops[k].defined(x)) slots.emplace_back(k, x);
  const ElemId first = spec.allow_partial ? kUndefined : 0;
  if (n == 0 && !slots.empty()) return out;
  std::vector<ElemId> value(slots.size(), first);
  std::vector<UnaryOp> ops = p.ops;
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s)
      ops[slots[s].first].graph[static_cast<std::size_t>(slots[s].second)] = value[s];
    ++out.candidates;
    Structure D("D", p.names, r, spec.linearity, ops);
    if (is_member(D, spec)) {
      ++out.valid;
      if (!out.hit) {
        out.hit = std::move(D);
        out.hit_at = out.candidates;
        if (stop_at_first) return out;
      }
    }
    std::size_t s = 0;
    while (s < value.size() && ++value[s] == n) value[s++] = first;
    if (s == value.size()) break;
  }
  return out;
}

SearchResult run_search(const SearchProblem& p, const ClassSpec& spec, const SearchOptions& opt) {
  const std::vector<Relation> orders = candidate_orders(p, spec.linearity);
  std::vector<OrderOutcome> outcomes(orders.size());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < orders.size(); i = next++) {
      if (opt.stop_at_first && i > best.load()) continue;
      outcomes[i] = process_order(p, spec, orders[i], opt.stop_at_first);
      if (outcomes[i].hit) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1U, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SearchResult res;
  const std::size_t b = best.load();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (opt.stop_at_first && b != kNone && i >= b) {
      if (i == b) {
        res.searched += outcomes[i].hit_at;
        res.valid += 1;
      }
      break;
    }
    res.searched += outcomes[i].candidates;
    res.valid += outcomes[i].valid;
  }
  if (b != kNone) res.D = outcomes[b].hit;
  return res;
}

std::vector<char> side_fixed(std::size_t n, const std::vector<char>& in_a, const std::vector<char>& in_b) {
  std::vector<char> fixed(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      fixed[x * n + y] = (in_a[x] && in_a[y]) || (in_b[x] && in_b[y]);
  return fixed;
}

std::string completion_note(const ClassSpec& spec) {
  return spec.allow_partial ? ", every completion of undefined values (undefined first)"
                            : ", ops total by graph union";
}

}  // namespace

OracleVerdict strong_amalgam_search(const AmalgamationTriple& t, const ClassSpec& spec,
                                    const SearchOptions& options) {
  const PosetAmalgam pa = amalgamate_posets(t);
  const std::size_t n = pa.layout.size();
  std::vector<char> in_a(n), in_b(n);
  for (ElemId d = 0; d < static_cast<ElemId>(n); ++d) {
    in_a[static_cast<std::size_t>(d)] = pa.layout.in_a(d);
    in_b[static_cast<std::size_t>(d)] = pa.layout.in_b(d);
  }
  SearchProblem p{pa.E.elements(), pa.E.order(), side_fixed(n, in_a, in_b), pa.E.ops()};
  const SearchResult res = run_search(p, spec, options);

  OracleVerdict v;
  v.searched = res.searched;
  v.valid = res.valid;
  v.bounds = std::string(spec.linearity == Linearity::linear
                             ? "every linear order on A ∪ B extending both sides"
                             : "every partial order on A ∪ B restricting to both sides") +
             completion_note(spec);
  if (res.D) {
    v.kind = VerdictKind::StrongAmalgam;
    v.D = res.D;
    v.e_A = inclusion_map(t.A, *v.D);
    v.e_B = inclusion_map(t.B, *v.D);
  }
  return v;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  const std::function<bool()>& emit, bool& stop) {
  if (stop) return;
  if (cur.size() == k) {
    stop = emit();
    return;
  }
  for (std::size_t i = start; i < n && !stop; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, emit, stop);
    cur.pop_back();
  }
}

void arrangements(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::vector<char>& used,
                  const std::function<bool()>& emit, bool& stop) {
  if (stop) return;
  if (cur.size() == k) {
    stop = emit();
    return;
  }
  for (std::size_t i = 0; i < n && !stop; ++i) {
    if (used[i]) continue;
    used[i] = 1;
    cur.push_back(i);
    arrangements(n, k, cur, used, emit, stop);
    cur.pop_back();
    used[i] = 0;
  }
}

std::string fresh_name(std::size_t i, const Structure& A, const Structure& B) {
  std::string name = "fresh" + std::to_string(i);
  while (A.contains(name) || B.contains(name)) name += "'";
  return name;
}

}  // namespace

OracleVerdict amalgam_search(const AmalgamationTriple& t, const ClassSpec& spec, int max_extra,
                             const SearchOptions& options) {
  if (max_extra < 0 || max_extra > 3)
    throw Error(ErrorCode::BoundsExceeded, "max_extra must lie in [0, 3], got " + std::to_string(max_extra));
  validate_triple(t);
  std::vector<ElemId> a_only;
  std::vector<ElemId> b_only;
  for (ElemId a = 0; a < static_cast<ElemId>(t.A.size()); ++a)
    if (!t.C.contains(t.A.element(a))) a_only.push_back(a);
  for (ElemId b = 0; b < static_cast<ElemId>(t.B.size()); ++b)
    if (!t.C.contains(t.B.element(b))) b_only.push_back(b);

  OracleVerdict v;
  v.bounds = "quotients identifying up to " + std::to_string(std::min(a_only.size(), b_only.size())) +
             " pairs from A \\ C and B \\ C, up to " + std::to_string(max_extra) +
             " fresh elements, every " + (spec.linearity == Linearity::linear ? "linear" : "partial") +
             " order restricting to both sides" + completion_note(spec);

  for (int extra = 0; extra <= max_extra; ++extra) {
    for (std::size_t k = 0; k <= std::min(a_only.size(), b_only.size()); ++k) {
      bool stop = false;
      std::vector<std::size_t> pick_a;
      combinations(a_only.size(), k, 0, pick_a, [&] {
        std::vector<std::size_t> pick_b;
        std::vector<char> used(b_only.size(), 0);
        bool inner_stop = false;
        arrangements(b_only.size(), k, pick_b, used, [&] {
          // B index -> D index.
          std::vector<std::string> names = t.A.elements();
          std::vector<ElemId> b_to_d(t.B.size(), kUndefined);
          NameMap b_names;
          for (ElemId b = 0; b < static_cast<ElemId>(t.B.size()); ++b)
            if (auto a = t.A.index_of(t.B.element(b))) b_to_d[static_cast<std::size_t>(b)] = *a;
          for (std::size_t i = 0; i < k; ++i) {
            const ElemId b = b_only[pick_b[i]];
            const ElemId a = a_only[pick_a[i]];
            b_to_d[static_cast<std::size_t>(b)] = a;
            b_names[t.B.element(b)] = t.A.element(a);
          }
          for (ElemId b : b_only) {
            if (b_to_d[static_cast<std::size_t>(b)] != kUndefined) continue;
            b_to_d[static_cast<std::size_t>(b)] = static_cast<ElemId>(names.size());
            names.push_back(t.B.element(b));
          }
          for (int f = 0; f < extra; ++f) names.push_back(fresh_name(static_cast<std::size_t>(f), t.A, t.B));
          const std::size_t n = names.size();

          Relation base = Relation::identity(n);
          std::vector<char> in_a(n, 0), in_b(n, 0);
          for (ElemId x = 0; x < static_cast<ElemId>(t.A.size()); ++x) {
            in_a[static_cast<std::size_t>(x)] = 1;
            for (ElemId y = 0; y < static_cast<ElemId>(t.A.size()); ++y)
              if (t.A.leq(x, y)) base.set(x, y);
          }
          for (ElemId x = 0; x < static_cast<ElemId>(t.B.size()); ++x) {
            in_b[static_cast<std::size_t>(b_to_d[static_cast<std::size_t>(x)])] = 1;
            for (ElemId y = 0; y < static_cast<ElemId>(t.B.size()); ++y)
              if (t.B.leq(x, y)) base.set(b_to_d[static_cast<std::size_t>(x)], b_to_d[static_cast<std::size_t>(y)]);
          }
          base = base.reflexive_transitive_closure();
          if (!base.is_antisymmetric()) return false;
          for (ElemId x = 0; x < static_cast<ElemId>(t.A.size()); ++x)
            for (ElemId y = 0; y < static_cast<ElemId>(t.A.size()); ++y)
              if (base(x, y) != t.A.leq(x, y)) return false;
          for (ElemId x = 0; x < static_cast<ElemId>(t.B.size()); ++x)
            for (ElemId y = 0; y < static_cast<ElemId>(t.B.size()); ++y)
              if (base(b_to_d[static_cast<std::size_t>(x)], b_to_d[static_cast<std::size_t>(y)]) != t.B.leq(x, y))
                return false;

          std::vector<UnaryOp> ops;
          for (const auto& fa : t.A.ops()) {
            const UnaryOp* fb = t.B.find_op(fa.symbol);
            UnaryOp f{fa.symbol, fa.kind, std::vector<ElemId>(n, kUndefined)};
            for (ElemId x = 0; x < static_cast<ElemId>(t.A.size()); ++x) f.graph[static_cast<std::size_t>(x)] = fa(x);
            for (ElemId x = 0; x < static_cast<ElemId>(t.B.size()); ++x) {
              if (!fb->defined(x)) continue;
              const ElemId dx = b_to_d[static_cast<std::size_t>(x)];
              const ElemId val = b_to_d[static_cast<std::size_t>((*fb)(x))];
              ElemId& slot = f.graph[static_cast<std::size_t>(dx)];
              if (slot != kUndefined && slot != val) return false;
              slot = val;
            }
            ops.push_back(std::move(f));
          }

          SearchProblem p{names, base, side_fixed(n, in_a, in_b), ops};
          const SearchResult res = run_search(p, spec, options);
          v.searched += res.searched;
          v.valid += res.valid;
          if (res.D && !v.D) {
            v.kind = k == 0 ? VerdictKind::StrongAmalgam : VerdictKind::Amalgam;
            v.D = res.D;
            v.b_names = b_names;
            v.e_A = inclusion_map(t.A, *v.D);
            v.e_B.image.clear();
            for (ElemId b = 0; b < static_cast<ElemId>(t.B.size()); ++b)
              v.e_B.image.push_back(b_to_d[static_cast<std::size_t>(b)]);
            return options.stop_at_first;
          }
          return false;
        }, inner_stop);
        return inner_stop;
      }, stop);
      if (stop) return v;
    }
  }
  return v;
}

}  // namespace ordamalg
