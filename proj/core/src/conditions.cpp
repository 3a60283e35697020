#include "ordamalg/conditions.hpp"

#include <charconv>
#include <sstream>

#include "ordamalg/error.hpp"

namespace ordamalg {

Condition Condition::fixed_point(std::string f, int l, bool want) {
  Condition c = of(Kind::OpFixedPoint, std::move(f));
  c.l = l;
  c.want = want;
  return c;
}

Condition Condition::surjective(std::string f) { return of(Kind::OpSurjective, std::move(f)); }

Condition Condition::increasing(std::string f, bool strict) {
  Condition c = of(Kind::OpIncreasing, std::move(f));
  c.strict = strict;
  return c;
}

Condition Condition::decreasing(std::string f, bool strict) {
  Condition c = of(Kind::OpDecreasing, std::move(f));
  c.strict = strict;
  return c;
}

Condition Condition::closure(std::string f) { return of(Kind::ClosureOp, std::move(f)); }

Condition Condition::iter_eq(std::string f, int m, int n, bool every) {
  Condition c = of(Kind::IterEq, std::move(f));
  c.m = m;
  c.n = n;
  c.every = every;
  return c;
}

Condition Condition::commute(std::string f, std::string h) {
  Condition c{Kind::Commute, std::move(f), std::move(h)};
  return c;
}

namespace {

const UnaryOp& op_or_throw(const Structure& s, const std::string& symbol) {
  const UnaryOp* f = s.find_op(symbol);
  if (f == nullptr) throw Error(ErrorCode::UnknownSymbol, "no operation '" + symbol + "'");
  return *f;
}

}  // namespace

bool holds(const Structure& s, const Condition& h) {
  using K = Condition::Kind;
  const auto n = static_cast<ElemId>(s.size());
  switch (h.kind) {
    case K::NoMax:
    case K::NoMin:
      for (ElemId x = 0; x < n; ++x) {
        bool extremal = true;
        for (ElemId y = 0; y < n && extremal; ++y)
          extremal = h.kind == K::NoMax ? !s.less(x, y) : !s.less(y, x);
        if (extremal) return false;
      }
      return true;
    case K::OpFixedPoint: {
      const UnaryOp& f = op_or_throw(s, h.symbol);
      bool found = false;
      for (ElemId x = 0; x < n && !found; ++x) found = f.iterate(x, h.l) == x;
      return found == h.want;
    }
    case K::OpSurjective: {
      const UnaryOp& f = op_or_throw(s, h.symbol);
      std::vector<char> hit(s.size(), 0);
      for (ElemId x = 0; x < n; ++x)
        if (f.defined(x)) hit[static_cast<std::size_t>(f(x))] = 1;
      for (char c : hit)
        if (!c) return false;
      return true;
    }
    case K::OpIncreasing:
    case K::OpDecreasing: {
      const UnaryOp& f = op_or_throw(s, h.symbol);
      for (ElemId x = 0; x < n; ++x) {
        if (!f.defined(x)) continue;
        const ElemId lo = h.kind == K::OpIncreasing ? x : f(x);
        const ElemId hi = h.kind == K::OpIncreasing ? f(x) : x;
        if (h.strict ? !s.less(lo, hi) : !s.leq(lo, hi)) return false;
      }
      return true;
    }
    case K::ClosureOp: {
      const UnaryOp& f = op_or_throw(s, h.symbol);
      for (ElemId x = 0; x < n; ++x) {
        if (!f.defined(x)) continue;
        if (!s.leq(x, f(x))) return false;
        const ElemId ffx = f(f(x));
        if (ffx != kUndefined && ffx != f(x)) return false;
      }
      return true;
    }
    case K::IterEq: {
      const UnaryOp& f = op_or_throw(s, h.symbol);
      bool any = false;
      for (ElemId x = 0; x < n; ++x) {
        const ElemId lhs = f.iterate(x, h.m + 1);
        const ElemId rhs = f.iterate(x, h.n);
        if (lhs == kUndefined || rhs == kUndefined) continue;
        if (lhs == rhs) any = true;
        else if (h.every) return false;
      }
      return h.every || any;
    }
    case K::Commute: {
      const UnaryOp& f = op_or_throw(s, h.symbol);
      const UnaryOp& g = op_or_throw(s, h.symbol2);
      for (ElemId x = 0; x < n; ++x) {
        const ElemId fg = g.defined(x) ? f(g(x)) : kUndefined;
        const ElemId gf = f.defined(x) ? g(f(x)) : kUndefined;
        if (fg != kUndefined && gf != kUndefined && fg != gf) return false;
      }
      return true;
    }
  }
  return false;
}

bool holds_all(const Structure& s, const std::vector<Condition>& hs) {
  for (const auto& h : hs)
    if (!holds(s, h)) return false;
  return true;
}

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "condition '" + std::string(text) + "': " + why);
}

int to_int(std::string_view text, const std::string& tok, int min) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < min)
    bad(text, "expected an integer >= " + std::to_string(min) + ", got '" + tok + "'");
  return v;
}

}  // namespace

Condition parse_condition(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> t;
  for (std::string w; in >> w;) t.push_back(w);
  if (t.empty()) bad(text, "empty");
  const std::string& head = t[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (t.size() < lo + 1 || t.size() > hi + 1)
      bad(text, "'" + head + "' takes " + std::to_string(lo) +
                    (hi != lo ? " to " + std::to_string(hi) : std::string()) + " arguments");
  };
  if (head == "no_max") { arity(0, 0); return Condition::no_max(); }
  if (head == "no_min") { arity(0, 0); return Condition::no_min(); }
  if (head == "surjective") { arity(1, 1); return Condition::surjective(t[1]); }
  if (head == "increasing") { arity(1, 1); return Condition::increasing(t[1], false); }
  if (head == "strictly_increasing") { arity(1, 1); return Condition::increasing(t[1], true); }
  if (head == "decreasing") { arity(1, 1); return Condition::decreasing(t[1], false); }
  if (head == "strictly_decreasing") { arity(1, 1); return Condition::decreasing(t[1], true); }
  if (head == "closure") { arity(1, 1); return Condition::closure(t[1]); }
  if (head == "fixed_point" || head == "no_fixed_point") {
    arity(1, 2);
    const int l = t.size() == 3 ? to_int(text, t[2], 1) : 1;
    return Condition::fixed_point(t[1], l, head == "fixed_point");
  }
  if (head == "iter_eq") {
    arity(4, 4);
    const int p = to_int(text, t[2], 1);
    const int q = to_int(text, t[3], 0);
    if (t[4] != "every" && t[4] != "some") bad(text, "quantifier must be 'every' or 'some'");
    return Condition::iter_eq(t[1], p - 1, q, t[4] == "every");
  }
  if (head == "commute") { arity(2, 2); return Condition::commute(t[1], t[2]); }
  bad(text, "unknown condition '" + head + "'");
}

std::string to_string(const Condition& h) {
  using K = Condition::Kind;
  switch (h.kind) {
    case K::NoMax: return "no_max";
    case K::NoMin: return "no_min";
    case K::OpFixedPoint:
      return std::string(h.want ? "fixed_point " : "no_fixed_point ") + h.symbol + " " +
             std::to_string(h.l);
    case K::OpSurjective: return "surjective " + h.symbol;
    case K::OpIncreasing: return (h.strict ? "strictly_increasing " : "increasing ") + h.symbol;
    case K::OpDecreasing: return (h.strict ? "strictly_decreasing " : "decreasing ") + h.symbol;
    case K::ClosureOp: return "closure " + h.symbol;
    case K::IterEq:
      return "iter_eq " + h.symbol + " " + std::to_string(h.m + 1) + " " + std::to_string(h.n) +
             (h.every ? " every" : " some");
    case K::Commute: return "commute " + h.symbol + " " + h.symbol2;
  }
  return "?";
}

Condition with_symbols(Condition h, const std::string& f, const std::string& g) {
  if (!h.symbol.empty()) h.symbol = f;
  if (!h.symbol2.empty()) h.symbol2 = g.empty() ? f : g;
  return h;
}

}  // namespace ordamalg
