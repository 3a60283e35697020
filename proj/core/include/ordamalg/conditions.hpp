#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordamalg/structure.hpp"

namespace ordamalg {

/// A condition from the closed set used to cut out subclasses. Conditions on operations
/// quantify only over elements where the involved values are defined.
struct Condition {
  enum class Kind {
    NoMax,
    NoMin,
    OpFixedPoint,  // f^l has (want) / has no (!want) fixed point
    OpSurjective,
    OpIncreasing,  // f(x) >= x, or > with strict
    OpDecreasing,
    ClosureOp,     // f(f(x)) = f(x) >= x
    IterEq,        // f^(m+1)(x) = f^n(x) for every / some x
    Commute,       // f(h(x)) = h(f(x))
  };

  Kind kind = Kind::NoMax;
  std::string symbol;
  std::string symbol2;
  int l = 1;
  bool want = true;
  bool strict = false;
  int m = 0;
  int n = 0;
  bool every = true;

  static Condition of(Kind k, std::string f = {}) {
    Condition c;
    c.kind = k;
    c.symbol = std::move(f);
    return c;
  }
  static Condition no_max() { return of(Kind::NoMax); }
  static Condition no_min() { return of(Kind::NoMin); }
  static Condition fixed_point(std::string f, int l, bool want);
  static Condition surjective(std::string f);
  static Condition increasing(std::string f, bool strict);
  static Condition decreasing(std::string f, bool strict);
  static Condition closure(std::string f);
  static Condition iter_eq(std::string f, int m, int n, bool every);
  static Condition commute(std::string f, std::string h);

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Direct evaluation. Throws UnknownSymbol when a referenced op is missing.
bool holds(const Structure& s, const Condition& h);
bool holds_all(const Structure& s, const std::vector<Condition>& hs);

/// Text form, one condition per string:
///   no_max | no_min | surjective f | increasing f | strictly_increasing f | decreasing f |
///   strictly_decreasing f | closure f | fixed_point f [l] | no_fixed_point f [l] |
///   iter_eq f p q every|some   (f^p = f^q, so m = p - 1) | commute f h
/// Throws ParseError.
Condition parse_condition(std::string_view text);
std::string to_string(const Condition& h);

/// A copy of h referring to other op symbols (first / second symbol).
Condition with_symbols(Condition h, const std::string& f, const std::string& g = {});

}  // namespace ordamalg
