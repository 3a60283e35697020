#include "ordamalg/registry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ordamalg/error.hpp"

namespace ordamalg {

std::string_view to_string(Claim claim) {
  return claim == Claim::SAP_fails ? "SAP_fails" : "AP_fails";
}

namespace {

using Graph = std::vector<std::pair<std::string, std::string>>;

std::string num(int z) { return std::to_string(z); }
std::string primed(int z) { return std::to_string(z) + "'"; }

std::vector<std::string> naturals(int level) {
  std::vector<std::string> out;
  for (int i = 0; i <= level; ++i) out.push_back(num(i));
  return out;
}

// Successor on {0..level}, undefined at the top.
Graph successor(int level) {
  Graph g;
  for (int i = 0; i < level; ++i) g.emplace_back(num(i), num(i + 1));
  return g;
}

Graph with(Graph g, std::initializer_list<std::pair<std::string, std::string>> extra) {
  g.insert(g.end(), extra.begin(), extra.end());
  return g;
}

std::vector<std::string> prepend(std::string x, std::vector<std::string> v) {
  v.insert(v.begin(), std::move(x));
  return v;
}

ClassSpec spec_of(const std::string& text, bool partial = false) {
  ClassSpec s = parse_class_spec(text);
  s.allow_partial = partial;
  return s;
}

RegisteredCounterexample thm31_c_i() {
  RegisteredCounterexample r;
  r.name = "thm31_c_i";
  r.summary = "two order preserving operations f, h: a < b forces 0 = f(a) <= f(b) = b, "
              "b < a forces 0 = h(b) <= h(a) = a, and a = b clashes on f";
  r.claim = Claim::AP_fails;
  r.spec = spec_of("lo(f:preserving,h:preserving)");
  r.max_extra = 1;
  auto C = StructureBuilder("C").chain({"0"}).op("f", OpKind::preserving, {{"0", "0"}})
               .op("h", OpKind::preserving, {{"0", "0"}}).build();
  auto A = StructureBuilder("A").chain({"a", "0"})
               .op("f", OpKind::preserving, {{"a", "0"}, {"0", "0"}})
               .op("h", OpKind::preserving, {{"a", "a"}, {"0", "0"}}).build();
  auto B = StructureBuilder("B").chain({"b", "0"})
               .op("f", OpKind::preserving, {{"b", "b"}, {"0", "0"}})
               .op("h", OpKind::preserving, {{"b", "0"}, {"0", "0"}}).build();
  r.triple = {A, B, C};
  return r;
}

RegisteredCounterexample thm31_b_sap(int level) {
  RegisteredCounterexample r;
  r.name = "thm31_b_sap";
  r.summary = "strict order preserving successor: f(a) = f(b) = 0 forces a = b, so no strong "
              "amalgam exists although identifying a with b amalgamates";
  r.claim = Claim::SAP_fails;
  r.spec = spec_of("lo_sp", true);
  r.truncated = true;
  r.truncation_note = "the naturals with successor are cut to {0.." + num(level) +
                      "}; the successor is undefined at " + num(level);
  r.max_extra = 0;
  const auto nat = naturals(level);
  auto C = StructureBuilder("C").chain(nat).op("f", OpKind::strict_preserving, successor(level)).build();
  auto A = StructureBuilder("A").chain(prepend("a", nat))
               .op("f", OpKind::strict_preserving, with(successor(level), {{"a", "0"}})).build();
  auto B = StructureBuilder("B").chain(prepend("b", nat))
               .op("f", OpKind::strict_preserving, with(successor(level), {{"b", "0"}})).build();
  r.triple = {A, B, C};
  return r;
}

RegisteredCounterexample thm31_c_ii(int level) {
  RegisteredCounterexample r;
  r.name = "thm31_c_ii";
  r.summary = "two strict order preserving operations over the successor, extended as in thm31_c_i";
  r.claim = Claim::AP_fails;
  r.spec = spec_of("lo(f:strict_preserving,h:strict_preserving)", true);
  r.truncated = true;
  r.truncation_note = "the naturals with f = h = successor are cut to {0.." + num(level) +
                      "}; both are undefined at " + num(level);
  r.max_extra = 0;
  const auto nat = naturals(level);
  const auto k = OpKind::strict_preserving;
  auto C = StructureBuilder("C").chain(nat).op("f", k, successor(level)).op("h", k, successor(level)).build();
  auto A = StructureBuilder("A").chain(prepend("a", nat))
               .op("f", k, with(successor(level), {{"a", "0"}}))
               .op("h", k, with(successor(level), {{"a", "a"}})).build();
  auto B = StructureBuilder("B").chain(prepend("b", nat))
               .op("f", k, with(successor(level), {{"b", "b"}}))
               .op("h", k, with(successor(level), {{"b", "0"}})).build();
  r.triple = {A, B, C};
  return r;
}

RegisteredCounterexample thm43_a_sap() {
  RegisteredCounterexample r;
  r.name = "thm43_a_sap";
  r.summary = "one order reversing operation: C has no center, A and B add centers a and b, "
              "which every amalgam must identify";
  r.claim = Claim::SAP_fails;
  r.spec = spec_of("lo_r");
  r.max_extra = 1;
  const auto k = OpKind::reversing;
  auto C = StructureBuilder("C").chain({"-inf", "inf"}).op("g", k, {{"-inf", "inf"}, {"inf", "-inf"}}).build();
  auto A = StructureBuilder("A").chain({"-inf", "a", "inf"})
               .op("g", k, {{"-inf", "inf"}, {"a", "a"}, {"inf", "-inf"}}).build();
  auto B = StructureBuilder("B").chain({"-inf", "b", "inf"})
               .op("g", k, {{"-inf", "inf"}, {"b", "b"}, {"inf", "-inf"}}).build();
  r.triple = {A, B, C};
  return r;
}

RegisteredCounterexample thm43_b_i() {
  RegisteredCounterexample r;
  r.name = "thm43_b_i";
  r.summary = "two order reversing operations g, k over C = {c}; every relative position of a and b "
              "contradicts g or k";
  r.claim = Claim::AP_fails;
  r.spec = spec_of("lo(g:reversing,k:reversing)");
  r.max_extra = 1;
  const auto rv = OpKind::reversing;
  auto C = StructureBuilder("C").chain({"c"}).op("g", rv, {{"c", "c"}}).op("k", rv, {{"c", "c"}}).build();
  auto A = StructureBuilder("A").chain({"a", "c", "d"})
               .op("g", rv, {{"a", "c"}, {"c", "c"}, {"d", "c"}})
               .op("k", rv, {{"a", "d"}, {"c", "c"}, {"d", "a"}}).build();
  auto B = StructureBuilder("B").chain({"b", "c", "e"})
               .op("g", rv, {{"b", "e"}, {"c", "c"}, {"e", "b"}})
               .op("k", rv, {{"b", "c"}, {"c", "c"}, {"e", "c"}}).build();
  r.triple = {A, B, C};
  return r;
}

RegisteredCounterexample thm43_b_ii() {
  RegisteredCounterexample r;
  r.name = "thm43_b_ii";
  r.summary = "an order preserving f and an order reversing g: a <= b gives e = g(b) <= g(a) = c, "
              "b <= a gives c = f(b) <= f(a) = a";
  r.claim = Claim::AP_fails;
  r.spec = spec_of("lo(f:preserving,g:reversing)");
  r.max_extra = 1;
  const auto pr = OpKind::preserving;
  const auto rv = OpKind::reversing;
  auto C = StructureBuilder("C").chain({"c"}).op("f", pr, {{"c", "c"}}).op("g", rv, {{"c", "c"}}).build();
  auto A = StructureBuilder("A").chain({"a", "c", "d"})
               .op("f", pr, {{"a", "a"}, {"c", "c"}, {"d", "d"}})
               .op("g", rv, {{"a", "c"}, {"c", "c"}, {"d", "c"}}).build();
  auto B = StructureBuilder("B").chain({"b", "c", "e"})
               .op("f", pr, {{"b", "c"}, {"c", "c"}, {"e", "c"}})
               .op("g", rv, {{"b", "e"}, {"c", "c"}, {"e", "b"}}).build();
  r.triple = {A, B, C};
  return r;
}

constexpr int kWindow = 2;

RegisteredCounterexample thm43_b_iii() {
  RegisteredCounterexample r;
  r.name = "thm43_b_iii";
  r.summary = "two strict order reversing bijections g, k over a centerless C: the g-centers 0 and "
              "0' must be identified, but k(0) = 0 while k(0') = 2'";
  r.claim = Claim::AP_fails;
  r.spec = spec_of("lo(g:strict_reversing,k:strict_reversing)", true);
  r.truncated = true;
  r.truncation_note = "both copies of the integers are cut to the window {-2..2}; k on B is "
                      "undefined where -z' + 2' leaves the window";
  r.max_extra = 0;
  const auto k = OpKind::strict_reversing;
  const Graph swap{{"-inf", "inf"}, {"inf", "-inf"}};
  std::vector<std::string> za{"-inf"}, zb{"-inf"};
  Graph ga = swap, ka = swap, gb = swap, kb = swap;
  for (int z = -kWindow; z <= kWindow; ++z) {
    za.push_back(num(z));
    zb.push_back(primed(z));
    ga.emplace_back(num(z), num(-z));
    ka.emplace_back(num(z), num(-z));
    gb.emplace_back(primed(z), primed(-z));
    if (-z + 2 <= kWindow) kb.emplace_back(primed(z), primed(-z + 2));
  }
  za.push_back("inf");
  zb.push_back("inf");
  auto C = StructureBuilder("C").chain({"-inf", "inf"}).op("g", k, swap).op("k", k, swap).build();
  auto A = StructureBuilder("A").chain(za).op("g", k, ga).op("k", k, ka).build();
  auto B = StructureBuilder("B").chain(zb).op("g", k, gb).op("k", k, kb).build();
  r.triple = {A, B, C};
  return r;
}

RegisteredCounterexample thm43_b_iv() {
  RegisteredCounterexample r;
  r.name = "thm43_b_iv";
  r.summary = "two strict order reversing operations with the common center 0: 1 <= 1' gives "
              "2 = k^2(1) <= k^2(1') = 1', and 1' <= 1 gives 2 = g^2(1') <= g^2(1) = 1";
  r.claim = Claim::AP_fails;
  r.spec = spec_of("lo(g:strict_reversing,k:strict_reversing)", true);
  r.truncated = true;
  r.truncation_note = "the integers are cut to {-3..3}; g and k are undefined at -3, whose value 4 "
                      "leaves the window";
  r.max_extra = 0;
  const auto k = OpKind::strict_reversing;
  const Graph common{{"0", "0"}, {"2", "-2"}, {"3", "-3"}, {"-2", "3"}};
  auto C = StructureBuilder("C").chain({"-3", "-2", "0", "2", "3"}).op("g", k, common).op("k", k, common).build();
  auto A = StructureBuilder("A").chain({"-3", "-2", "-1", "0", "1", "2", "3"})
               .op("g", k, with(common, {{"1", "-1"}, {"-1", "1"}}))
               .op("k", k, with(common, {{"1", "-1"}, {"-1", "2"}})).build();
  auto B = StructureBuilder("B").chain({"-3", "-2", "-1'", "0", "1'", "2", "3"})
               .op("g", k, with(common, {{"1'", "-1'"}, {"-1'", "2"}}))
               .op("k", k, with(common, {{"1'", "-1'"}, {"-1'", "1'"}})).build();
  r.triple = {A, B, C};
  return r;
}

const std::map<std::string, std::function<RegisteredCounterexample(int)>, std::less<>>& table() {
  static const std::map<std::string, std::function<RegisteredCounterexample(int)>, std::less<>> t{
      {"thm31_b_sap", [](int level) { return thm31_b_sap(level); }},
      {"thm31_c_i", [](int) { return thm31_c_i(); }},
      {"thm31_c_ii", [](int level) { return thm31_c_ii(level); }},
      {"thm43_a_sap", [](int) { return thm43_a_sap(); }},
      {"thm43_b_i", [](int) { return thm43_b_i(); }},
      {"thm43_b_ii", [](int) { return thm43_b_ii(); }},
      {"thm43_b_iii", [](int) { return thm43_b_iii(); }},
      {"thm43_b_iv", [](int) { return thm43_b_iv(); }},
  };
  return t;
}

}  // namespace

std::vector<std::string> list_counterexamples() {
  std::vector<std::string> out;
  for (const auto& [name, make] : table()) out.push_back(name);
  return out;
}

RegisteredCounterexample get_counterexample(std::string_view name, int level) {
  const auto& t = table();
  const auto it = t.find(name);
  if (it == t.end()) throw Error(ErrorCode::UnknownName, "no counterexample named '" + std::string(name) + "'");
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "truncation level must be positive");
  return it->second(level);
}

CounterexampleReport verify_counterexample(const RegisteredCounterexample& entry,
                                           const SearchOptions& options) {
  CounterexampleReport report;
  std::ostringstream out;
  out << entry.name << " [" << to_string(entry.claim) << ", class " << entry.spec.text
      << (entry.spec.allow_partial ? ", partial ops" : "") << "]\n";
  if (entry.claim == Claim::SAP_fails) {
    report.verdict = strong_amalgam_search(entry.triple, entry.spec, options);
    report.pass = !report.verdict.found();
    out << "strong amalgam search: " << to_string(report.verdict.kind) << " after "
        << report.verdict.searched << " candidates (" << report.verdict.bounds << ")\n";
    report.weaker = amalgam_search(entry.triple, entry.spec, entry.max_extra, options);
    out << "amalgam search: " << to_string(report.weaker->kind) << " after " << report.weaker->searched
        << " candidates";
    if (!report.weaker->b_names.empty()) {
      out << ", identifying";
      for (const auto& [b, d] : report.weaker->b_names) out << " " << b << "=" << d;
    }
    out << "\n";
  } else {
    report.verdict = amalgam_search(entry.triple, entry.spec, entry.max_extra, options);
    report.pass = !report.verdict.found();
    out << "amalgam search: " << to_string(report.verdict.kind) << " after " << report.verdict.searched
        << " candidates (" << report.verdict.bounds << ")\n";
  }
  if (entry.truncated)
    out << "note: truncated encoding, the claim is confirmed for the truncation only: "
        << entry.truncation_note << "\n";
  out << (report.pass ? "PASS" : "FAIL") << ": claim " << to_string(entry.claim)
      << (report.pass ? " confirmed" : " refuted by the oracle");
  report.text = out.str();
  return report;
}

CounterexampleReport verify_counterexample(std::string_view name, const SearchOptions& options, int level) {
  return verify_counterexample(get_counterexample(name, level), options);
}

}  // namespace ordamalg
