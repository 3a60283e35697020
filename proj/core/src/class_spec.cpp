#include "ordamalg/class_spec.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "ordamalg/error.hpp"
#include "ordamalg/reversing.hpp"

namespace ordamalg {
namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "class '" + std::string(text) + "': " + why);
}

std::vector<std::string> split_args(std::string_view inner) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= inner.size()) {
    auto comma = inner.find(',', start);
    auto piece = inner.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    std::string s(piece);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
            s.end());
    out.push_back(std::move(s));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int count_arg(std::string_view text, const std::string& tok) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
    bad(text, "expected a count, got '" + tok + "'");
  return v;
}

}  // namespace

ClassSpec parse_class_spec(std::string_view text) {
  ClassSpec spec;
  spec.text = std::string(text);
  std::string_view name = text;
  std::optional<std::string_view> args;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') bad(text, "missing ')'");
    name = text.substr(0, open);
    args = text.substr(open + 1, text.size() - open - 2);
  }
  auto no_args = [&] {
    if (args) bad(text, "'" + std::string(name) + "' takes no arguments");
  };
  using F = ClassFamily;
  if (name == "lo") {
    spec.family = args ? F::lo_sig : F::lo;
  } else if (name == "lo_p") {
    no_args();
    spec.family = F::lo_p;
    spec.signature = {{"f", OpKind::preserving}};
  } else if (name == "lo_sp") {
    no_args();
    spec.family = F::lo_sp;
    spec.signature = {{"f", OpKind::strict_preserving}};
  } else if (name == "lo_r") {
    no_args();
    spec.family = F::lo_r;
    spec.signature = {{"g", OpKind::reversing}};
  } else if (name == "lo_sr") {
    no_args();
    spec.family = F::lo_sr;
    spec.signature = {{"g", OpKind::strict_reversing}};
  } else if (name == "lo_fa") {
    if (!args) bad(text, "lo_fa needs a count, e.g. lo_fa(2)");
    auto a = split_args(*args);
    if (a.size() != 1) bad(text, "lo_fa takes one count");
    spec.family = F::lo_fa;
    const int k = count_arg(text, a[0]);
    for (int i = 1; i <= k; ++i) spec.signature.push_back({"f" + std::to_string(i), OpKind::automorphism});
  } else if (name == "lo_fgac") {
    if (!args) bad(text, "lo_fgac needs two counts, e.g. lo_fgac(1,1)");
    auto a = split_args(*args);
    if (a.size() != 2) bad(text, "lo_fgac takes two counts");
    spec.family = F::lo_fgac;
    spec.require_common_center = true;
    const int k = count_arg(text, a[0]);
    const int l = count_arg(text, a[1]);
    for (int i = 1; i <= k; ++i) spec.signature.push_back({"f" + std::to_string(i), OpKind::automorphism});
    for (int i = 1; i <= l; ++i) spec.signature.push_back({"g" + std::to_string(i), OpKind::antiautomorphism});
  } else if (name == "po") {
    spec.family = F::po;
    spec.linearity = Linearity::partial;
  } else {
    bad(text, "unknown class '" + std::string(name) + "'");
  }

  if (args && (spec.family == F::po || spec.family == F::lo_sig)) {
    std::set<std::string> seen;
    for (const auto& item : split_args(*args)) {
      if (item.empty()) continue;
      auto colon = item.find(':');
      if (colon == std::string::npos) bad(text, "expected sym:kind, got '" + item + "'");
      std::string sym = item.substr(0, colon);
      auto kind = parse_op_kind(std::string_view(item).substr(colon + 1));
      if (!is_valid_symbol(sym)) bad(text, "invalid symbol '" + sym + "'");
      if (!kind) bad(text, "unknown kind in '" + item + "'");
      if (!seen.insert(sym).second) bad(text, "symbol '" + sym + "' repeated");
      spec.signature.emplace_back(std::move(sym), *kind);
    }
  }
  std::sort(spec.signature.begin(), spec.signature.end());
  return spec;
}

std::vector<OpKind> signature_kinds(const ClassSpec& spec) {
  std::vector<OpKind> out;
  for (const auto& [sym, kind] : spec.signature) out.push_back(kind);
  return out;
}

std::string membership_failure(const Structure& s, const ClassSpec& spec) {
  if (spec.linearity == Linearity::linear && !s.is_linear()) return "not flagged linear";
  const ValidationReport report = validate(s);
  if (!report.ok()) return report.summary();
  const auto sig = signature(s);
  if (spec.symbols_fixed()) {
    if (sig != spec.signature) return "signature differs from " + spec.text;
  } else {
    std::vector<OpKind> have;
    for (const auto& [sym, kind] : sig) have.push_back(kind);
    std::vector<OpKind> want = signature_kinds(spec);
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want) return "operation kinds differ from " + spec.text;
  }
  if (!spec.allow_partial) {
    for (const auto& op : s.ops())
      if (!op.total()) return "op '" + op.symbol + "' is partial";
  }
  if (spec.require_common_center) {
    const bool any_reversing = std::any_of(s.ops().begin(), s.ops().end(),
                                           [](const UnaryOp& op) { return is_reversing_kind(op.kind); });
    if (any_reversing && !common_center(s)) return "operations have no common center";
  }
  for (const auto& h : spec.conditions) {
    if (!holds(s, h)) return "condition '" + to_string(h) + "' fails";
  }
  return {};
}

bool is_member(const Structure& s, const ClassSpec& spec) { return membership_failure(s, spec).empty(); }

}  // namespace ordamalg
