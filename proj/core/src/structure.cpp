#include "ordamalg/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ordamalg/error.hpp"

namespace ordamalg {

std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::preserving: return "preserving";
    case OpKind::strict_preserving: return "strict_preserving";
    case OpKind::reversing: return "reversing";
    case OpKind::strict_reversing: return "strict_reversing";
    case OpKind::automorphism: return "automorphism";
    case OpKind::antiautomorphism: return "antiautomorphism";
  }
  return "?";
}

std::optional<OpKind> parse_op_kind(std::string_view text) {
  for (auto k : {OpKind::preserving, OpKind::strict_preserving, OpKind::reversing,
                 OpKind::strict_reversing, OpKind::automorphism, OpKind::antiautomorphism})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

bool is_reversing_kind(OpKind kind) {
  return kind == OpKind::reversing || kind == OpKind::strict_reversing ||
         kind == OpKind::antiautomorphism;
}

bool requires_bijection(OpKind kind) {
  return kind == OpKind::automorphism || kind == OpKind::antiautomorphism;
}

bool is_strict_kind(OpKind kind) {
  return kind != OpKind::preserving && kind != OpKind::reversing;
}

bool UnaryOp::total() const {
  return std::none_of(graph.begin(), graph.end(), [](ElemId v) { return v == kUndefined; });
}

bool UnaryOp::bijective() const {
  if (!total()) return false;
  std::vector<char> hit(graph.size(), 0);
  for (ElemId v : graph) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

ElemId UnaryOp::iterate(ElemId x, int n) const {
  for (int i = 0; i < n && x != kUndefined; ++i) x = (*this)(x);
  return x;
}

bool is_valid_element_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '(' || ch == ')' ||
        ch == ',' || ch == '#')
      return false;
  }
  return name.find("->") == std::string_view::npos;
}

bool is_valid_symbol(std::string_view symbol) {
  if (symbol.empty()) return false;
  return std::all_of(symbol.begin(), symbol.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
           ch == '_' || ch == '\'';
  });
}

Structure::Structure(std::string name, std::vector<std::string> elements, Relation order,
                     Linearity linearity, std::vector<UnaryOp> ops)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      order_(std::move(order)),
      linearity_(linearity),
      ops_(std::move(ops)) {
  const std::size_t n = elements_.size();
  if (order_.size() != n)
    throw Error(ErrorCode::InvalidStructure, "order relation size does not match carrier");
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_valid_element_name(elements_[i]))
      throw Error(ErrorCode::InvalidStructure, "invalid element name '" + elements_[i] + "'");
    if (!index_.emplace(elements_[i], static_cast<ElemId>(i)).second)
      throw Error(ErrorCode::InvalidStructure, "duplicate element '" + elements_[i] + "'");
  }
  std::sort(ops_.begin(), ops_.end(),
            [](const UnaryOp& a, const UnaryOp& b) { return a.symbol < b.symbol; });
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    const auto& op = ops_[k];
    if (!is_valid_symbol(op.symbol))
      throw Error(ErrorCode::InvalidStructure, "invalid op symbol '" + op.symbol + "'");
    if (k > 0 && ops_[k - 1].symbol == op.symbol)
      throw Error(ErrorCode::InvalidStructure, "duplicate op symbol '" + op.symbol + "'");
    if (op.graph.size() != n)
      throw Error(ErrorCode::InvalidStructure, "op '" + op.symbol + "' graph size mismatch");
    for (ElemId v : op.graph)
      if (v != kUndefined && (v < 0 || static_cast<std::size_t>(v) >= n))
        throw Error(ErrorCode::InvalidStructure, "op '" + op.symbol + "' image out of range");
  }
}

std::optional<ElemId> Structure::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const UnaryOp* Structure::find_op(std::string_view symbol) const {
  for (const auto& op : ops_)
    if (op.symbol == symbol) return &op;
  return nullptr;
}

std::vector<ElemId> Structure::ascending() const {
  std::vector<ElemId> idx(size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<ElemId>(i);
  // Rank by number of elements below; exact for total orders.
  std::vector<int> below(size(), 0);
  for (ElemId i = 0; i < static_cast<ElemId>(size()); ++i)
    for (ElemId j = 0; j < static_cast<ElemId>(size()); ++j)
      if (less(j, i)) ++below[static_cast<std::size_t>(i)];
  std::stable_sort(idx.begin(), idx.end(), [&](ElemId a, ElemId b) {
    return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)];
  });
  return idx;
}

Structure Structure::with_name(std::string name) const {
  Structure s = *this;
  s.name_ = std::move(name);
  return s;
}

Structure Structure::with_linearity(Linearity linearity) const {
  Structure s = *this;
  s.linearity_ = linearity;
  return s;
}

Structure Structure::with_ops(std::vector<UnaryOp> ops) const {
  return Structure(name_, elements_, order_, linearity_, std::move(ops));
}

Structure Structure::without(std::string_view name) const {
  const auto gone = index_of(name);
  if (!gone) throw Error(ErrorCode::UnknownName, "no element '" + std::string(name) + "'");
  std::vector<ElemId> keep;
  for (ElemId d = 0; d < static_cast<ElemId>(size()); ++d)
    if (d != *gone) keep.push_back(d);
  return restricted_to(keep);
}

Structure Structure::restricted_to(const std::vector<ElemId>& indices) const {
  std::vector<ElemId> position(size(), kUndefined);
  std::vector<std::string> names;
  names.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    position[static_cast<std::size_t>(indices[i])] = static_cast<ElemId>(i);
    names.push_back(element(indices[i]));
  }
  std::vector<UnaryOp> ops;
  for (const auto& op : ops_) {
    UnaryOp r{op.symbol, op.kind, std::vector<ElemId>(indices.size(), kUndefined)};
    for (std::size_t i = 0; i < indices.size(); ++i) {
      ElemId v = op(indices[i]);
      if (v != kUndefined) r.graph[i] = position[static_cast<std::size_t>(v)];
    }
    ops.push_back(std::move(r));
  }
  return Structure(name_, std::move(names), order_.restricted(indices), linearity_,
                   std::move(ops));
}

bool operator==(const Structure& a, const Structure& b) {
  return a.elements_ == b.elements_ && a.order_ == b.order_ && a.linearity_ == b.linearity_ &&
         a.ops_ == b.ops_;
}

// ---------------------------------------------------------------------------------------

StructureBuilder& StructureBuilder::elements(std::vector<std::string> names) {
  elements_ = std::move(names);
  return *this;
}

StructureBuilder& StructureBuilder::chain(std::vector<std::string> ascending) {
  if (elements_.empty()) elements_ = ascending;
  for (std::size_t i = 0; i + 1 < ascending.size(); ++i)
    pairs_.emplace_back(ascending[i], ascending[i + 1]);
  linearity_ = Linearity::linear;
  return *this;
}

StructureBuilder& StructureBuilder::less(const std::string& lo, const std::string& hi) {
  pairs_.emplace_back(lo, hi);
  return *this;
}

StructureBuilder& StructureBuilder::linearity(Linearity linearity) {
  linearity_ = linearity;
  return *this;
}

StructureBuilder& StructureBuilder::op(std::string symbol, OpKind kind,
                                       std::vector<std::pair<std::string, std::string>> graph) {
  ops_.push_back({std::move(symbol), kind, std::move(graph)});
  return *this;
}

Structure StructureBuilder::build() const {
  std::unordered_map<std::string, ElemId> idx;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    idx.emplace(elements_[i], static_cast<ElemId>(i));
  auto lookup = [&](const std::string& name) {
    auto it = idx.find(name);
    if (it == idx.end())
      throw Error(ErrorCode::InvalidStructure, "unknown element '" + name + "'");
    return it->second;
  };
  Relation r(elements_.size());
  for (const auto& [lo, hi] : pairs_) r.set(lookup(lo), lookup(hi));
  r = r.reflexive_transitive_closure();
  std::vector<UnaryOp> ops;
  for (const auto& pending : ops_) {
    UnaryOp op{pending.symbol, pending.kind, std::vector<ElemId>(elements_.size(), kUndefined)};
    for (const auto& [from, to] : pending.graph) {
      ElemId x = lookup(from);
      ElemId y = lookup(to);
      if (op.graph[static_cast<std::size_t>(x)] != kUndefined &&
          op.graph[static_cast<std::size_t>(x)] != y)
        throw Error(ErrorCode::InvalidStructure,
                    "op '" + pending.symbol + "' is not functional at '" + from + "'");
      op.graph[static_cast<std::size_t>(x)] = y;
    }
    ops.push_back(std::move(op));
  }
  return Structure(name_, elements_, std::move(r), linearity_.value_or(Linearity::partial),
                   std::move(ops));
}

// ---------------------------------------------------------------------------------------

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotReflexive: return "not reflexive";
    case ViolationKind::NotAntisymmetric: return "not antisymmetric";
    case ViolationKind::NotTransitive: return "not transitive";
    case ViolationKind::NotTotal: return "not total";
    case ViolationKind::OpNotTotal: return "operation not total";
    case ViolationKind::OpNotBijective: return "operation not bijective";
    case ViolationKind::Monotonicity: return "monotonicity violated";
    case ViolationKind::Strictness: return "strictness violated";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& v : violations) out << to_string(v.kind) << ": " << v.detail << '\n';
  return out.str();
}

void validate_op(const Structure& s, const UnaryOp& op, ValidationReport& report) {
  const auto n = static_cast<ElemId>(s.size());
  if (requires_bijection(op.kind)) {
    if (!op.total())
      report.violations.push_back({ViolationKind::OpNotTotal, "op " + op.symbol});
    else if (!op.bijective())
      report.violations.push_back({ViolationKind::OpNotBijective, "op " + op.symbol});
  }
  const bool reversed = is_reversing_kind(op.kind);
  const bool strict = is_strict_kind(op.kind);
  for (ElemId a = 0; a < n; ++a) {
    if (!op.defined(a)) continue;
    for (ElemId b = 0; b < n; ++b) {
      if (a == b || !s.leq(a, b) || !op.defined(b)) continue;
      ElemId fa = op(a);
      ElemId fb = op(b);
      const bool monotone = reversed ? s.leq(fb, fa) : s.leq(fa, fb);
      const std::string where = "op " + op.symbol + " at (" + s.element(a) + "," + s.element(b) + ")";
      if (!monotone) {
        report.violations.push_back({ViolationKind::Monotonicity, where});
      } else if (strict && fa == fb) {
        report.violations.push_back({ViolationKind::Strictness, where});
      }
    }
  }
}

ValidationReport validate(const Structure& s) {
  ValidationReport report;
  const Relation& r = s.order();
  const auto n = static_cast<ElemId>(s.size());
  for (ElemId i = 0; i < n; ++i)
    if (!r(i, i)) report.violations.push_back({ViolationKind::NotReflexive, s.element(i)});
  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = i + 1; j < n; ++j)
      if (r(i, j) && r(j, i))
        report.violations.push_back(
            {ViolationKind::NotAntisymmetric, "(" + s.element(i) + "," + s.element(j) + ")"});
  for (ElemId i = 0; i < n; ++i)
    for (ElemId k = 0; k < n; ++k) {
      if (i == k || !r(i, k)) continue;
      for (ElemId j = 0; j < n; ++j)
        if (j != k && r(k, j) && !r(i, j))
          report.violations.push_back({ViolationKind::NotTransitive,
                                       "(" + s.element(i) + "," + s.element(k) + "," +
                                           s.element(j) + ")"});
    }
  if (s.is_linear()) {
    for (ElemId i = 0; i < n; ++i)
      for (ElemId j = i + 1; j < n; ++j)
        if (!r.comparable(i, j))
          report.violations.push_back(
              {ViolationKind::NotTotal, "(" + s.element(i) + "," + s.element(j) + ")"});
  }
  for (const auto& op : s.ops()) validate_op(s, op, report);
  return report;
}

// ---------------------------------------------------------------------------------------

bool is_embedding(const Structure& source, const Structure& target, const EmbeddingMap& map) {
  if (map.image.size() != source.size())
    throw Error(ErrorCode::InvalidArgument, "embedding map is not total on the source");
  std::vector<char> hit(target.size(), 0);
  for (ElemId v : map.image) {
    if (v < 0 || static_cast<std::size_t>(v) >= target.size())
      throw Error(ErrorCode::ImageOutsideTarget, "image index outside target carrier");
    if (hit[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::MapNotInjective, "element '" + target.element(v) + "' hit twice");
    hit[static_cast<std::size_t>(v)] = 1;
  }
  const auto n = static_cast<ElemId>(source.size());
  auto img = [&](ElemId x) { return map.image[static_cast<std::size_t>(x)]; };
  for (ElemId c = 0; c < n; ++c)
    for (ElemId d = 0; d < n; ++d)
      if (source.leq(c, d) != target.leq(img(c), img(d))) return false;
  for (const auto& op : source.ops()) {
    const UnaryOp* other = target.find_op(op.symbol);
    if (other == nullptr) continue;
    for (ElemId x = 0; x < n; ++x) {
      if (!op.defined(x)) continue;
      if ((*other)(img(x)) != img(op(x))) return false;
    }
  }
  return true;
}

EmbeddingMap inclusion_map(const Structure& source, const Structure& target) {
  EmbeddingMap m;
  m.image.reserve(source.size());
  for (const auto& name : source.elements()) {
    auto idx = target.index_of(name);
    if (!idx) throw Error(ErrorCode::ImageOutsideTarget, "'" + name + "' missing in target");
    m.image.push_back(*idx);
  }
  return m;
}

EmbeddingMap map_from_names(const Structure& source, const Structure& target,
                            const NameMap& names) {
  EmbeddingMap m;
  for (const auto& name : source.elements()) {
    auto it = names.find(name);
    if (it == names.end())
      throw Error(ErrorCode::InvalidArgument, "map undefined at '" + name + "'");
    auto idx = target.index_of(it->second);
    if (!idx)
      throw Error(ErrorCode::ImageOutsideTarget, "'" + it->second + "' missing in target");
    m.image.push_back(*idx);
  }
  return m;
}

EmbeddingMap map_with_renames(const Structure& source, const Structure& target,
                              const NameMap& renames) {
  NameMap full;
  for (const auto& name : source.elements()) {
    auto it = renames.find(name);
    full[name] = it == renames.end() ? name : it->second;
  }
  return map_from_names(source, target, full);
}

NameMap names_of(const Structure& source, const Structure& target, const EmbeddingMap& map) {
  NameMap out;
  for (std::size_t i = 0; i < map.image.size(); ++i)
    out[source.element(static_cast<ElemId>(i))] = target.element(map.image[i]);
  return out;
}

Structure rename(const Structure& s, const NameMap& names) {
  std::vector<std::string> renamed;
  renamed.reserve(s.size());
  std::set<std::string> seen;
  for (const auto& e : s.elements()) {
    auto it = names.find(e);
    std::string n = it == names.end() ? e : it->second;
    if (!is_valid_element_name(n))
      throw Error(ErrorCode::InvalidArgument, "invalid element name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorCode::NameCollision, "name '" + n + "' used twice");
    renamed.push_back(std::move(n));
  }
  return Structure(s.name(), std::move(renamed), s.order(), s.linearity(), s.ops());
}

NameMap inverse(const NameMap& names) {
  NameMap out;
  for (const auto& [k, v] : names) {
    if (!out.emplace(v, k).second)
      throw Error(ErrorCode::NameCollision, "name map is not injective at '" + v + "'");
  }
  return out;
}

std::vector<std::pair<std::string, OpKind>> signature(const Structure& s) {
  std::vector<std::pair<std::string, OpKind>> sig;
  for (const auto& op : s.ops()) sig.emplace_back(op.symbol, op.kind);
  return sig;
}

namespace {

// C must be closed under every op of X and the inclusion must commute, including
// undefinedness, so that A and B cannot disagree on C.
void check_inclusion(const Structure& C, const Structure& X, const char* label) {
  EmbeddingMap inc;
  try {
    inc = inclusion_map(C, X);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidTriple, std::string("C is not contained in ") + label);
  }
  if (!is_embedding(C, X, inc))
    throw Error(ErrorCode::InvalidTriple, std::string("inclusion C -> ") + label + " is not an embedding");
  for (const auto& op : C.ops()) {
    const UnaryOp* xop = X.find_op(op.symbol);
    for (ElemId c = 0; c < static_cast<ElemId>(C.size()); ++c) {
      ElemId xv = (*xop)(inc.image[static_cast<std::size_t>(c)]);
      if (!op.defined(c) && xv != kUndefined)
        throw Error(ErrorCode::InvalidTriple, std::string("C is not closed under ") + op.symbol +
                                                  " in " + label + " at '" + C.element(c) + "'");
    }
  }
}

}  // namespace

void validate_triple(const AmalgamationTriple& t, const TripleOptions& options) {
  if (signature(t.A) != signature(t.B) || signature(t.A) != signature(t.C))
    throw Error(ErrorCode::InvalidTriple, "A, B and C have different signatures");
  std::set<std::string> common;
  for (const auto& e : t.A.elements())
    if (t.B.contains(e)) common.insert(e);
  std::set<std::string> cset(t.C.elements().begin(), t.C.elements().end());
  if (common != cset) throw Error(ErrorCode::InvalidTriple, "carrier(C) differs from A ∩ B");
  if (!options.allow_empty_c && t.C.empty())
    throw Error(ErrorCode::InvalidTriple, "empty C is not allowed");
  check_inclusion(t.C, t.A, "A");
  check_inclusion(t.C, t.B, "B");
}

AmalgamationTriple intersect_to_triple(const Structure& A, const Structure& B,
                                       const TripleOptions& options) {
  if (signature(A) != signature(B))
    throw Error(ErrorCode::InvalidTriple, "A and B have different signatures");
  std::vector<ElemId> in_a;
  std::vector<ElemId> in_b;
  for (ElemId i = 0; i < static_cast<ElemId>(A.size()); ++i) {
    if (auto j = B.index_of(A.element(i))) {
      in_a.push_back(i);
      in_b.push_back(*j);
    }
  }
  if (!options.allow_empty_c && in_a.empty())
    throw Error(ErrorCode::InvalidTriple, "empty C is not allowed");
  for (std::size_t x = 0; x < in_a.size(); ++x)
    for (std::size_t y = 0; y < in_a.size(); ++y)
      if (A.leq(in_a[x], in_a[y]) != B.leq(in_b[x], in_b[y]))
        throw Error(ErrorCode::IntersectionMismatch,
                    "A and B order '" + A.element(in_a[x]) + "' and '" + A.element(in_a[y]) +
                        "' differently");
  for (std::size_t k = 0; k < A.ops().size(); ++k) {
    const UnaryOp& fa = A.ops()[k];
    const UnaryOp& fb = B.ops()[k];
    for (std::size_t x = 0; x < in_a.size(); ++x) {
      ElemId va = fa(in_a[x]);
      ElemId vb = fb(in_b[x]);
      const bool agree = (va == kUndefined && vb == kUndefined) ||
                         (va != kUndefined && vb != kUndefined && A.element(va) == B.element(vb));
      if (!agree)
        throw Error(ErrorCode::IntersectionMismatch,
                    "A and B disagree on " + fa.symbol + "(" + A.element(in_a[x]) + ")");
    }
  }
  Structure C = A.restricted_to(in_a).with_name(A.name() + "∩" + B.name());
  return AmalgamationTriple{A, B, std::move(C)};
}

}  // namespace ordamalg
