#include "ordamalg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ordamalg {
namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Structure& s)
      : s_(s), n_(static_cast<int>(s.size())), perm_(s.size()), used_(s.size(), 0) {}

  void run() {
    prefix_.clear();
    dfs(0);
  }

  const std::vector<ElemId>& best_perm() const { return best_perm_; }
  const std::vector<int>& best_order() const { return best_order_; }
  const std::vector<int>& best_ops() const { return best_ops_; }

 private:
  // Order bits for position k against positions 0..k, in a prefix-stable layout.
  void push_block(int k) {
    const ElemId ek = perm_[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) {
      const ElemId ej = perm_[static_cast<std::size_t>(j)];
      prefix_.push_back(s_.leq(ek, ej) ? 1 : 0);
      prefix_.push_back(s_.leq(ej, ek) ? 1 : 0);
    }
    prefix_.push_back(s_.leq(ek, ek) ? 1 : 0);
  }

  // -1 / 0 / +1 comparing the current prefix with the same-length prefix of the best.
  int compare_prefix() const {
    if (!have_best_) return -1;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      if (prefix_[i] != best_order_[i]) return prefix_[i] < best_order_[i] ? -1 : 1;
    }
    return 0;
  }

  std::vector<int> op_encoding() const {
    std::vector<ElemId> pos(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) pos[static_cast<std::size_t>(perm_[static_cast<std::size_t>(p)])] = p;
    std::vector<int> enc;
    for (const auto& op : s_.ops())
      for (int p = 0; p < n_; ++p) {
        ElemId v = op(perm_[static_cast<std::size_t>(p)]);
        enc.push_back(v == kUndefined ? -1 : pos[static_cast<std::size_t>(v)]);
      }
    return enc;
  }

  void dfs(int k) {
    if (k == n_) {
      std::vector<int> ops = op_encoding();
      const int c = compare_prefix();
      if (c < 0 || (c == 0 && ops < best_ops_)) {
        best_order_ = prefix_;
        best_ops_ = std::move(ops);
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    for (ElemId e = 0; e < n_; ++e) {
      if (used_[static_cast<std::size_t>(e)]) continue;
      used_[static_cast<std::size_t>(e)] = 1;
      perm_[static_cast<std::size_t>(k)] = e;
      const std::size_t mark = prefix_.size();
      push_block(k);
      if (compare_prefix() <= 0) dfs(k + 1);
      prefix_.resize(mark);
      used_[static_cast<std::size_t>(e)] = 0;
    }
  }

  const Structure& s_;
  int n_;
  std::vector<ElemId> perm_;
  std::vector<char> used_;
  std::vector<int> prefix_;
  bool have_best_ = false;
  std::vector<int> best_order_;
  std::vector<int> best_ops_;
  std::vector<ElemId> best_perm_;
};

}  // namespace

CanonicalKey canonical_key(const Structure& s) {
  CanonicalSearch search(s);
  search.run();
  CanonicalKey key;
  key.push_back(static_cast<int>(s.size()));
  key.push_back(s.is_linear() ? 1 : 0);
  key.push_back(static_cast<int>(s.ops().size()));
  for (const auto& op : s.ops()) {
    key.push_back(static_cast<int>(op.kind));
    key.push_back(static_cast<int>(op.symbol.size()));
    for (char ch : op.symbol) key.push_back(static_cast<unsigned char>(ch));
  }
  key.insert(key.end(), search.best_order().begin(), search.best_order().end());
  key.insert(key.end(), search.best_ops().begin(), search.best_ops().end());
  return key;
}

Structure canonical_form(const Structure& s) {
  CanonicalSearch search(s);
  search.run();
  const auto& perm = search.best_perm();
  std::vector<ElemId> pos(s.size());
  for (std::size_t p = 0; p < perm.size(); ++p) pos[static_cast<std::size_t>(perm[p])] = static_cast<ElemId>(p);
  std::vector<std::string> names;
  for (std::size_t p = 0; p < s.size(); ++p) names.push_back("e" + std::to_string(p));
  Relation order(s.size());
  for (std::size_t p = 0; p < s.size(); ++p)
    for (std::size_t q = 0; q < s.size(); ++q)
      order.set(static_cast<ElemId>(p), static_cast<ElemId>(q), s.leq(perm[p], perm[q]));
  std::vector<UnaryOp> ops;
  for (const auto& op : s.ops()) {
    UnaryOp c{op.symbol, op.kind, std::vector<ElemId>(s.size(), kUndefined)};
    for (std::size_t p = 0; p < s.size(); ++p) {
      ElemId v = op(perm[p]);
      if (v != kUndefined) c.graph[p] = pos[static_cast<std::size_t>(v)];
    }
    ops.push_back(std::move(c));
  }
  return Structure(s.name(), std::move(names), std::move(order), s.linearity(), std::move(ops));
}

bool isomorphic_brute_force(const Structure& a, const Structure& b) {
  if (a.size() != b.size() || a.linearity() != b.linearity()) return false;
  if (signature(a) != signature(b)) return false;
  std::vector<ElemId> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  const auto n = static_cast<ElemId>(a.size());
  do {
    bool ok = true;
    for (ElemId i = 0; i < n && ok; ++i)
      for (ElemId j = 0; j < n && ok; ++j)
        if (a.leq(i, j) != b.leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) ok = false;
    for (std::size_t k = 0; k < a.ops().size() && ok; ++k) {
      const auto& fa = a.ops()[k];
      const auto& fb = b.ops()[k];
      for (ElemId i = 0; i < n && ok; ++i) {
        ElemId va = fa(i);
        ElemId vb = fb(perm[static_cast<std::size_t>(i)]);
        if (va == kUndefined ? vb != kUndefined : vb != perm[static_cast<std::size_t>(va)]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ordamalg
