#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordamalg {

/// Index of an element inside one structure's carrier.
using ElemId = int;

/// Marks an undefined value of a partial unary operation.
inline constexpr ElemId kUndefined = -1;

/// Dense binary relation on {0, ..., n-1}, stored row-major.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  static Relation identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  bool operator()(ElemId i, ElemId j) const {
    return bits_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)] != 0;
  }
  void set(ElemId i, ElemId j, bool value = true) {
    bits_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)] = value ? 1 : 0;
  }

  /// Strict part: i R j and i != j.
  bool strictly(ElemId i, ElemId j) const { return i != j && (*this)(i, j); }
  bool comparable(ElemId i, ElemId j) const { return (*this)(i, j) || (*this)(j, i); }

  Relation reflexive_transitive_closure() const;

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_total() const;
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

  /// Pairs (i, j), i != j, with i below j and nothing strictly between.
  std::vector<std::pair<ElemId, ElemId>> covering_pairs() const;

  /// Induced relation on the listed indices, re-indexed 0..k-1.
  Relation restricted(const std::vector<ElemId>& indices) const;

  const std::vector<std::uint8_t>& raw() const noexcept { return bits_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace ordamalg
