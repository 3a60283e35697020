#include "ordamalg/relation.hpp"

namespace ordamalg {

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(static_cast<ElemId>(i), static_cast<ElemId>(i));
  return r;
}

Relation Relation::reflexive_transitive_closure() const {
  Relation r = *this;
  const auto n = static_cast<ElemId>(n_);
  for (ElemId i = 0; i < n; ++i) r.set(i, i);
  // Warshall
  for (ElemId k = 0; k < n; ++k)
    for (ElemId i = 0; i < n; ++i) {
      if (!r(i, k)) continue;
      for (ElemId j = 0; j < n; ++j)
        if (r(k, j)) r.set(i, j);
    }
  return r;
}

bool Relation::is_reflexive() const {
  for (ElemId i = 0; i < static_cast<ElemId>(n_); ++i)
    if (!(*this)(i, i)) return false;
  return true;
}

bool Relation::is_antisymmetric() const {
  const auto n = static_cast<ElemId>(n_);
  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = i + 1; j < n; ++j)
      if ((*this)(i, j) && (*this)(j, i)) return false;
  return true;
}

bool Relation::is_transitive() const {
  const auto n = static_cast<ElemId>(n_);
  for (ElemId i = 0; i < n; ++i)
    for (ElemId k = 0; k < n; ++k) {
      if (!(*this)(i, k)) continue;
      for (ElemId j = 0; j < n; ++j)
        if ((*this)(k, j) && !(*this)(i, j)) return false;
    }
  return true;
}

bool Relation::is_total() const {
  const auto n = static_cast<ElemId>(n_);
  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = i + 1; j < n; ++j)
      if (!comparable(i, j)) return false;
  return true;
}

std::vector<std::pair<ElemId, ElemId>> Relation::covering_pairs() const {
  std::vector<std::pair<ElemId, ElemId>> out;
  const auto n = static_cast<ElemId>(n_);
  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = 0; j < n; ++j) {
      if (!strictly(i, j)) continue;
      bool covered = true;
      for (ElemId k = 0; k < n && covered; ++k)
        if (k != i && k != j && strictly(i, k) && strictly(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

Relation Relation::restricted(const std::vector<ElemId>& indices) const {
  Relation r(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      r.set(static_cast<ElemId>(i), static_cast<ElemId>(j), (*this)(indices[i], indices[j]));
  return r;
}

}  // namespace ordamalg
