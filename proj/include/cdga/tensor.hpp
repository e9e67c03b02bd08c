// Koszul-signed tensor product of two CDGAs.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdga/algebra.hpp"

namespace cdga {

/// A⊗B with (a⊗b)(a'⊗b') = (-1)^{|a'||b|} aa'⊗bb' and
/// d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db.
///
/// Basis elements are the pairs (i, j) taken in lexicographic order and then
/// stably sorted by total degree, so within a degree the left factor's index
/// varies slowest.
struct TensorAlgebra {
  AlgebraPtr left;
  AlgebraPtr right;
  AlgebraPtr algebra;
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // tensor index -> (i, j)
  std::vector<std::vector<std::size_t>> index;               // [i][j] -> tensor index

  std::size_t at(std::size_t i, std::size_t j) const { return index.at(i).at(j); }
  /// a⊗b for factor-coordinate vectors.
  SparseVec pure(const SparseVec& a, const SparseVec& b) const;
  /// Embeddings a ↦ a⊗1 and b ↦ 1⊗b.
  SparseVec left_inclusion(const SparseVec& a) const;
  SparseVec right_inclusion(const SparseVec& b) const;
};

/// "a⊗b", parenthesizing factor labels that already contain ⊗.
std::string tensor_label(const std::string& a, const std::string& b);

TensorAlgebra tensor(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& name = "");

}  // namespace cdga
