// Differential ideals and quotient CDGAs.
#pragma once

#include <string>
#include <vector>

#include "cdga/algebra.hpp"

namespace cdga {

/// span{ e·g : e basis element, g generator }.
Subspace ideal_generated_by(const DGAlgebra& algebra, const std::vector<SparseVec>& generators);

struct IdealCheck {
  bool multiplicative = true;  // closed under multiplication by every basis element
  bool differential = true;    // closed under d
  bool acyclic = false;        // H*(I) = 0 (only meaningful when differential)
  std::vector<std::size_t> dims;   // dim I^k, k = 0..max degree of the algebra
  std::vector<std::size_t> betti;  // of I as a subcomplex
  std::string detail;
  bool ok() const { return multiplicative && differential; }
};

IdealCheck check_ideal(const DGAlgebra& algebra, const Subspace& ideal);

/// A/I with representatives the basis elements at non-pivot coordinates of I.
struct QuotientAlgebra {
  AlgebraPtr source;
  AlgebraPtr algebra;
  Subspace ideal;
  std::vector<std::size_t> representatives;  // quotient index -> source index

  SparseVec project(const SparseVec& v) const;
  SparseVec lift(const SparseVec& q) const;
};

/// Throws MathError when the subspace is not a differential ideal.
QuotientAlgebra quotient_algebra(const AlgebraPtr& algebra, const Subspace& ideal, const std::string& name);

}  // namespace cdga
