// Products of Poincaré duality algebras and the diagonal correspondence
// (C⊗C)⊗(B⊗B) ≅ (C⊗B)⊗(C⊗B).
#pragma once

#include <string>
#include <vector>

#include "cdga/poincare.hpp"
#include "cdga/quotient.hpp"

namespace cdga {

struct ProductPd {
  TensorAlgebra tensor;  // indices agree with pd->algebra()
  PdPtr pd;
};

/// C⊗B with ε(c⊗b) = ε_C(c)·ε_B(b) and formal dimension n_C + n_B.
/// Labels are simplified ("x⊗1" → "x", "1⊗y" → "y", "x⊗y" → "xy") when the
/// simplified labels are pairwise distinct.
ProductPd product_pd(const PDAlgebra& c, const PDAlgebra& b);

struct CorrespondenceReport {
  ProductPd product;
  TensorAlgebra cc;      // C⊗C
  TensorAlgebra bb;      // B⊗B
  TensorAlgebra source;  // (C⊗C)⊗(B⊗B)
  /// σ((c1⊗c2)⊗(b1⊗b2)) = (-1)^{|c2||b1|} (c1⊗b1)⊗(c2⊗b2), per source basis element.
  std::vector<SparseVec> sigma;
  MapCheck sigma_check;
  bool sigma_bijective = false;
  SparseVec sigma_of_diagonals;  // σ(Δ_C⊗Δ_B)
  SparseVec product_diagonal;    // Δ_A
  int sign = 0;                  // σ(Δ_C⊗Δ_B) = sign·Δ_A, 0 when neither ±1 works
  bool ideals_correspond = false;
  std::vector<std::size_t> source_quotient_betti;   // of (C⊗C⊗B⊗B)/(Δ_C⊗Δ_B)
  std::vector<std::size_t> product_quotient_betti;  // of A⊗A/(Δ_A)
  bool betti_agree = false;
  bool ok() const { return sign != 0 && sigma_check.ok && sigma_bijective && ideals_correspond && betti_agree; }
};

CorrespondenceReport diagonal_correspondence(const PDAlgebra& c, const PDAlgebra& b);

}  // namespace cdga
