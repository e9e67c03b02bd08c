// The odd-dimensional models: truncated cone C, twisted algebras C(ξ),
// the quotient model A⊗A/(Δ), the map Φ, C(x) and the equivalence ideal.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdga/cone.hpp"

namespace cdga {

/// C = C(Δ!)/C(Δ!)^{≥2n-1} with its projection.
struct TruncatedCone {
  MappingCone cone;
  QuotientAlgebra quotient;
  IdealCheck truncated_part;  // the killed subspace: a sub-dg-module, acyclic
};

TruncatedCone truncate_cone(const PDAlgebra& pd);

/// C(ξ): the truncation with S1·S1 = ξ.
struct TwistedModel {
  TruncatedCone truncation;
  AlgebraPtr algebra;
  SparseVec xi;              // in A⊗A
  std::size_t s1 = 0;        // index of S1 in algebra
  std::vector<SparseVec> inclusion;  // A⊗A basis -> C(ξ)
  AxiomReport axioms;
  MapCheck inclusion_check;
};

/// Throws PreconditionError with code "WrongDegree" (ξ not homogeneous of
/// degree 2n-2), "NotACocycle" or "EvenDimensionNonzeroXi" (n even, ξ ≠ 0:
/// S1 has odd degree so its square must vanish).
TwistedModel build_cxi(const PDAlgebra& pd, const SparseVec& xi);

struct DiagonalQuotient {
  QuotientAlgebra quotient;          // A⊗A/(Δ)
  IdealCheck ideal;
};

DiagonalQuotient quotient_by_diagonal(const PDAlgebra& pd);

/// Φ: H^{n-2}(A) → H^{2n-2}(A⊗A)/([Δ]), [a] ↦ [a⊗ω].
struct PhiMap {
  std::vector<SparseVec> source_basis;  // cocycles of A^{n-2} representing H^{n-2}(A)
  std::vector<SparseVec> target_basis;  // cocycles of (A⊗A)^{2n-2} representing the quotient
  Subspace relations;                   // B^{2n-2} + Z^{n-2}(A⊗A)·Δ
  std::vector<Vector> matrix;           // target_basis.size() rows
  std::optional<std::vector<Vector>> inverse;

  bool bijective() const { return inverse.has_value(); }
  /// Coordinates of a degree 2n-2 cocycle in target_basis.
  Vector target_coordinates(const SparseVec& z) const;
  std::vector<SparseVec> images;        // a⊗ω for each source basis element
};

/// Preconditions: n odd ("EvenDimension"), A⁰ = ℚ and A¹ = 0
/// ("NotSimplyConnected"). Throws MathError when Φ is not bijective.
PhiMap phi(const PDAlgebra& pd);

/// C(x) with ξ = x⊗ω. Throws PreconditionError "NotACocycle"/"WrongDegree".
TwistedModel c_of_x(const PDAlgebra& pd, const SparseVec& x);

/// I = S + d(S) + (Δ)^{>n} + S<A⁺> inside C(Δ!).
struct EquivalenceIdeal {
  MappingCone cone;
  Subspace span;
  std::vector<SparseVec> complement;  // S, inside (A⊗A)^{2n-3}
  IdealCheck check;
};

EquivalenceIdeal equivalence_ideal(const PDAlgebra& pd);

struct XiDecision {
  bool equivalent = false;  // false means "not decided here"
  SparseVec r;              // ξ - ξ' = r·Δ + d(b)
  SparseVec b;
  bool congruent_mod_ideal = false;
  bool quotients_identical = false;  // C(ξ)/I and C(ξ')/I have equal structure constants
  std::string note;
};

/// Exact test of [ξ] = [ξ'] in H^{2n-2}(A⊗A)/([Δ]). When the classes agree
/// the witness is verified; otherwise the answer is "not decided here".
XiDecision decide_xi_equivalence(const PDAlgebra& pd, const SparseVec& xi, const SparseVec& xi2);

/// Cocycles of (A⊗A)^{2n-2}, for sampling ξ.
std::vector<SparseVec> xi_cocycle_basis(const PDAlgebra& pd);

}  // namespace cdga
