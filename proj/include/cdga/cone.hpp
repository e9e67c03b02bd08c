// Mapping cones with the semi-trivial product, the cone model C(Δ!) and the
// even-dimensional quotient model.
#pragma once

#include <string>
#include <vector>

#include "cdga/module.hpp"
#include "cdga/poincare.hpp"
#include "cdga/quotient.hpp"

namespace cdga {

/// C(f) = R ⊕_f sB for a module map f: B → R into the regular module, as a
/// CDGA with the semi-trivial product:
///   r·r' in R,  r·sb = (-1)^{|r|} s(r·b),  sb·r = (-1)^{|b||r|} s(r·b),  sb·sb' = 0,
/// and δ(r, sb) = (dr + f(b), -s d_B b). |sb| = |b| - 1.
struct MappingCone {
  ModuleMap map;
  AlgebraPtr ring;
  AlgebraPtr algebra;
  std::vector<std::size_t> base_index;       // R basis -> cone index
  std::vector<std::size_t> suspended_index;  // B basis -> cone index of sb
  /// Basis pairs (r, sb) on which the direct form of sb·r was compared with
  /// the form derived from r·sb and graded commutativity.
  std::size_t sign_pairs_checked = 0;

  SparseVec include(const SparseVec& r) const;
  SparseVec suspend(const SparseVec& b) const;
};

/// Throws MathError when f is not a module map or the two derivations of
/// sb·r disagree somewhere.
MappingCone mapping_cone(const ModuleMap& f, const std::string& prefix = "S", const std::string& name = "");

/// s^{-n}A as an A⊗A-module, derived from the multiplication module A and
/// the suspension rule.
DGModule desuspended_module(const PDAlgebra& pd);
/// Same module with the action typed in from the explicit formula
/// (x⊗y)·s^{-n}a = (-1)^{n|x| + n|y| + |a||y|} s^{-n}(x·a·y).
DGModule desuspended_module_explicit(const PDAlgebra& pd);

/// Δ!: s^{-n}A → A⊗A, s^{-n}a ↦ Δ·(1⊗a).
ModuleMap shriek_map(const PDAlgebra& pd);

/// C(Δ!) with suspension labels "S<label>". Runs the full CDGA axiom check
/// and throws MathError if it fails.
MappingCone cone_model(const PDAlgebra& pd);

struct EvenModel {
  MappingCone cone;
  QuotientAlgebra quotient;      // C(Δ!)/I with I = (ω⊗ω, Sω)
  IdealCheck ideal;
  std::vector<SparseVec> inclusion;  // a⊗b ↦ class of (a⊗b, 0)
  MapCheck inclusion_check;
};

/// Throws PreconditionError("OddDimension") when n is odd.
EvenModel even_model(const PDAlgebra& pd);

}  // namespace cdga
