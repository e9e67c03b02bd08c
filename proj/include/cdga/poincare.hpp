// Poincaré duality CDGAs: orientation, dual basis and the diagonal class.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdga/algebra.hpp"
#include "cdga/errors.hpp"
#include "cdga/tensor.hpp"

namespace cdga {

struct PdFailure {
  enum class Kind { NotCdga, BadOrientation, OrientationNotClosed, Degenerate };
  Kind kind;
  /// Degree of the failure (the degree k of a degenerate pairing
  /// A^k ⊗ A^{n-k}, or n-1 for a non-closed orientation).
  int degree = 0;
  /// Nonzero element exhibiting the failure.
  SparseVec witness;
  std::string detail;
};

std::string to_string(PdFailure::Kind kind);

class PdError : public MathError {
 public:
  explicit PdError(std::vector<PdFailure> failures);
  const std::vector<PdFailure>& failures() const { return failures_; }

 private:
  std::vector<PdFailure> failures_;
};

struct PdCheck;

/// A CDGA with an orientation ε: A^n → ℚ whose pairing is non-degenerate.
/// Only obtainable through check_pd/make_pd, so every instance is valid.
class PDAlgebra {
 public:
  const AlgebraPtr& algebra() const { return algebra_; }
  int n() const { return n_; }
  const SparseVec& epsilon() const { return epsilon_; }
  Scalar eps(const SparseVec& v) const;
  /// Basis element of A^n (first in basis order with ε ≠ 0), rescaled so ε(ω) = 1.
  const SparseVec& omega() const { return omega_; }
  /// a_i* for every basis index i: ε(a_i·a_j*) = δ_ij.
  const SparseVec& dual(std::size_t i) const { return dual_.at(i); }
  const std::vector<SparseVec>& dual_basis() const { return dual_; }
  /// A⊗A, built once.
  const TensorAlgebra& square() const { return *square_; }
  /// Δ = Σ (-1)^{|a_i|} a_i⊗a_i* in A⊗A.
  const SparseVec& diagonal() const { return diagonal_; }

 private:
  friend PdCheck check_pd(const AlgebraPtr&, int, const SparseVec&);
  PDAlgebra() = default;
  AlgebraPtr algebra_;
  int n_ = 0;
  SparseVec epsilon_;
  SparseVec omega_;
  std::vector<SparseVec> dual_;
  std::shared_ptr<const TensorAlgebra> square_;
  SparseVec diagonal_;
};

using PdPtr = std::shared_ptr<const PDAlgebra>;

struct PdCheck {
  PdPtr pd;  // null when some check failed
  std::vector<PdFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Verifies the CDGA axioms, ε(dA^{n-1}) = 0 and non-degeneracy of
/// A^k ⊗ A^{n-k} → ℚ in every degree k. All failing degrees are reported,
/// each with a nonzero element annihilated by the pairing.
PdCheck check_pd(const AlgebraPtr& algebra, int n, const SparseVec& epsilon);

/// check_pd, throwing PdError on failure.
PdPtr make_pd(const AlgebraPtr& algebra, int n, const SparseVec& epsilon);

/// τ(a⊗b) = (-1)^{|a||b|} b⊗a on A⊗A.
SparseVec twist(const TensorAlgebra& t, const SparseVec& v);

}  // namespace cdga
