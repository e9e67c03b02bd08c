// Cochain complexes of graded vector spaces and their cohomology.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cdga/errors.hpp"
#include "cdga/linear.hpp"

namespace cdga {

/// Finite complex with a degree +1 differential, given by its columns.
struct GradedComplex {
  std::vector<int> degrees;
  std::vector<SparseVec> differential;
  std::vector<std::string> labels;

  std::size_t size() const { return degrees.size(); }
  int max_degree() const;
  std::vector<std::size_t> in_degree(int degree) const;
};

class NotAComplex : public MathError {
 public:
  NotAComplex(int degree, std::size_t witness)
      : MathError("d² ≠ 0 on a basis element of degree " + std::to_string(degree)),
        degree_(degree),
        witness_(witness) {}
  int degree() const { return degree_; }
  std::size_t witness() const { return witness_; }

 private:
  int degree_;
  std::size_t witness_;
};

struct CohomologyDegree {
  int degree = 0;
  std::size_t betti = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  /// Cocycles reduced against the coboundary basis; zero at every pivot of it.
  std::vector<SparseVec> representatives;
  std::vector<SparseVec> coboundary_basis;
};

struct CohomologyReport {
  std::vector<CohomologyDegree> degrees;  // index = degree, from 0
  std::vector<std::size_t> betti() const;
};

/// Throws NotAComplex when d² ≠ 0, StructureError on a negative degree.
CohomologyReport cohomology(const GradedComplex& complex);

/// The complex restricted to span(vectors); the vectors must be homogeneous
/// and their span closed under the differential (MathError otherwise).
GradedComplex subcomplex(const GradedComplex& complex, const std::vector<SparseVec>& vectors);

/// Degreewise equality after padding the shorter list with zeros.
bool same_betti(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace cdga
