// Finite-dimensional commutative differential graded algebras over ℚ.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdga/complex.hpp"
#include "cdga/linear.hpp"

namespace cdga {

/// Labeled homogeneous basis. Elements are ordered by degree; within a degree
/// the order is fixed by whoever built the algebra (label order for parsed
/// files, construction order for derived algebras).
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(std::vector<std::string> labels, std::vector<int> degrees);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& degrees() const { return degrees_; }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws StructureError for an unknown label.
  std::size_t index_of(const std::string& label) const;
  std::vector<std::size_t> in_degree(int degree) const;
  int max_degree() const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

class DGAlgebra;
using AlgebraPtr = std::shared_ptr<const DGAlgebra>;

/// Immutable CDGA given by structure constants on a graded basis.
///
/// Products are stored one-sided, for index pairs i <= j; the opposite order
/// is recovered with the Koszul sign (-1)^{|a_i||a_j|}.
class DGAlgebra {
 public:
  const std::string& name() const { return name_; }
  const GradedBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  int degree(std::size_t i) const { return basis_.degree(i); }
  const std::string& label(std::size_t i) const { return basis_.label(i); }
  std::size_t index_of(const std::string& label) const { return basis_.index_of(label); }
  std::size_t unit() const { return unit_; }
  std::optional<int> top_degree() const { return top_degree_; }
  bool declared_simply_connected() const { return simply_connected_; }

  SparseVec multiply_basis(std::size_t i, std::size_t j) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  const SparseVec& d(std::size_t i) const { return differential_.at(i); }
  SparseVec apply_d(const SparseVec& x) const;
  SparseMatrix differential_matrix() const;

  const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& stored_products() const {
    return products_;
  }
  /// Pairs given in both orders with values that disagree under the Koszul
  /// sign. Only the first value is kept; check_cdga reports these.
  const std::vector<std::pair<std::size_t, std::size_t>>& commutativity_conflicts() const {
    return conflicts_;
  }

  GradedComplex complex() const;

 private:
  friend class AlgebraBuilder;
  DGAlgebra() = default;

  std::string name_;
  GradedBasis basis_;
  std::size_t unit_ = 0;
  std::optional<int> top_degree_;
  bool simply_connected_ = false;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> products_;
  std::vector<SparseVec> differential_;
  std::vector<std::pair<std::size_t, std::size_t>> conflicts_;
};

/// Collects basis, products and differential by insertion slot, then sorts
/// and validates in build(). Products with the unit are filled in as 1·a = a
/// unless given explicitly.
class AlgebraBuilder {
 public:
  enum class Order { Insertion, Label };

  explicit AlgebraBuilder(std::string name, Order order = Order::Insertion);
  /// Copies every structure constant of an existing algebra; slots equal the
  /// algebra's indices.
  static AlgebraBuilder from(const DGAlgebra& algebra);

  std::size_t add_basis(std::string label, int degree);
  std::size_t slot(const std::string& label) const;
  std::size_t size() const { return labels_.size(); }

  void set_unit(std::size_t slot);
  /// Records a·b. Giving the reversed pair later is checked against the
  /// Koszul sign and recorded as a conflict when it disagrees.
  void set_product(std::size_t left, std::size_t right, SparseVec value);
  /// Replaces a·b (and implicitly b·a) without conflict detection.
  void override_product(std::size_t left, std::size_t right, SparseVec value);
  void set_differential(std::size_t from, SparseVec value);
  void set_top_degree(int degree) { top_degree_ = degree; }
  void set_name(std::string name) { name_ = std::move(name); }
  void set_simply_connected(bool flag) { simply_connected_ = flag; }

  /// Throws StructureError when the data does not respect the grading.
  AlgebraPtr build();
  /// Valid after build(): final basis index of every insertion slot.
  const std::vector<std::size_t>& index_of_slot() const { return slot_to_index_; }

 private:
  std::string name_;
  Order order_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::optional<std::size_t> unit_;
  std::optional<int> top_degree_;
  bool simply_connected_ = false;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> products_;
  std::vector<std::pair<std::size_t, std::size_t>> conflicts_;
  std::map<std::size_t, SparseVec> differential_;
  std::vector<std::size_t> slot_to_index_;
};

/// Element of a specific algebra, as sparse coordinates in its basis.
class Element {
 public:
  Element(AlgebraPtr algebra, SparseVec coeffs);
  static Element zero(AlgebraPtr algebra);
  static Element basis(AlgebraPtr algebra, std::size_t index);
  static Element basis(AlgebraPtr algebra, const std::string& label);

  const AlgebraPtr& algebra() const { return algebra_; }
  const SparseVec& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t index) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Common degree of all terms; nullopt for zero or mixed elements.
  std::optional<int> degree() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(const Element& other) const;
  Element operator*(const Scalar& factor) const;
  friend Element operator*(const Scalar& factor, const Element& e) { return e * factor; }
  Element d() const;

  bool operator==(const Element& other) const;

 private:
  void require_same_parent(const Element& other) const;
  AlgebraPtr algebra_;
  SparseVec coeffs_;
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t checked = 0;
  /// Basis indices of the first failing tuple.
  std::vector<std::size_t> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool passed() const;
  const AxiomResult& get(const std::string& axiom) const;
};

/// Exhaustive verification on basis elements: unit, associativity on all
/// triples, graded commutativity on all pairs, d² = 0, Leibniz on all pairs,
/// plus A⁰ = ℚ·1 and A¹ = 0 when the algebra declares itself 1-connected.
AxiomReport check_cdga(const DGAlgebra& algebra);

/// Change of basis: new_i = Σ_j rows[i][j] old_j. rows must be invertible
/// and must not mix degrees.
struct BasisChange {
  AlgebraPtr algebra;
  std::vector<Vector> rows;
  std::vector<Vector> inverse;
  /// Coordinates of an old-basis vector in the new basis.
  SparseVec to_new(const SparseVec& old_coords) const;
  SparseVec to_old(const SparseVec& new_coords) const;
};
BasisChange change_basis(const DGAlgebra& algebra, const std::vector<Vector>& rows,
                         const std::vector<std::string>& new_labels);

/// Same structure constants and differential under a bijection of labels.
bool isomorphic_by_labels(const DGAlgebra& a, const DGAlgebra& b,
                          const std::map<std::string, std::string>& a_to_b);

struct MapCheck {
  bool ok = true;
  std::string detail;
};

/// φ given on basis elements of src: unit to unit, multiplicative on all
/// basis pairs, commuting with the differentials.
MapCheck check_cdga_map(const DGAlgebra& src, const DGAlgebra& dst, const std::vector<SparseVec>& images);

/// Copy with new labels (same order).
AlgebraPtr relabel(const DGAlgebra& algebra, const std::vector<std::string>& labels,
                   const std::string& name);

}  // namespace cdga
