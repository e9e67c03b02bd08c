#include "cdga/quotient.hpp"

#include <set>

#include "cdga/errors.hpp"

namespace cdga {

Subspace ideal_generated_by(const DGAlgebra& algebra, const std::vector<SparseVec>& generators) {
  Subspace span;
  for (const auto& g : generators)
    for (std::size_t i = 0; i < algebra.dim(); ++i) span.insert(algebra.multiply(SparseVec{{i, Scalar(1)}}, g));
  return span;
}

IdealCheck check_ideal(const DGAlgebra& algebra, const Subspace& ideal) {
  IdealCheck c;
  const auto basis = ideal.basis();
  for (const auto& v : basis) {
    if (c.differential && !ideal.contains(algebra.apply_d(v))) {
      c.differential = false;
      c.detail = "d maps the ideal outside itself";
    }
    for (std::size_t i = 0; i < algebra.dim() && c.multiplicative; ++i)
      if (!ideal.contains(algebra.multiply(SparseVec{{i, Scalar(1)}}, v))) {
        c.multiplicative = false;
        c.detail = "multiplication by " + algebra.label(i) + " leaves the ideal";
      }
  }
  c.dims.assign(std::max(algebra.basis().max_degree() + 1, 0), 0);
  for (const auto& v : basis)
    if (!v.empty()) ++c.dims[algebra.degree(v.begin()->first)];
  if (c.differential) {
    // Echelon rows are homogeneous only when the basis is degree-sorted,
    // which every algebra here is; split defensively anyway.
    std::vector<SparseVec> homogeneous;
    for (const auto& v : basis) {
      std::map<int, SparseVec> parts;
      for (const auto& [k, x] : v) parts[algebra.degree(k)][k] = x;
      for (auto& [deg, part] : parts) {
        (void)deg;
        homogeneous.push_back(std::move(part));
      }
    }
    c.betti = cohomology(subcomplex(algebra.complex(), homogeneous)).betti();
    c.acyclic = true;
    for (auto b : c.betti)
      if (b != 0) c.acyclic = false;
  }
  return c;
}

SparseVec QuotientAlgebra::project(const SparseVec& v) const {
  SparseVec rest = ideal.reduce(v);
  SparseVec out;
  for (std::size_t q = 0; q < representatives.size(); ++q) {
    auto it = rest.find(representatives[q]);
    if (it != rest.end()) out.emplace(q, it->second);
  }
  return out;
}

SparseVec QuotientAlgebra::lift(const SparseVec& q) const {
  SparseVec out;
  for (const auto& [k, x] : q) out.emplace(representatives.at(k), x);
  return out;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& algebra, const Subspace& ideal, const std::string& name) {
  QuotientAlgebra q;
  q.source = algebra;
  q.ideal = ideal;
  for (const auto& v : ideal.basis())
    for (const auto& [k, x] : v) {
      (void)x;
      if (algebra->degree(k) != algebra->degree(v.begin()->first))
        throw MathError("ideal basis is not homogeneous");
    }
  {
    std::vector<SparseVec> rows = ideal.basis();
    for (const auto& v : rows)
      if (!ideal.contains(algebra->apply_d(v))) throw MathError("subspace is not closed under d");
    for (const auto& v : rows)
      for (std::size_t i = 0; i < algebra->dim(); ++i)
        if (!ideal.contains(algebra->multiply(SparseVec{{i, Scalar(1)}}, v)))
          throw MathError("subspace is not an ideal");
  }
  std::set<std::size_t> pivots;
  for (const auto& v : ideal.basis()) pivots.insert(v.begin()->first);
  for (std::size_t k = 0; k < algebra->dim(); ++k)
    if (!pivots.count(k)) q.representatives.push_back(k);
  if (pivots.count(algebra->unit())) throw MathError("ideal contains the unit");

  AlgebraBuilder b(name);
  for (std::size_t k : q.representatives) b.add_basis(algebra->label(k), algebra->degree(k));
  const std::size_t m = q.representatives.size();
  for (std::size_t i = 0; i < m; ++i)
    if (q.representatives[i] == algebra->unit()) b.set_unit(i);
  b.set_simply_connected(algebra->declared_simply_connected());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j)
      b.set_product(i, j, q.project(algebra->multiply_basis(q.representatives[i], q.representatives[j])));
    b.set_differential(i, q.project(algebra->d(q.representatives[i])));
  }
  q.algebra = b.build();
  return q;
}

}  // namespace cdga
