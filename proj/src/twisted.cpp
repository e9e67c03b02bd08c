#include "cdga/twisted.hpp"

#include <set>

#include "cdga/errors.hpp"

namespace cdga {

namespace {

std::vector<SparseVec> cocycles(const DGAlgebra& a, int degree) {
  auto idx = a.basis().in_degree(degree);
  auto next = a.basis().in_degree(degree + 1);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < next.size(); ++k) pos[next[k]] = k;
  std::vector<SparseMatrix::Entry> entries;
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (const auto& [t, x] : a.d(idx[c])) entries.push_back({pos.at(t), c, x});
  std::vector<SparseVec> out;
  for (const auto& v : kernel_basis(SparseMatrix(next.size(), idx.size(), std::move(entries)))) {
    SparseVec z;
    for (std::size_t c = 0; c < idx.size(); ++c)
      if (v[c] != 0) z[idx[c]] = v[c];
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<SparseVec> coboundaries(const DGAlgebra& a, int degree) {
  std::vector<SparseVec> out;
  for (std::size_t i : a.basis().in_degree(degree - 1))
    if (!a.d(i).empty()) out.push_back(a.d(i));
  return out;
}

void require_homogeneous(const DGAlgebra& a, const SparseVec& v, int degree, const std::string& what) {
  for (const auto& [i, c] : v) {
    (void)c;
    if (i >= a.dim() || a.degree(i) != degree)
      throw PreconditionError("WrongDegree", what + " must be homogeneous of degree " + std::to_string(degree));
  }
}

void require_cocycle(const DGAlgebra& a, const SparseVec& v, const std::string& what) {
  if (!a.apply_d(v).empty()) throw PreconditionError("NotACocycle", what + " is not a cocycle");
}

void require_odd(const PDAlgebra& pd) {
  if (pd.n() % 2 == 0)
    throw PreconditionError("EvenDimension", "this construction needs odd formal dimension, got n = " +
                                                 std::to_string(pd.n()));
}

void require_simply_connected(const DGAlgebra& a) {
  auto zero = a.basis().in_degree(0);
  if (zero.size() != 1 || !a.basis().in_degree(1).empty())
    throw PreconditionError("NotSimplyConnected", "the algebra must satisfy A⁰ = ℚ and A¹ = 0");
}

}  // namespace

TruncatedCone truncate_cone(const PDAlgebra& pd) {
  TruncatedCone t{cone_model(pd), {}, {}};
  const DGAlgebra& c = *t.cone.algebra;
  Subspace high;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (c.degree(i) >= 2 * pd.n() - 1) high.insert(SparseVec{{i, Scalar(1)}});
  t.truncated_part = check_ideal(c, high);
  if (!t.truncated_part.ok()) throw MathError("C(Δ!)^{≥2n-1} is not a differential ideal");
  t.quotient = quotient_algebra(t.cone.algebra, high, "C of " + pd.algebra()->name());
  return t;
}

TwistedModel build_cxi(const PDAlgebra& pd, const SparseVec& xi) {
  const TensorAlgebra& sq = pd.square();
  if (pd.n() % 2 == 0 && !xi.empty())
    throw PreconditionError("EvenDimensionNonzeroXi",
                            "n is even, so S1 has odd degree and S1·S1 is forced to vanish; ξ must be 0");
  require_homogeneous(*sq.algebra, xi, 2 * pd.n() - 2, "ξ");
  require_cocycle(*sq.algebra, xi, "ξ");

  TwistedModel m;
  m.truncation = truncate_cone(pd);
  m.xi = xi;
  const auto& q = m.truncation.quotient;
  const auto& cone = m.truncation.cone;
  SparseVec s1 = q.project(cone.suspend(SparseVec{{pd.algebra()->unit(), Scalar(1)}}));
  m.s1 = s1.begin()->first;
  AlgebraBuilder b = AlgebraBuilder::from(*q.algebra);
  b.override_product(m.s1, m.s1, q.project(cone.include(xi)));
  b.set_name("C(ξ) of " + pd.algebra()->name());
  m.algebra = b.build();
  for (std::size_t i = 0; i < sq.algebra->dim(); ++i)
    m.inclusion.push_back(q.project(cone.include(SparseVec{{i, Scalar(1)}})));
  m.axioms = check_cdga(*m.algebra);
  m.inclusion_check = check_cdga_map(*sq.algebra, *m.algebra, m.inclusion);
  return m;
}

DiagonalQuotient quotient_by_diagonal(const PDAlgebra& pd) {
  const TensorAlgebra& sq = pd.square();
  Subspace ideal = ideal_generated_by(*sq.algebra, {pd.diagonal()});
  DiagonalQuotient out;
  out.ideal = check_ideal(*sq.algebra, ideal);
  if (!out.ideal.ok()) throw MathError("(Δ) is not a differential ideal: " + out.ideal.detail);
  out.quotient = quotient_algebra(sq.algebra, ideal, "A⊗A/(Δ) of " + pd.algebra()->name());
  return out;
}

Vector PhiMap::target_coordinates(const SparseVec& z) const {
  Subspace t(target_basis);
  auto c = t.coordinates(relations.reduce(z));
  if (!c) throw MathError("element is not a cocycle of degree 2n-2");
  return *c;
}

PhiMap phi(const PDAlgebra& pd) {
  require_odd(pd);
  const DGAlgebra& a = *pd.algebra();
  require_simply_connected(a);
  const TensorAlgebra& sq = pd.square();
  const int n = pd.n();

  PhiMap m;
  CohomologyReport h = cohomology(a.complex());
  if (n - 2 >= 0 && static_cast<std::size_t>(n - 2) < h.degrees.size())
    m.source_basis = h.degrees[n - 2].representatives;

  for (const auto& v : coboundaries(*sq.algebra, 2 * n - 2)) m.relations.insert(v);
  for (const auto& z : cocycles(*sq.algebra, n - 2)) m.relations.insert(sq.algebra->multiply(z, pd.diagonal()));
  Subspace target;
  for (const auto& z : cocycles(*sq.algebra, 2 * n - 2)) target.insert(m.relations.reduce(z));
  m.target_basis = target.basis();

  const std::size_t p = m.source_basis.size(), q = m.target_basis.size();
  m.matrix.assign(q, Vector(p));
  for (std::size_t s = 0; s < p; ++s) {
    m.images.push_back(sq.pure(m.source_basis[s], pd.omega()));
    Vector col = m.target_coordinates(m.images.back());
    for (std::size_t t = 0; t < q; ++t) m.matrix[t][s] = col[t];
  }
  std::vector<Vector> columns(p, Vector(q));
  for (std::size_t s = 0; s < p; ++s)
    for (std::size_t t = 0; t < q; ++t) columns[s][t] = m.matrix[t][s];
  auto kernel = kernel_basis(SparseMatrix::from_rows(m.matrix, p));
  if (!kernel.empty()) throw MathError("NotInjective: Φ kills a nonzero class of H^{n-2}(A)");
  if (p != q) throw MathError("NotSurjective: the image of Φ has dimension " + std::to_string(p) + " < " +
                              std::to_string(q));
  m.inverse = invert(m.matrix);
  if (!m.inverse) throw MathError("Φ is not invertible");
  return m;
}

TwistedModel c_of_x(const PDAlgebra& pd, const SparseVec& x) {
  const DGAlgebra& a = *pd.algebra();
  require_homogeneous(a, x, pd.n() - 2, "x");
  require_cocycle(a, x, "x");
  return build_cxi(pd, pd.square().pure(x, pd.omega()));
}

EquivalenceIdeal equivalence_ideal(const PDAlgebra& pd) {
  require_odd(pd);
  const DGAlgebra& a = *pd.algebra();
  require_simply_connected(a);
  const TensorAlgebra& sq = pd.square();
  const DGAlgebra& aa = *sq.algebra;
  const int n = pd.n();

  EquivalenceIdeal e{cone_model(pd), {}, {}, {}};
  Subspace z(cocycles(aa, 2 * n - 3));
  std::set<std::size_t> pivots;
  for (const auto& v : z.basis()) pivots.insert(v.begin()->first);
  for (std::size_t i : aa.basis().in_degree(2 * n - 3))
    if (!pivots.count(i)) e.complement.push_back(SparseVec{{i, Scalar(1)}});

  for (const auto& s : e.complement) {
    e.span.insert(e.cone.include(s));
    e.span.insert(e.cone.include(aa.apply_d(s)));
  }
  for (std::size_t i = 0; i < aa.dim(); ++i)
    if (aa.degree(i) > 0) e.span.insert(e.cone.include(aa.multiply(SparseVec{{i, Scalar(1)}}, pd.diagonal())));
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.degree(i) > 0) e.span.insert(e.cone.suspend(SparseVec{{i, Scalar(1)}}));
  e.check = check_ideal(*e.cone.algebra, e.span);
  return e;
}

XiDecision decide_xi_equivalence(const PDAlgebra& pd, const SparseVec& xi, const SparseVec& xi2) {
  require_odd(pd);
  const TensorAlgebra& sq = pd.square();
  const DGAlgebra& aa = *sq.algebra;
  const int n = pd.n();
  require_homogeneous(aa, xi, 2 * n - 2, "ξ");
  require_homogeneous(aa, xi2, 2 * n - 2, "ξ'");
  require_cocycle(aa, xi, "ξ");
  require_cocycle(aa, xi2, "ξ'");

  SparseVec diff = xi;
  add_scaled(diff, -1, xi2);

  auto r_idx = aa.basis().in_degree(n - 2);
  auto b_idx = aa.basis().in_degree(2 * n - 3);
  std::vector<Vector> columns;
  for (std::size_t i : r_idx) columns.push_back(to_dense(aa.multiply(SparseVec{{i, Scalar(1)}}, pd.diagonal()), aa.dim()));
  for (std::size_t i : b_idx) columns.push_back(to_dense(aa.d(i), aa.dim()));

  XiDecision out;
  std::optional<Vector> x;
  if (columns.empty())
    x = diff.empty() ? std::optional<Vector>(Vector{}) : std::nullopt;
  else
    x = solve(SparseMatrix::from_columns(columns, aa.dim()), to_dense(diff, aa.dim()));
  if (!x) {
    out.note = "[ξ] ≠ [ξ'] in H^{2n-2}(A⊗A)/([Δ]); not decided here";
    return out;
  }
  for (std::size_t k = 0; k < r_idx.size(); ++k)
    if ((*x)[k] != 0) out.r[r_idx[k]] = (*x)[k];
  for (std::size_t k = 0; k < b_idx.size(); ++k)
    if ((*x)[r_idx.size() + k] != 0) out.b[b_idx[k]] = (*x)[r_idx.size() + k];
  SparseVec check = aa.multiply(out.r, pd.diagonal());
  add_scaled(check, 1, aa.apply_d(out.b));
  if (check != diff) throw MathError("decomposition of ξ - ξ' does not verify");

  EquivalenceIdeal ideal = equivalence_ideal(pd);
  out.congruent_mod_ideal = ideal.span.contains(ideal.cone.include(diff));

  TwistedModel c1 = build_cxi(pd, xi), c2 = build_cxi(pd, xi2);
  const auto& q = c1.truncation.quotient;
  Subspace image;
  for (const auto& v : ideal.span.basis()) image.insert(q.project(v));
  QuotientAlgebra q1 = quotient_algebra(c1.algebra, image, "C(ξ)/I");
  QuotientAlgebra q2 = quotient_algebra(c2.algebra, image, "C(ξ')/I");
  std::map<std::string, std::string> same;
  for (const auto& l : q1.algebra->basis().labels()) same[l] = l;
  out.quotients_identical = isomorphic_by_labels(*q1.algebra, *q2.algebra, same);
  out.equivalent = out.congruent_mod_ideal && out.quotients_identical;
  out.note = out.equivalent ? "C(ξ) ≃ C(ξ') under A⊗A" : "witness found but the quotient comparison failed";
  return out;
}

std::vector<SparseVec> xi_cocycle_basis(const PDAlgebra& pd) {
  return cocycles(*pd.square().algebra, 2 * pd.n() - 2);
}

}  // namespace cdga
