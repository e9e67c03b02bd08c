#include "cdga/products.hpp"

#include <set>

#include "cdga/twisted.hpp"

namespace cdga {

ProductPd product_pd(const PDAlgebra& c, const PDAlgebra& b) {
  const DGAlgebra& ca = *c.algebra();
  const DGAlgebra& ba = *b.algebra();
  std::string name = ca.dim() == 1 ? ba.name() : ba.dim() == 1 ? ca.name() : ca.name() + "x" + ba.name();
  TensorAlgebra t = tensor(c.algebra(), b.algebra(), name);

  std::vector<std::string> simple;
  for (const auto& [i, j] : t.factors) {
    if (j == ba.unit())
      simple.push_back(ca.label(i));
    else if (i == ca.unit())
      simple.push_back(ba.label(j));
    else
      simple.push_back(ca.label(i) + ba.label(j));
  }
  std::set<std::string> distinct(simple.begin(), simple.end());
  AlgebraPtr algebra = distinct.size() == simple.size() ? relabel(*t.algebra, simple, name) : t.algebra;

  SparseVec eps;
  for (std::size_t k = 0; k < t.factors.size(); ++k) {
    auto [i, j] = t.factors[k];
    Scalar v = c.eps(SparseVec{{i, Scalar(1)}}) * b.eps(SparseVec{{j, Scalar(1)}});
    if (v != 0) eps[k] = v;
  }
  ProductPd out{t, make_pd(algebra, c.n() + b.n(), eps)};
  return out;
}

CorrespondenceReport diagonal_correspondence(const PDAlgebra& c, const PDAlgebra& b) {
  CorrespondenceReport r{product_pd(c, b), c.square(), b.square(), {}, {}, {}, false, {}, {}, 0, false, {}, {}, false};
  r.source = tensor(r.cc.algebra, r.bb.algebra, "(C⊗C)⊗(B⊗B)");
  const TensorAlgebra& t = r.product.tensor;
  const TensorAlgebra& aa = r.product.pd->square();
  const DGAlgebra& ca = *c.algebra();
  const DGAlgebra& ba = *b.algebra();

  std::set<std::size_t> hit;
  for (std::size_t k = 0; k < r.source.factors.size(); ++k) {
    auto [p, q] = r.source.factors[k];
    auto [c1, c2] = r.cc.factors[p];
    auto [b1, b2] = r.bb.factors[q];
    std::size_t target = aa.at(t.at(c1, b1), t.at(c2, b2));
    hit.insert(target);
    r.sigma.push_back(SparseVec{{target, Scalar(koszul(static_cast<long long>(ca.degree(c2)) * ba.degree(b1)))}});
  }
  r.sigma_bijective = hit.size() == aa.algebra->dim() && r.sigma.size() == aa.algebra->dim();
  r.sigma_check = check_cdga_map(*r.source.algebra, *aa.algebra, r.sigma);

  auto apply_sigma = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, x] : v) add_scaled(out, x, r.sigma[k]);
    return out;
  };
  SparseVec source_diagonal = r.source.pure(c.diagonal(), b.diagonal());
  r.sigma_of_diagonals = apply_sigma(source_diagonal);
  r.product_diagonal = r.product.pd->diagonal();
  if (r.sigma_of_diagonals == r.product_diagonal)
    r.sign = 1;
  else if (r.sigma_of_diagonals == scaled(r.product_diagonal, -1))
    r.sign = -1;

  Subspace source_ideal = ideal_generated_by(*r.source.algebra, {source_diagonal});
  DiagonalQuotient dq = quotient_by_diagonal(*r.product.pd);
  Subspace image;
  for (const auto& v : source_ideal.basis()) image.insert(apply_sigma(v));
  r.ideals_correspond = image == dq.quotient.ideal;

  QuotientAlgebra sq = quotient_algebra(r.source.algebra, source_ideal, "(C⊗C⊗B⊗B)/(Δ_C⊗Δ_B)");
  r.source_quotient_betti = cohomology(sq.algebra->complex()).betti();
  r.product_quotient_betti = cohomology(dq.quotient.algebra->complex()).betti();
  r.betti_agree = same_betti(r.source_quotient_betti, r.product_quotient_betti);
  return r;
}

}  // namespace cdga
