#include "cdga/cone.hpp"

#include "cdga/errors.hpp"

namespace cdga {

SparseVec MappingCone::include(const SparseVec& r) const {
  SparseVec out;
  for (const auto& [i, c] : r) out.emplace(base_index.at(i), c);
  return out;
}

SparseVec MappingCone::suspend(const SparseVec& b) const {
  SparseVec out;
  for (const auto& [j, c] : b) out.emplace(suspended_index.at(j), c);
  return out;
}

namespace {
std::string wrap(const std::string& label) {
  return label.find("⊗") == std::string::npos ? label : "(" + label + ")";
}
}  // namespace

MappingCone mapping_cone(const ModuleMap& f, const std::string& prefix, const std::string& name) {
  ModuleCheck check = verify_module_map(f);
  if (!check.ok) throw MathError("NotAModuleMap: " + check.detail);
  const AlgebraPtr& ring = f.source->ring;
  const DGModule& target = *f.target;
  if (target.size() != ring->dim()) throw MathError("mapping cone needs a map into the regular module");
  for (std::size_t i = 0; i < ring->dim(); ++i)
    for (std::size_t j = 0; j < ring->dim(); ++j)
      if (target.action[i][j] != ring->multiply_basis(i, j))
        throw MathError("mapping cone needs a map into the regular module");

  const DGModule& b = *f.source;
  const std::size_t nr = ring->dim(), nb = b.size();
  MappingCone cone;
  cone.map = f;
  cone.ring = ring;

  AlgebraBuilder builder(name.empty() ? "C(" + ring->name() + ")" : name);
  std::vector<std::size_t> rs(nr), ss(nb);
  for (std::size_t i = 0; i < nr; ++i) rs[i] = builder.add_basis(ring->label(i), ring->degree(i));
  for (std::size_t j = 0; j < nb; ++j) ss[j] = builder.add_basis(prefix + wrap(b.labels[j]), b.degrees[j] - 1);
  builder.set_unit(rs[ring->unit()]);
  if (ring->top_degree()) {
    int top = *ring->top_degree();
    for (int d : b.degrees) top = std::max(top, d - 1);
    builder.set_top_degree(top);
  }

  auto to_r = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) out.emplace(rs[i], c);
    return out;
  };
  auto to_s = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [j, c] : v) out.emplace(ss[j], c);
    return out;
  };

  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t k = i; k < nr; ++k) builder.set_product(rs[i], rs[k], to_r(ring->multiply_basis(i, k)));
    for (std::size_t j = 0; j < nb; ++j) {
      const int r_deg = ring->degree(i), b_deg = b.degrees[j], sb_deg = b_deg - 1;
      SparseVec left = scaled(to_s(b.action[i][j]), koszul(r_deg));
      SparseVec right = scaled(to_s(b.action[i][j]), koszul(static_cast<long long>(b_deg) * r_deg));
      SparseVec derived = scaled(left, koszul(static_cast<long long>(sb_deg) * r_deg));
      ++cone.sign_pairs_checked;
      if (right != derived)
        throw MathError("semi-trivial product: the two forms of " + prefix + b.labels[j] + "·" + ring->label(i) +
                        " disagree");
      builder.set_product(rs[i], ss[j], left);
      builder.set_product(ss[j], rs[i], right);
    }
  }
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t l = j; l < nb; ++l) builder.set_product(ss[j], ss[l], {});

  for (std::size_t i = 0; i < nr; ++i) builder.set_differential(rs[i], to_r(ring->d(i)));
  for (std::size_t j = 0; j < nb; ++j) {
    SparseVec v = to_r(f.columns[j]);
    add_scaled(v, -1, to_s(b.differential[j]));
    builder.set_differential(ss[j], std::move(v));
  }

  cone.algebra = builder.build();
  const auto& idx = builder.index_of_slot();
  for (std::size_t i = 0; i < nr; ++i) cone.base_index.push_back(idx[rs[i]]);
  for (std::size_t j = 0; j < nb; ++j) cone.suspended_index.push_back(idx[ss[j]]);
  return cone;
}

namespace {
std::vector<SparseVec> multiplication_map(const PDAlgebra& pd) {
  const TensorAlgebra& t = pd.square();
  std::vector<SparseVec> mu(t.algebra->dim());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    auto [i, j] = t.factors[k];
    mu[k] = pd.algebra()->multiply_basis(i, j);
  }
  return mu;
}
}  // namespace

DGModule desuspended_module(const PDAlgebra& pd) {
  DGModule a = restricted_module(pd.square().algebra, pd.algebra(), multiplication_map(pd));
  return suspension(a, -pd.n());
}

DGModule desuspended_module_explicit(const PDAlgebra& pd) {
  const TensorAlgebra& t = pd.square();
  const DGAlgebra& a = *pd.algebra();
  const int n = pd.n();
  DGModule m;
  m.ring = t.algebra;
  m.labels = a.basis().labels();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    m.degrees.push_back(a.degree(j) + n);
    m.differential.push_back(scaled(a.d(j), koszul(n)));
  }
  m.action.assign(t.algebra->dim(), std::vector<SparseVec>(a.dim()));
  for (std::size_t k = 0; k < t.algebra->dim(); ++k) {
    auto [x, y] = t.factors[k];
    for (std::size_t j = 0; j < a.dim(); ++j) {
      long long e = static_cast<long long>(n) * a.degree(x) + static_cast<long long>(n) * a.degree(y) +
                    static_cast<long long>(a.degree(j)) * a.degree(y);
      SparseVec xay = a.multiply(a.multiply_basis(x, j), SparseVec{{y, Scalar(1)}});
      m.action[k][j] = scaled(xay, koszul(e));
    }
  }
  return m;
}

ModuleMap shriek_map(const PDAlgebra& pd) {
  const TensorAlgebra& t = pd.square();
  ModuleMap f;
  f.source = std::make_shared<DGModule>(desuspended_module(pd));
  f.target = std::make_shared<DGModule>(regular_module(t.algebra));
  for (std::size_t j = 0; j < pd.algebra()->dim(); ++j)
    f.columns.push_back(t.algebra->multiply(pd.diagonal(), t.right_inclusion(SparseVec{{j, Scalar(1)}})));
  ModuleCheck c = verify_module_map(f);
  if (!c.ok) throw MathError("ModuleMapViolation: " + c.detail);
  return f;
}

MappingCone cone_model(const PDAlgebra& pd) {
  MappingCone cone = mapping_cone(shriek_map(pd), "S", "C(Δ!) of " + pd.algebra()->name());
  AxiomReport report = check_cdga(*cone.algebra);
  if (!report.passed()) {
    for (const auto& r : report.results)
      if (!r.passed) throw MathError("C(Δ!) fails " + r.axiom + ": " + r.detail);
  }
  return cone;
}

EvenModel even_model(const PDAlgebra& pd) {
  if (pd.n() % 2 != 0)
    throw PreconditionError("OddDimension", "the even-dimensional model needs even formal dimension, got n = " +
                                                std::to_string(pd.n()));
  EvenModel m{cone_model(pd), {}, {}, {}, {}};
  const TensorAlgebra& t = pd.square();
  SparseVec omega_omega = m.cone.include(t.pure(pd.omega(), pd.omega()));
  SparseVec s_omega = m.cone.suspend(pd.omega());
  Subspace ideal = ideal_generated_by(*m.cone.algebra, {omega_omega, s_omega});
  m.ideal = check_ideal(*m.cone.algebra, ideal);
  if (!m.ideal.ok()) throw MathError("(ω⊗ω, Sω) is not a differential ideal: " + m.ideal.detail);
  m.quotient = quotient_algebra(m.cone.algebra, ideal, "C(Δ!)/I of " + pd.algebra()->name());
  for (std::size_t i = 0; i < t.algebra->dim(); ++i)
    m.inclusion.push_back(m.quotient.project(m.cone.include(SparseVec{{i, Scalar(1)}})));
  m.inclusion_check = check_cdga_map(*t.algebra, *m.quotient.algebra, m.inclusion);
  return m;
}

}  // namespace cdga
