#include "cdga/module.hpp"

#include "cdga/errors.hpp"

namespace cdga {

SparseVec DGModule::act(const SparseVec& r, const SparseVec& m) const {
  SparseVec out;
  for (const auto& [i, a] : r)
    for (const auto& [j, b] : m) add_scaled(out, a * b, action[i][j]);
  return out;
}

SparseVec DGModule::apply_d(const SparseVec& m) const {
  SparseVec out;
  for (const auto& [j, b] : m) add_scaled(out, b, differential[j]);
  return out;
}

GradedComplex DGModule::complex() const { return GradedComplex{degrees, differential, labels}; }

DGModule regular_module(const AlgebraPtr& ring) {
  DGModule m;
  m.ring = ring;
  m.labels = ring->basis().labels();
  m.degrees = ring->basis().degrees();
  for (std::size_t i = 0; i < ring->dim(); ++i) m.differential.push_back(ring->d(i));
  m.action.assign(ring->dim(), std::vector<SparseVec>(ring->dim()));
  for (std::size_t i = 0; i < ring->dim(); ++i)
    for (std::size_t j = 0; j < ring->dim(); ++j) m.action[i][j] = ring->multiply_basis(i, j);
  return m;
}

DGModule restricted_module(const AlgebraPtr& ring, const AlgebraPtr& algebra,
                           const std::vector<SparseVec>& mu) {
  if (mu.size() != ring->dim()) throw StructureError("restriction map has the wrong size");
  DGModule m;
  m.ring = ring;
  m.labels = algebra->basis().labels();
  m.degrees = algebra->basis().degrees();
  for (std::size_t i = 0; i < algebra->dim(); ++i) m.differential.push_back(algebra->d(i));
  m.action.assign(ring->dim(), std::vector<SparseVec>(algebra->dim()));
  for (std::size_t i = 0; i < ring->dim(); ++i)
    for (std::size_t j = 0; j < algebra->dim(); ++j)
      m.action[i][j] = algebra->multiply(mu[i], SparseVec{{j, Scalar(1)}});
  return m;
}

DGModule suspension(const DGModule& m, int k, const std::string& prefix) {
  DGModule s;
  s.ring = m.ring;
  for (std::size_t j = 0; j < m.size(); ++j) {
    s.labels.push_back(prefix + m.labels[j]);
    s.degrees.push_back(m.degrees[j] - k);
    s.differential.push_back(scaled(m.differential[j], koszul(k)));
  }
  s.action.assign(m.ring->dim(), std::vector<SparseVec>(m.size()));
  for (std::size_t i = 0; i < m.ring->dim(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      s.action[i][j] = scaled(m.action[i][j], koszul(static_cast<long long>(k) * m.ring->degree(i)));
  return s;
}

namespace {
void fail(ModuleCheck& c, const std::string& what, const std::string& detail) {
  if (!c.ok) return;
  c.ok = false;
  c.failed = what;
  c.detail = detail;
}
}  // namespace

ModuleCheck check_module(const DGModule& m) {
  ModuleCheck c;
  const DGAlgebra& r = *m.ring;
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    ++c.checked;
    if (m.action[r.unit()][j] != SparseVec{{j, Scalar(1)}}) fail(c, "unit", "1·" + m.labels[j] + " ≠ " + m.labels[j]);
    if (!m.apply_d(m.differential[j]).empty()) fail(c, "d_squared", "d² ≠ 0 on " + m.labels[j]);
    for (const auto& [t, v] : m.differential[j]) {
      (void)v;
      if (m.degrees[t] != m.degrees[j] + 1) fail(c, "degree", "differential of " + m.labels[j] + " has wrong degree");
    }
  }
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++c.checked;
      for (const auto& [t, v] : m.action[i][j]) {
        (void)v;
        if (m.degrees[t] != r.degree(i) + m.degrees[j])
          fail(c, "degree", r.label(i) + "·" + m.labels[j] + " has wrong degree");
      }
      SparseVec lhs = m.apply_d(m.action[i][j]);
      SparseVec rhs = m.act(r.d(i), SparseVec{{j, Scalar(1)}});
      add_scaled(rhs, koszul(r.degree(i)), m.act(SparseVec{{i, Scalar(1)}}, m.differential[j]));
      if (lhs != rhs) fail(c, "leibniz", "δ(r·m) rule fails for (" + r.label(i) + ", " + m.labels[j] + ")");
      for (std::size_t k = 0; k < r.dim(); ++k) {
        ++c.checked;
        SparseVec left = m.act(r.multiply_basis(k, i), SparseVec{{j, Scalar(1)}});
        SparseVec right = m.act(SparseVec{{k, Scalar(1)}}, m.action[i][j]);
        if (left != right)
          fail(c, "associativity",
               "(rr')m ≠ r(r'm) for (" + r.label(k) + ", " + r.label(i) + ", " + m.labels[j] + ")");
      }
    }
  return c;
}

SparseVec ModuleMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v) add_scaled(out, c, columns.at(j));
  return out;
}

ModuleCheck verify_module_map(const ModuleMap& f) {
  ModuleCheck c;
  if (f.source->ring != f.target->ring) {
    fail(c, "ring", "source and target are modules over different rings");
    return c;
  }
  if (f.columns.size() != f.source->size()) {
    fail(c, "shape", "map has the wrong number of columns");
    return c;
  }
  const DGAlgebra& r = *f.source->ring;
  for (std::size_t j = 0; j < f.source->size(); ++j) {
    ++c.checked;
    for (const auto& [t, v] : f.columns[j]) {
      (void)v;
      if (t >= f.target->size() || f.target->degrees[t] != f.source->degrees[j])
        fail(c, "degree", "image of " + f.source->labels[j] + " has the wrong degree");
    }
    if (f.apply(f.source->differential[j]) != f.target->apply_d(f.columns[j]))
      fail(c, "differential", "f∘δ ≠ δ∘f on " + f.source->labels[j]);
    for (std::size_t i = 0; i < r.dim(); ++i) {
      ++c.checked;
      if (f.apply(f.source->action[i][j]) != f.target->act(SparseVec{{i, Scalar(1)}}, f.columns[j]))
        fail(c, "linearity", "f(r·m) ≠ r·f(m) for (" + r.label(i) + ", " + f.source->labels[j] + ")");
    }
  }
  return c;
}

}  // namespace cdga
