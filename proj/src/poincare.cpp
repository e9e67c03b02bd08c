#include "cdga/poincare.hpp"

namespace cdga {

std::string to_string(PdFailure::Kind kind) {
  switch (kind) {
    case PdFailure::Kind::NotCdga: return "NotCdga";
    case PdFailure::Kind::BadOrientation: return "BadOrientation";
    case PdFailure::Kind::OrientationNotClosed: return "OrientationNotClosed";
    case PdFailure::Kind::Degenerate: return "DegenerateAt";
  }
  return "?";
}

namespace {
std::string summarize(const std::vector<PdFailure>& failures) {
  std::string s = "not a Poincaré duality CDGA:";
  for (const auto& f : failures) s += " " + to_string(f.kind) + "(" + std::to_string(f.degree) + ")";
  return s;
}
}  // namespace

PdError::PdError(std::vector<PdFailure> failures)
    : MathError(summarize(failures)), failures_(std::move(failures)) {}

Scalar PDAlgebra::eps(const SparseVec& v) const {
  Scalar total = 0;
  for (const auto& [i, c] : v) {
    auto it = epsilon_.find(i);
    if (it != epsilon_.end()) total += c * it->second;
  }
  return total;
}

PdCheck check_pd(const AlgebraPtr& algebra, int n, const SparseVec& epsilon) {
  PdCheck out;
  const DGAlgebra& a = *algebra;

  AxiomReport axioms = check_cdga(a);
  for (const auto& r : axioms.results)
    if (!r.passed) {
      SparseVec w;
      if (!r.witness.empty()) w[r.witness.front()] = 1;
      out.failures.push_back({PdFailure::Kind::NotCdga, 0, w, r.axiom + ": " + r.detail});
    }

  SparseVec eps;
  for (const auto& [i, c] : epsilon) {
    if (i >= a.dim() || a.degree(i) != n) {
      out.failures.push_back({PdFailure::Kind::BadOrientation, n, SparseVec{{i, Scalar(1)}},
                              "orientation is defined outside the top degree"});
      continue;
    }
    if (c != 0) eps[i] = c;
  }
  auto eval = [&](const SparseVec& v) {
    Scalar total = 0;
    for (const auto& [i, c] : v) {
      auto it = eps.find(i);
      if (it != eps.end()) total += c * it->second;
    }
    return total;
  };

  for (std::size_t i : a.basis().in_degree(n - 1))
    if (eval(a.d(i)) != 0) {
      out.failures.push_back({PdFailure::Kind::OrientationNotClosed, n - 1, SparseVec{{i, Scalar(1)}},
                              "ε(d" + a.label(i) + ") ≠ 0"});
    }

  // Pairing blocks P_k[i][j] = ε(a_i b_j) with a_i ∈ A^k, b_j ∈ A^{n-k}.
  std::vector<SparseVec> dual(a.dim());
  const int top = std::max(a.basis().max_degree(), n);
  for (int k = 0; k <= top; ++k) {
    auto left = a.basis().in_degree(k);
    if (left.empty()) continue;
    auto right = a.basis().in_degree(n - k);
    std::vector<Vector> p(left.size(), Vector(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) p[i][j] = eval(a.multiply_basis(left[i], right[j]));
    // Left kernel of P: kernel of its transpose.
    std::vector<Vector> pt(right.size(), Vector(left.size()));
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) pt[j][i] = p[i][j];
    auto null = kernel_basis(SparseMatrix::from_rows(pt, left.size()));
    if (!null.empty()) {
      SparseVec w;
      for (std::size_t i = 0; i < left.size(); ++i)
        if (null.front()[i] != 0) w[left[i]] = null.front()[i];
      out.failures.push_back({PdFailure::Kind::Degenerate, k, w,
                              "pairing A^" + std::to_string(k) + " ⊗ A^" + std::to_string(n - k) +
                                  " → ℚ is degenerate"});
      continue;
    }
    if (left.size() != right.size()) {
      // Injective but not square: the other side is degenerate and is reported there.
      continue;
    }
    auto inv = invert(p);
    if (!inv) continue;
    // a_i* = Σ_j X[i][j] b_j with X = (P^{-1})^T.
    for (std::size_t i = 0; i < left.size(); ++i) {
      SparseVec v;
      for (std::size_t j = 0; j < right.size(); ++j)
        if ((*inv)[j][i] != 0) v[right[j]] = (*inv)[j][i];
      dual[left[i]] = std::move(v);
    }
  }

  std::optional<std::size_t> omega_index;
  for (std::size_t i : a.basis().in_degree(n))
    if (eps.count(i)) {
      omega_index = i;
      break;
    }
  if (!omega_index && out.failures.empty())
    out.failures.push_back({PdFailure::Kind::BadOrientation, n, {}, "orientation vanishes on A^n"});
  if (!out.ok()) return out;

  auto pd = std::shared_ptr<PDAlgebra>(new PDAlgebra());
  pd->algebra_ = algebra;
  pd->n_ = n;
  pd->epsilon_ = eps;
  pd->omega_ = SparseVec{{*omega_index, 1 / eps.at(*omega_index)}};
  pd->dual_ = std::move(dual);
  auto square = std::make_shared<TensorAlgebra>(tensor(algebra, algebra, a.name() + "⊗" + a.name()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    add_scaled(pd->diagonal_, koszul(a.degree(i)), square->pure(SparseVec{{i, Scalar(1)}}, pd->dual_[i]));
  pd->square_ = std::move(square);
  out.pd = std::move(pd);
  return out;
}

PdPtr make_pd(const AlgebraPtr& algebra, int n, const SparseVec& epsilon) {
  PdCheck c = check_pd(algebra, n, epsilon);
  if (!c.ok()) throw PdError(c.failures);
  return c.pd;
}

SparseVec twist(const TensorAlgebra& t, const SparseVec& v) {
  if (t.left != t.right) throw StructureError("twist needs a tensor square");
  SparseVec out;
  for (const auto& [k, c] : v) {
    auto [i, j] = t.factors[k];
    int sign = koszul(static_cast<long long>(t.left->degree(i)) * t.left->degree(j));
    add_scaled(out, c * sign, SparseVec{{t.at(j, i), Scalar(1)}});
  }
  return out;
}

}  // namespace cdga
