#include "cdga/tensor.hpp"

namespace cdga {

namespace {
std::string wrap(const std::string& label) {
  return label.find("⊗") == std::string::npos ? label : "(" + label + ")";
}
}  // namespace

std::string tensor_label(const std::string& a, const std::string& b) {
  return wrap(a) + "⊗" + wrap(b);
}

SparseVec TensorAlgebra::pure(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_scaled(out, x * y, SparseVec{{at(i, j), Scalar(1)}});
  return out;
}

SparseVec TensorAlgebra::left_inclusion(const SparseVec& a) const {
  return pure(a, SparseVec{{right->unit(), Scalar(1)}});
}

SparseVec TensorAlgebra::right_inclusion(const SparseVec& b) const {
  return pure(SparseVec{{left->unit(), Scalar(1)}}, b);
}

TensorAlgebra tensor(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& name) {
  TensorAlgebra t;
  t.left = a;
  t.right = b;
  const std::size_t na = a->dim(), nb = b->dim();
  AlgebraBuilder builder(name.empty() ? a->name() + "⊗" + b->name() : name);
  std::vector<std::vector<std::size_t>> slot(na, std::vector<std::size_t>(nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      slot[i][j] = builder.add_basis(tensor_label(a->label(i), b->label(j)), a->degree(i) + b->degree(j));
  builder.set_unit(slot[a->unit()][b->unit()]);
  if (a->top_degree() && b->top_degree()) builder.set_top_degree(*a->top_degree() + *b->top_degree());
  builder.set_simply_connected(a->declared_simply_connected() && b->declared_simply_connected());

  auto pure_slots = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec out;
    for (const auto& [i, c] : x)
      for (const auto& [j, e] : y) add_scaled(out, c * e, SparseVec{{slot[i][j], Scalar(1)}});
    return out;
  };

  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t s = slot[i][j];
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const std::size_t s2 = slot[k][l];
          if (s2 < s) continue;
          int sign = koszul(static_cast<long long>(a->degree(k)) * b->degree(j));
          builder.set_product(s, s2, scaled(pure_slots(a->multiply_basis(i, k), b->multiply_basis(j, l)), sign));
        }
      SparseVec d = pure_slots(a->d(i), SparseVec{{j, Scalar(1)}});
      add_scaled(d, koszul(a->degree(i)), pure_slots(SparseVec{{i, Scalar(1)}}, b->d(j)));
      builder.set_differential(s, std::move(d));
    }

  t.algebra = builder.build();
  const auto& final_index = builder.index_of_slot();
  t.index.assign(na, std::vector<std::size_t>(nb));
  t.factors.resize(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      t.index[i][j] = final_index[slot[i][j]];
      t.factors[t.index[i][j]] = {i, j};
    }
  return t;
}

}  // namespace cdga
