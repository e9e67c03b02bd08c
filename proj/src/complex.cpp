#include "cdga/complex.hpp"

#include <algorithm>
#include <map>

namespace cdga {

int GradedComplex::max_degree() const {
  return degrees.empty() ? -1 : *std::max_element(degrees.begin(), degrees.end());
}

std::vector<std::size_t> GradedComplex::in_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == degree) out.push_back(i);
  return out;
}

std::vector<std::size_t> CohomologyReport::betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

namespace {

// Local coordinates of a global vector supported in one degree.
Vector localize(const SparseVec& v, const std::map<std::size_t, std::size_t>& pos, std::size_t dim) {
  Vector out(dim);
  for (const auto& [i, c] : v) out[pos.at(i)] = c;
  return out;
}

SparseVec globalize(const Vector& v, const std::vector<std::size_t>& idx) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.emplace(idx[k], v[k]);
  return out;
}

// Rows of an rref with their pivot columns (zero rows dropped).
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

Echelon echelon(std::vector<Vector> rows, std::size_t cols) {
  Echelon e;
  e.pivots = detail::reduce_rows(rows, cols);
  rows.resize(e.pivots.size());
  e.rows = std::move(rows);
  return e;
}

void reduce_against(Vector& v, const Echelon& e) {
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    Scalar c = v[e.pivots[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * e.rows[r][k];
  }
}

}  // namespace

CohomologyReport cohomology(const GradedComplex& complex) {
  const std::size_t n = complex.size();
  if (complex.differential.size() != n) throw StructureError("complex differential has the wrong size");
  for (int deg : complex.degrees)
    if (deg < 0) throw StructureError("negative degree in a cochain complex");

  auto apply = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) add_scaled(out, c, complex.differential[i]);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, c] : complex.differential[i]) {
      (void)c;
      if (j >= n || complex.degrees[j] != complex.degrees[i] + 1)
        throw StructureError("differential does not raise degree by one");
    }
    if (!apply(complex.differential[i]).empty()) throw NotAComplex(complex.degrees[i], i);
  }

  CohomologyReport report;
  const int top = complex.max_degree();
  std::vector<std::size_t> prev_idx;
  for (int k = 0; k <= top; ++k) {
    auto idx = complex.in_degree(k);
    auto next_idx = complex.in_degree(k + 1);
    std::map<std::size_t, std::size_t> pos, next_pos, prev_pos;
    for (std::size_t a = 0; a < idx.size(); ++a) pos[idx[a]] = a;
    for (std::size_t a = 0; a < next_idx.size(); ++a) next_pos[next_idx[a]] = a;

    std::vector<SparseMatrix::Entry> entries;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (const auto& [j, c] : complex.differential[idx[a]]) entries.push_back({next_pos.at(j), a, c});
    SparseMatrix dk(next_idx.size(), idx.size(), std::move(entries));
    auto cocycles = kernel_basis(dk);

    std::vector<Vector> images;
    for (std::size_t p : prev_idx) {
      if (complex.differential[p].empty()) continue;
      images.push_back(localize(complex.differential[p], pos, idx.size()));
    }
    Echelon boundaries = echelon(std::move(images), idx.size());

    std::vector<Vector> reduced;
    for (auto z : cocycles) {
      reduce_against(z, boundaries);
      reduced.push_back(std::move(z));
    }
    Echelon reps = echelon(std::move(reduced), idx.size());

    CohomologyDegree cd;
    cd.degree = k;
    cd.cocycle_dim = cocycles.size();
    cd.coboundary_dim = boundaries.rows.size();
    cd.betti = cd.cocycle_dim - cd.coboundary_dim;
    if (reps.rows.size() != cd.betti) throw MathError("inconsistent cohomology computation");
    for (const auto& r : reps.rows) cd.representatives.push_back(globalize(r, idx));
    for (const auto& r : boundaries.rows) cd.coboundary_basis.push_back(globalize(r, idx));
    report.degrees.push_back(std::move(cd));
    prev_idx = std::move(idx);
  }
  return report;
}

GradedComplex subcomplex(const GradedComplex& complex, const std::vector<SparseVec>& vectors) {
  std::map<int, std::vector<SparseVec>> by_degree;
  for (const auto& v : vectors) {
    if (v.empty()) continue;
    int deg = complex.degrees.at(v.begin()->first);
    for (const auto& [i, c] : v) {
      (void)c;
      if (complex.degrees.at(i) != deg) throw MathError("subcomplex generator is not homogeneous");
    }
    by_degree[deg].push_back(v);
  }

  struct Block {
    std::vector<std::size_t> idx;
    std::map<std::size_t, std::size_t> pos;
    Echelon basis;
    std::size_t offset = 0;
  };
  std::map<int, Block> blocks;
  GradedComplex out;
  for (auto& [deg, vs] : by_degree) {
    Block b;
    b.idx = complex.in_degree(deg);
    for (std::size_t a = 0; a < b.idx.size(); ++a) b.pos[b.idx[a]] = a;
    std::vector<Vector> rows;
    for (const auto& v : vs) rows.push_back(localize(v, b.pos, b.idx.size()));
    b.basis = echelon(std::move(rows), b.idx.size());
    b.offset = out.size();
    for (std::size_t r = 0; r < b.basis.rows.size(); ++r) {
      out.degrees.push_back(deg);
      out.labels.push_back("v" + std::to_string(out.size()));
    }
    blocks.emplace(deg, std::move(b));
  }

  out.differential.resize(out.size());
  for (const auto& [deg, b] : blocks) {
    for (std::size_t r = 0; r < b.basis.rows.size(); ++r) {
      SparseVec dv;
      for (std::size_t a = 0; a < b.idx.size(); ++a)
        if (b.basis.rows[r][a] != 0) add_scaled(dv, b.basis.rows[r][a], complex.differential[b.idx[a]]);
      if (dv.empty()) continue;
      auto it = blocks.find(deg + 1);
      if (it == blocks.end()) throw MathError("subspace is not closed under the differential");
      const Block& nb = it->second;
      Vector w = localize(dv, nb.pos, nb.idx.size());
      Vector rest = w;
      SparseVec image;
      for (std::size_t s = 0; s < nb.basis.rows.size(); ++s) {
        Scalar c = w[nb.basis.pivots[s]];
        if (c == 0) continue;
        image.emplace(nb.offset + s, c);
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= c * nb.basis.rows[s][k];
      }
      if (!is_zero(rest)) throw MathError("subspace is not closed under the differential");
      out.differential[b.offset + r] = std::move(image);
    }
  }
  return out;
}

bool same_betti(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t x = k < a.size() ? a[k] : 0, y = k < b.size() ? b[k] : 0;
    if (x != y) return false;
  }
  return true;
}

}  // namespace cdga
