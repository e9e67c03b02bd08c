// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra: ranks, inverses and Betti numbers are recomputed
// from raw structure constants with a separate elimination routine.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cdga/algebra.hpp"
#include "cdga/poincare.hpp"

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

/// Rank by fraction-keeping row reduction (column by column, first nonzero pivot).
inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Inverse by Gauss-Jordan on [M | I]; nullopt when singular.
inline std::optional<Mat> inverse(const Mat& m) {
  const std::size_t n = m.size();
  Mat a(n, std::vector<Q>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Q inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Q f = a[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  Mat out(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

/// Betti numbers of (A, d) from the raw differential: b_k = dim A^k − rank d_k − rank d_{k−1}.
inline std::vector<std::size_t> betti(const cdga::DGAlgebra& a) {
  int top = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) top = std::max(top, a.degree(i));
  std::vector<std::size_t> rank_d(top + 2, 0), dims(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    std::vector<std::size_t> src, dst;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.degree(i) == k) src.push_back(i);
      if (a.degree(i) == k + 1) dst.push_back(i);
    }
    dims[k] = src.size();
    if (src.empty() || dst.empty()) continue;
    Mat m(dst.size(), std::vector<Q>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [row, v] : a.d(src[c]))
        for (std::size_t r = 0; r < dst.size(); ++r)
          if (dst[r] == row) m[r][c] = v;
    rank_d[k] = rank(m);
  }
  std::vector<std::size_t> out(top + 1);
  for (int k = 0; k <= top; ++k) out[k] = dims[k] - rank_d[k] - (k > 0 ? rank_d[k - 1] : 0);
  return out;
}

inline std::vector<std::size_t> padded(std::vector<std::size_t> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

/// Dual basis solved from the pairing matrix P[i][j] = ε(a_i a_j): a_j* = Σ_k X[j][k] a_k with
/// X = (P^{-1})^T restricted to each complementary block (done globally here).
inline std::vector<cdga::SparseVec> dual_basis(const cdga::DGAlgebra& a, const cdga::SparseVec& eps) {
  const std::size_t n = a.dim();
  Mat p(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.multiply_basis(i, j)) {
        auto it = eps.find(k);
        if (it != eps.end()) p[i][j] += c * it->second;
      }
  auto inv = inverse(p);
  std::vector<cdga::SparseVec> out(n);
  if (!inv) return {};
  // ε(a_i · Σ_k X[j][k] a_k) = Σ_k P[i][k] X[j][k] = δ_ij  ⇒  X = (P^{-1})^T.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if ((*inv)[k][j] != 0) out[j][k] = (*inv)[k][j];
  return out;
}

/// Δ = Σ (−1)^{|a_i|} a_i⊗a_i* evaluated straight from the formula.
inline cdga::SparseVec diagonal(const cdga::TensorAlgebra& t, const std::vector<cdga::SparseVec>& duals) {
  const cdga::DGAlgebra& a = *t.left;
  cdga::SparseVec out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& [k, c] : duals[i]) {
      Q v = (a.degree(i) % 2 ? -1 : 1) * c;
      Q& slot = out[t.at(i, k)];
      slot += v;
      if (slot == 0) out.erase(t.at(i, k));
    }
  return out;
}

/// Random invertible block-diagonal change of basis (per degree), small integer entries.
inline std::vector<cdga::Vector> random_basis_change(const cdga::DGAlgebra& a, std::mt19937_64& rng,
                                                      bool keep_unit = true) {
  const std::size_t n = a.dim();
  std::uniform_int_distribution<int> dist(-2, 2);
  while (true) {
    std::vector<cdga::Vector> rows(n, cdga::Vector(n, cdga::Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a.degree(i) == a.degree(j)) rows[i][j] = dist(rng);
    if (keep_unit) {
      for (std::size_t j = 0; j < n; ++j) rows[a.unit()][j] = 0;
      for (std::size_t i = 0; i < n; ++i) rows[i][a.unit()] = 0;
      rows[a.unit()][a.unit()] = 1;
    }
    Mat m(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
    if (rank(m) == n) return rows;
  }
}

}  // namespace oracle
