// Differential graded modules over a CDGA, suspensions and module maps.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cdga/algebra.hpp"
#include "cdga/complex.hpp"

namespace cdga {

/// Left dg-module over a CDGA R, given by structure constants r_i·m_j.
struct DGModule {
  AlgebraPtr ring;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<SparseVec> differential;
  std::vector<std::vector<SparseVec>> action;  // [ring index][module index]

  std::size_t size() const { return degrees.size(); }
  SparseVec act(const SparseVec& r, const SparseVec& m) const;
  SparseVec apply_d(const SparseVec& m) const;
  GradedComplex complex() const;
};
using ModulePtr = std::shared_ptr<const DGModule>;

/// R acting on itself by multiplication.
DGModule regular_module(const AlgebraPtr& ring);

/// A regarded as a module over R through a CDGA map μ: R → A, given on
/// basis elements of R.
DGModule restricted_module(const AlgebraPtr& ring, const AlgebraPtr& algebra,
                           const std::vector<SparseVec>& mu);

/// s^k M: basis s^k m of degree |m| - k, with r·(s^k m) = (-1)^{k|r|} s^k(r·m)
/// and d(s^k m) = (-1)^k s^k(dm). Labels get the given prefix.
DGModule suspension(const DGModule& m, int k, const std::string& prefix = "");

struct ModuleCheck {
  bool ok = true;
  std::string failed;   // name of the first failing property
  std::string detail;
  std::size_t checked = 0;
};

/// Unit, associativity (r r')m = r(r' m) on all triples, degree
/// preservation, d² = 0 and δ(r·m) = (dr)·m + (-1)^{|r|} r·δ(m) on all pairs.
ModuleCheck check_module(const DGModule& m);

/// Degree-0 map between modules over the same ring; column j is f(m_j).
struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<SparseVec> columns;

  SparseVec apply(const SparseVec& v) const;
};

/// Commutes with the differentials and with the action of every basis
/// element of R on every basis element of the source.
ModuleCheck verify_module_map(const ModuleMap& f);

}  // namespace cdga
