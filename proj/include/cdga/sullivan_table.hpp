// Degree-truncated relative Sullivan generator tables over A⊗A together
// with an evaluation map into a twisted model C(ξ).
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cdga/free_algebra.hpp"
#include "cdga/twisted.hpp"

namespace cdga {

struct TableParameter {
  std::string name;
  Scalar value;
};

struct GeneratorTable {
  std::string name;
  PdPtr factor;  // A; the base of the extension is A⊗A
  std::shared_ptr<const FreeExtension> free;
  std::vector<FreeExtension::Elem> differential;  // D(g) for each generator, coefficients in the parameters
  std::vector<TableParameter> parameters;
  std::map<std::size_t, Poly> xi;                 // target twist, on A⊗A basis indices
  std::vector<std::map<std::string, Scalar>> evaluation;  // m(g) as label -> coefficient in C(ξ)
  int degree_cap = 0;

  std::map<std::string, Scalar> parameter_values() const;
  /// ξ with the parameter values substituted.
  SparseVec xi_value() const;
};

/// The S²×S³ table with parameters q, r and S1·S1 = q(y⊗xy) + r(xy⊗y).
GeneratorTable s2xs3_table(const Scalar& q, const Scalar& r);

struct GeneratorCheck {
  std::string label;
  bool d_squared = true;
  bool chain_map = true;
  std::string d_squared_witness;  // D²(g) when nonzero
  std::string chain_map_witness;  // m(Dg) and δ(m(g)) when they differ
};

struct TableReport {
  std::vector<GeneratorCheck> generators;
  bool target_is_cdga = true;
  std::string detail;
  bool passed() const;
};

/// D² = 0 on every generator (symbolically in the parameters) and
/// m∘D = δ∘m on every generator with the parameter values substituted.
TableReport check_table(const GeneratorTable& table);

/// Replaces a parameter by its value everywhere.
GeneratorTable fix_parameter(const GeneratorTable& table, const std::string& name);
GeneratorTable rename_parameter(const GeneratorTable& table, const std::string& from, const std::string& to);

}  // namespace cdga
