// JSON files describing algebras and generator tables.
//
// Algebra file:
//   { "name": "s2", "formal_dimension": 2,
//     "basis": [{"label": "1", "degree": 0}, {"label": "x", "degree": 2}],
//     "unit": "1",
//     "products": [{"left": "x", "right": "y", "result": [{"label": "xy", "coeff": "1"}]}],
//     "differential": [{"from": "a", "to": "b", "coeff": "-1/2"}],
//     "orientation": {"x": "1"},
//     "flags": {"simply_connected": true} }
// Coefficients are rational strings; JSON integers are accepted, floats are
// not. Products not listed are zero; products with the unit are implied.
//
// Generator table file ("kind": "sullivan_table"): the factor algebra A,
// parameters with values, generators with D(g) as terms over A⊗A, the twist
// ξ and the evaluation into C(ξ). See presets/s2xs3_table.json.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cdga/algebra.hpp"
#include "cdga/sullivan_table.hpp"

namespace cdga {

struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<int> formal_dimension;
  SparseVec orientation;
};

enum class FileKind { Algebra, Table };

/// Throws ParseError on bad syntax (with line and column) or schema.
nlohmann::json parse_json_text(std::string_view text);
FileKind file_kind(const nlohmann::json& doc);

/// Schema errors raise ParseError; grading violations raise StructureError.
AlgebraFile algebra_from_json(const nlohmann::json& doc);
AlgebraFile read_algebra_text(std::string_view text);

nlohmann::ordered_json algebra_to_json(const DGAlgebra& algebra, std::optional<int> formal_dimension,
                                       const SparseVec& orientation);
/// Two-space indented document with a trailing newline.
std::string write_algebra_text(const DGAlgebra& algebra, std::optional<int> formal_dimension,
                               const SparseVec& orientation);

/// The factor must be a Poincaré duality algebra (PdError otherwise).
GeneratorTable table_from_json(const nlohmann::json& doc);
nlohmann::ordered_json table_to_json(const GeneratorTable& table);
std::string write_table_text(const GeneratorTable& table);

/// Structural identity: same name, labels, degrees, unit, products, differential.
bool same_structure(const DGAlgebra& a, const DGAlgebra& b);

}  // namespace cdga
