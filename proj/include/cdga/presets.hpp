// Built-in Poincaré duality algebras: point, spheres, ℂP², S²×S³, S³×S⁴.
#pragma once

#include <string>
#include <vector>

#include "cdga/poincare.hpp"

namespace cdga {

struct PresetData {
  AlgebraPtr algebra;
  int formal_dimension = 0;
  SparseVec orientation;
};

/// point, s2, s3, s4, s5, cp2, s2xs3, s3xs4.
const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
/// Throws std::out_of_range for an unknown name.
PresetData preset(const std::string& name);
PdPtr preset_pd(const std::string& name);

}  // namespace cdga
