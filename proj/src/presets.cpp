#include "cdga/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdga {

namespace {

struct Recipe {
  std::vector<std::pair<std::string, int>> basis;
  // left, right, result label (coefficient +1)
  std::vector<std::tuple<std::string, std::string, std::string>> products;
  int n;
  std::string top;
};

Recipe recipe_for(const std::string& name) {
  if (name == "point") return {{{"1", 0}}, {}, 0, "1"};
  if (name == "s2") return {{{"1", 0}, {"x", 2}}, {}, 2, "x"};
  if (name == "s3") return {{{"1", 0}, {"y", 3}}, {}, 3, "y"};
  if (name == "s4") return {{{"1", 0}, {"z", 4}}, {}, 4, "z"};
  if (name == "s5") return {{{"1", 0}, {"w", 5}}, {}, 5, "w"};
  if (name == "cp2") return {{{"1", 0}, {"x", 2}, {"x^2", 4}}, {{"x", "x", "x^2"}}, 4, "x^2"};
  if (name == "s2xs3") return {{{"1", 0}, {"x", 2}, {"y", 3}, {"xy", 5}}, {{"x", "y", "xy"}}, 5, "xy"};
  if (name == "s3xs4") return {{{"1", 0}, {"y", 3}, {"z", 4}, {"yz", 7}}, {{"y", "z", "yz"}}, 7, "yz"};
  throw std::out_of_range("unknown preset \"" + name + "\"");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"point", "s2", "s3", "s4", "s5", "cp2", "s2xs3", "s3xs4"};
  return names;
}

bool is_preset(const std::string& name) {
  const auto& n = preset_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

PresetData preset(const std::string& name) {
  Recipe s = recipe_for(name);
  AlgebraBuilder b(name, AlgebraBuilder::Order::Label);
  for (const auto& [label, degree] : s.basis) b.add_basis(label, degree);
  b.set_unit(b.slot("1"));
  b.set_top_degree(s.n);
  b.set_simply_connected(true);
  for (const auto& [l, r, res] : s.products) b.set_product(b.slot(l), b.slot(r), SparseVec{{b.slot(res), Scalar(1)}});
  PresetData d;
  d.algebra = b.build();
  d.formal_dimension = s.n;
  d.orientation[d.algebra->index_of(s.top)] = 1;
  return d;
}

PdPtr preset_pd(const std::string& name) {
  PresetData d = preset(name);
  return make_pd(d.algebra, d.formal_dimension, d.orientation);
}

}  // namespace cdga
