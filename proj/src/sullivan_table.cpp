#include "cdga/sullivan_table.hpp"

#include "cdga/errors.hpp"
#include "cdga/presets.hpp"

namespace cdga {

using Elem = FreeExtension::Elem;

std::map<std::string, Scalar> GeneratorTable::parameter_values() const {
  std::map<std::string, Scalar> out;
  for (const auto& p : parameters) out[p.name] = p.value;
  return out;
}

SparseVec GeneratorTable::xi_value() const {
  auto values = parameter_values();
  SparseVec out;
  for (const auto& [i, c] : xi) {
    Poly v = c.evaluate(values);
    if (!v.is_constant()) throw StructureError("ξ depends on an unknown parameter: " + v.str());
    if (v.constant() != 0) out[i] = v.constant();
  }
  return out;
}

GeneratorTable s2xs3_table(const Scalar& q, const Scalar& r) {
  GeneratorTable t;
  t.name = "s2xs3_table";
  t.factor = preset_pd("s2xs3");
  const TensorAlgebra& sq = t.factor->square();
  const DGAlgebra& aa = *sq.algebra;
  auto free = std::make_shared<FreeExtension>(
      sq.algebra, std::vector<FreeGenerator>{{"u", 4}, {"z5", 5}, {"z61", 6}, {"z62", 6}, {"z71", 7}, {"z72", 7}, {"h", 7}});
  const FreeExtension& f = *free;
  auto g = [&](const char* label) { return f.generator(f.generator_index(label)); };
  auto b = [&](const char* label) { return f.base_element(SparseVec{{aa.index_of(label), Scalar(1)}}); };
  auto gb = [&](const char* gen, const char* base) { return f.multiply(g(gen), b(base)); };
  auto sum = [](std::initializer_list<std::pair<Poly, Elem>> parts) {
    Elem out;
    for (const auto& [c, e] : parts) add_to(out, c, e);
    return out;
  };

  t.differential.resize(7);
  t.differential[0] = f.base_element(t.factor->diagonal());
  t.differential[1] = sum({{1, gb("u", "1⊗x")}, {-1, gb("u", "x⊗1")}});
  t.differential[2] = sum({{1, gb("u", "1⊗y")}, {-1, gb("u", "y⊗1")}});
  t.differential[3] = sum({{1, gb("z5", "1⊗x")}, {1, gb("z5", "x⊗1")}});
  t.differential[4] = sum({{1, gb("z62", "1⊗x")}, {-1, gb("z62", "x⊗1")}});
  t.differential[5] =
      sum({{1, gb("z61", "1⊗x")}, {1, gb("z5", "y⊗1")}, {-1, gb("z5", "1⊗y")}, {-1, gb("z61", "x⊗1")}});
  // The q, r terms enter with a minus sign: m(u²) = S1·S1 = ξ, so m(Dh) = 0
  // forces D(h) ≡ u² − ξ modulo the z-terms (which m kills).
  t.differential[6] = sum({{1, f.multiply(g("u"), g("u"))},
                           {-2, gb("z61", "1⊗x")},
                           {-2, gb("z61", "x⊗1")},
                           {-Poly::variable("q"), b("y⊗xy")},
                           {-Poly::variable("r"), b("xy⊗y")}});
  t.free = free;
  t.parameters = {{"q", q}, {"r", r}};
  t.xi[aa.index_of("y⊗xy")] = Poly::variable("q");
  t.xi[aa.index_of("xy⊗y")] = Poly::variable("r");
  t.evaluation.resize(7);
  t.evaluation[0]["S1"] = 1;
  t.degree_cap = 8;
  return t;
}

bool TableReport::passed() const {
  if (!target_is_cdga) return false;
  for (const auto& g : generators)
    if (!g.d_squared || !g.chain_map) return false;
  return true;
}

namespace {

// The value of a polynomial coefficient once all parameters are substituted.
Scalar numeric(const Poly& p, const std::map<std::string, Scalar>& values) {
  Poly v = p.evaluate(values);
  if (!v.is_constant()) throw StructureError("coefficient depends on unknown symbols: " + v.str());
  return v.constant();
}

}  // namespace

TableReport check_table(const GeneratorTable& table) {
  TableReport report;
  const FreeExtension& f = *table.free;
  const std::size_t ng = f.generators().size();
  if (table.differential.size() != ng || table.evaluation.size() != ng)
    throw StructureError("generator table: differential and evaluation must list every generator");
  if (ng == 0) return report;

  const auto values = table.parameter_values();
  TwistedModel target = build_cxi(*table.factor, table.xi_value());
  report.target_is_cdga = target.axioms.passed() && target.inclusion_check.ok;
  if (!report.target_is_cdga) report.detail = "target C(ξ) fails the CDGA axioms";
  const DGAlgebra& c = *target.algebra;

  std::vector<SparseVec> m_gen(ng);
  for (std::size_t g = 0; g < ng; ++g)
    for (const auto& [label, coeff] : table.evaluation[g]) {
      if (coeff == 0) continue;
      auto idx = c.basis().find(label);
      if (!idx) throw StructureError("evaluation refers to unknown target element \"" + label + "\"");
      m_gen[g][*idx] = coeff;
    }
  auto evaluate = [&](const Elem& x) {
    SparseVec out;
    for (const auto& [t, coeff] : x) {
      SparseVec v = target.inclusion.at(t.base);
      // Generators sit to the left of the base element.
      for (std::size_t g = ng; g-- > 0;)
        for (unsigned k = 0; k < t.exponents[g]; ++k) v = c.multiply(m_gen[g], v);
      add_scaled(out, numeric(coeff, values), v);
    }
    return out;
  };

  for (std::size_t g = 0; g < ng; ++g) {
    GeneratorCheck gc;
    gc.label = f.generators()[g].label;
    Elem dd = f.derivation(table.differential[g], table.differential);
    if (!dd.empty()) {
      gc.d_squared = false;
      gc.d_squared_witness = f.format(dd);
    }
    for (const auto& [t, coeff] : table.differential[g]) {
      (void)coeff;
      if (f.degree(t) != f.generators()[g].degree + 1) {
        gc.d_squared = false;
        gc.d_squared_witness = "D(" + gc.label + ") is not of degree " + std::to_string(f.generators()[g].degree + 1);
      }
    }
    SparseVec lhs = evaluate(table.differential[g]);
    SparseVec rhs = c.apply_d(m_gen[g]);
    if (lhs != rhs) {
      gc.chain_map = false;
      gc.chain_map_witness = "m(D" + gc.label + ") and δ(m(" + gc.label + ")) differ";
    }
    report.generators.push_back(std::move(gc));
  }
  return report;
}

GeneratorTable fix_parameter(const GeneratorTable& table, const std::string& name) {
  GeneratorTable t = table;
  Scalar value;
  bool found = false;
  std::vector<TableParameter> kept;
  for (const auto& p : table.parameters) {
    if (p.name == name) {
      value = p.value;
      found = true;
    } else {
      kept.push_back(p);
    }
  }
  if (!found) throw StructureError("no parameter named " + name);
  t.parameters = kept;
  auto sub = [&](const Poly& p) { return p.substitute(name, Poly(value)); };
  for (auto& d : t.differential) d = map_coefficients(d, sub);
  std::map<std::size_t, Poly> xi;
  for (const auto& [i, c] : t.xi) {
    Poly v = sub(c);
    if (!v.is_zero()) xi.emplace(i, v);
  }
  t.xi = xi;
  return t;
}

GeneratorTable rename_parameter(const GeneratorTable& table, const std::string& from, const std::string& to) {
  GeneratorTable t = table;
  bool found = false;
  for (auto& p : t.parameters) {
    if (p.name == to) throw StructureError("parameter " + to + " already exists");
    if (p.name == from) {
      p.name = to;
      found = true;
    }
  }
  if (!found) throw StructureError("no parameter named " + from);
  auto sub = [&](const Poly& p) { return p.substitute(from, Poly::variable(to)); };
  for (auto& d : t.differential) d = map_coefficients(d, sub);
  for (auto& [i, c] : t.xi) c = sub(c);
  return t;
}

}  // namespace cdga
