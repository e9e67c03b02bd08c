#include "cdga/algebra_file.hpp"

#include <set>

#include "cdga/errors.hpp"
#include "cdga/poincare.hpp"

namespace cdga {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema(where + "." + key, "expected a string");
  return v.get<std::string>();
}

int int_value(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema(where, "expected an integer");
  return v.get<int>();
}

Scalar coeff_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_number_float()) schema(where, "floating point coefficients are not allowed; write \"p/q\"");
  if (!v.is_string()) schema(where, "expected a rational string");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const ParseError& e) {
    schema(where, e.what());
  }
}

const json& array_field(const json& obj, const char* key, const std::string& where, bool required) {
  static const json empty = json::array();
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) schema(where, std::string("missing field \"") + key + "\"");
    return empty;
  }
  if (!it->is_array()) schema(where + "." + key, "expected a list");
  return *it;
}

std::size_t slot_of(const AlgebraBuilder& b, const std::string& label, const std::string& where) {
  try {
    return b.slot(label);
  } catch (const StructureError&) {
    schema(where, "unknown label \"" + label + "\"");
  }
}

std::size_t index_of(const DGAlgebra& a, const std::string& label, const std::string& where) {
  auto i = a.basis().find(label);
  if (!i) schema(where, "unknown label \"" + label + "\"");
  return *i;
}

ordered_json coeff_json(const Scalar& c) { return format_scalar(c); }

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Byte offset -> 1-based line and column.
    std::size_t line = 1, column = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("; ");
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("invalid JSON: " + msg, line, column);
  }
}

FileKind file_kind(const json& doc) {
  if (!doc.is_object()) schema("document", "expected an object");
  auto it = doc.find("kind");
  if (it == doc.end()) return FileKind::Algebra;
  if (!it->is_string()) schema("kind", "expected a string");
  const auto kind = it->get<std::string>();
  if (kind == "algebra") return FileKind::Algebra;
  if (kind == "sullivan_table") return FileKind::Table;
  schema("kind", "unknown kind \"" + kind + "\"");
}

AlgebraFile algebra_from_json(const json& doc) {
  if (!doc.is_object()) schema("document", "expected an object");
  std::string name = "algebra";
  if (doc.contains("name")) name = string_field(doc, "name", "document");

  AlgebraBuilder b(name, AlgebraBuilder::Order::Label);
  const json& basis = array_field(doc, "basis", "document", true);
  if (basis.empty()) schema("basis", "empty basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string where = "basis[" + std::to_string(i) + "]";
    if (!basis[i].is_object()) schema(where, "expected {label, degree}");
    std::string label = string_field(basis[i], "label", where);
    int degree = int_value(field(basis[i], "degree", where), where + ".degree");
    if (label.empty()) schema(where, "empty label");
    try {
      b.add_basis(label, degree);
    } catch (const StructureError& e) {
      schema(where, e.what());
    }
  }
  b.set_unit(slot_of(b, string_field(doc, "unit", "document"), "unit"));

  const json& products = array_field(doc, "products", "document", false);
  for (std::size_t i = 0; i < products.size(); ++i) {
    const std::string where = "products[" + std::to_string(i) + "]";
    const json& p = products[i];
    if (!p.is_object()) schema(where, "expected {left, right, result}");
    std::size_t l = slot_of(b, string_field(p, "left", where), where + ".left");
    std::size_t r = slot_of(b, string_field(p, "right", where), where + ".right");
    SparseVec value;
    const json& result = array_field(p, "result", where, true);
    for (std::size_t k = 0; k < result.size(); ++k) {
      const std::string w = where + ".result[" + std::to_string(k) + "]";
      if (!result[k].is_object()) schema(w, "expected {label, coeff}");
      std::size_t t = slot_of(b, string_field(result[k], "label", w), w + ".label");
      add_scaled(value, coeff_value(field(result[k], "coeff", w), w + ".coeff"), SparseVec{{t, Scalar(1)}});
    }
    b.set_product(l, r, value);
  }

  std::map<std::size_t, SparseVec> diff;
  const json& differential = array_field(doc, "differential", "document", false);
  for (std::size_t i = 0; i < differential.size(); ++i) {
    const std::string where = "differential[" + std::to_string(i) + "]";
    const json& e = differential[i];
    if (!e.is_object()) schema(where, "expected {from, to, coeff}");
    std::size_t from = slot_of(b, string_field(e, "from", where), where + ".from");
    std::size_t to = slot_of(b, string_field(e, "to", where), where + ".to");
    add_scaled(diff[from], coeff_value(field(e, "coeff", where), where + ".coeff"), SparseVec{{to, Scalar(1)}});
  }
  for (auto& [from, value] : diff) b.set_differential(from, value);

  AlgebraFile out;
  if (doc.contains("formal_dimension") && !doc["formal_dimension"].is_null()) {
    out.formal_dimension = int_value(doc["formal_dimension"], "formal_dimension");
    b.set_top_degree(*out.formal_dimension);
  }
  if (doc.contains("flags")) {
    const json& flags = doc["flags"];
    if (!flags.is_object()) schema("flags", "expected an object");
    if (flags.contains("simply_connected")) {
      if (!flags["simply_connected"].is_boolean()) schema("flags.simply_connected", "expected true or false");
      b.set_simply_connected(flags["simply_connected"].get<bool>());
    }
  }

  std::vector<std::pair<std::size_t, Scalar>> orientation;
  if (doc.contains("orientation")) {
    const json& o = doc["orientation"];
    if (!o.is_object()) schema("orientation", "expected {label: coeff}");
    for (auto it = o.begin(); it != o.end(); ++it)
      orientation.emplace_back(slot_of(b, it.key(), "orientation"), coeff_value(it.value(), "orientation." + it.key()));
  }

  out.algebra = b.build();
  const auto& remap = b.index_of_slot();
  for (const auto& [slot, c] : orientation)
    if (c != 0) out.orientation[remap[slot]] += c;
  return out;
}

AlgebraFile read_algebra_text(std::string_view text) {
  json doc = parse_json_text(text);
  if (file_kind(doc) != FileKind::Algebra) schema("kind", "expected an algebra file");
  return algebra_from_json(doc);
}

ordered_json algebra_to_json(const DGAlgebra& a, std::optional<int> formal_dimension, const SparseVec& orientation) {
  ordered_json doc;
  doc["name"] = a.name();
  if (formal_dimension) doc["formal_dimension"] = *formal_dimension;
  ordered_json basis = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back({{"label", a.label(i)}, {"degree", a.degree(i)}});
  doc["basis"] = basis;
  doc["unit"] = a.label(a.unit());

  // Unit products are implied; every other nonzero product is listed once
  // with left index <= right index.
  ordered_json products = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i == a.unit()) continue;
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (j == a.unit()) continue;
      SparseVec v = a.multiply_basis(i, j);
      if (v.empty()) continue;
      ordered_json result = ordered_json::array();
      for (const auto& [k, c] : v) result.push_back({{"label", a.label(k)}, {"coeff", coeff_json(c)}});
      products.push_back({{"left", a.label(i)}, {"right", a.label(j)}, {"result", result}});
    }
  }
  doc["products"] = products;

  ordered_json differential = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& [k, c] : a.d(i))
      differential.push_back({{"from", a.label(i)}, {"to", a.label(k)}, {"coeff", coeff_json(c)}});
  doc["differential"] = differential;

  ordered_json o = ordered_json::object();
  for (const auto& [k, c] : orientation) o[a.label(k)] = coeff_json(c);
  doc["orientation"] = o;
  doc["flags"] = {{"simply_connected", a.declared_simply_connected()}};
  return doc;
}

std::string write_algebra_text(const DGAlgebra& a, std::optional<int> formal_dimension, const SparseVec& orientation) {
  return algebra_to_json(a, formal_dimension, orientation).dump(2) + "\n";
}

namespace {

struct ParsedTerm {
  std::vector<unsigned> exponents;
  std::size_t base;
  Poly coeff;
};

ParsedTerm parse_term(const json& t, const FreeExtension& f, const std::string& where, bool with_gens) {
  if (!t.is_object()) schema(where, "expected a term object");
  ParsedTerm out;
  out.exponents.assign(f.generators().size(), 0);
  out.base = index_of(*f.base(), string_field(t, "base", where), where + ".base");
  Poly c = coeff_value(field(t, "coeff", where), where + ".coeff");
  if (t.contains("param")) {
    if (!t["param"].is_string()) schema(where + ".param", "expected a parameter name");
    c = c * Poly::variable(t["param"].get<std::string>());
  }
  out.coeff = c;
  if (with_gens && t.contains("gens")) {
    const json& g = t["gens"];
    if (!g.is_object()) schema(where + ".gens", "expected {generator: exponent}");
    for (auto it = g.begin(); it != g.end(); ++it) {
      std::size_t gi;
      try {
        gi = f.generator_index(it.key());
      } catch (const Error&) {
        schema(where + ".gens", "unknown generator \"" + it.key() + "\"");
      }
      int e = int_value(it.value(), where + ".gens." + it.key());
      if (e < 0) schema(where + ".gens", "negative exponent");
      out.exponents[gi] = static_cast<unsigned>(e);
    }
  }
  return out;
}

// One JSON entry per (term, monomial of the coefficient); each monomial must
// be a constant or a constant times a single parameter.
void emit_terms(ordered_json& out, const FreeExtension& f, const FreeExtension::Term& term, const Poly& coeff,
                bool with_gens) {
  for (const auto& [mono, c] : coeff.terms()) {
    ordered_json entry;
    entry["coeff"] = format_scalar(c);
    if (!mono.empty()) {
      if (mono.size() != 1 || mono[0].second != 1)
        throw StructureError("table coefficient " + coeff.str() + " is not linear in one parameter");
      entry["param"] = mono[0].first;
    }
    if (with_gens) {
      ordered_json gens = ordered_json::object();
      for (std::size_t g = 0; g < term.exponents.size(); ++g)
        if (term.exponents[g]) gens[f.generators()[g].label] = term.exponents[g];
      entry["gens"] = gens;
    }
    entry["base"] = f.base()->label(term.base);
    out.push_back(entry);
  }
}

}  // namespace

GeneratorTable table_from_json(const json& doc) {
  if (file_kind(doc) != FileKind::Table) schema("kind", "expected \"sullivan_table\"");
  GeneratorTable t;
  t.name = doc.contains("name") ? string_field(doc, "name", "document") : "table";
  AlgebraFile factor = algebra_from_json(field(doc, "factor", "document"));
  if (!factor.formal_dimension) schema("factor", "missing formal_dimension");
  t.factor = make_pd(factor.algebra, *factor.formal_dimension, factor.orientation);
  t.degree_cap = int_value(field(doc, "degree_cap", "document"), "degree_cap");

  const json& params = array_field(doc, "parameters", "document", false);
  std::set<std::string> param_names;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string where = "parameters[" + std::to_string(i) + "]";
    if (!params[i].is_object()) schema(where, "expected {name, value}");
    TableParameter p{string_field(params[i], "name", where), coeff_value(field(params[i], "value", where), where + ".value")};
    if (!param_names.insert(p.name).second) schema(where, "duplicate parameter \"" + p.name + "\"");
    t.parameters.push_back(p);
  }

  const json& gens = array_field(doc, "generators", "document", true);
  std::vector<FreeGenerator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_object()) schema(where, "expected {label, degree, differential}");
    generators.push_back({string_field(gens[i], "label", where), int_value(field(gens[i], "degree", where), where + ".degree")});
  }
  auto free = std::make_shared<FreeExtension>(t.factor->square().algebra, generators);
  t.free = free;

  auto check_param = [&](const Poly& p, const std::string& where) {
    for (const auto& v : p.variables())
      if (!param_names.count(v)) schema(where, "undeclared parameter \"" + v + "\"");
  };

  t.differential.resize(generators.size());
  t.evaluation.resize(generators.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const json& terms = array_field(gens[i], "differential", where, false);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string w = where + ".differential[" + std::to_string(k) + "]";
      ParsedTerm pt = parse_term(terms[k], *free, w, true);
      check_param(pt.coeff, w);
      FreeExtension::Elem e = free->multiply(free->monomial(pt.exponents), free->base_element(SparseVec{{pt.base, Scalar(1)}}));
      add_to(t.differential[i], pt.coeff, e);
    }
    if (gens[i].contains("evaluation")) {
      const json& ev = gens[i]["evaluation"];
      if (!ev.is_object()) schema(where + ".evaluation", "expected {label: coeff}");
      for (auto it = ev.begin(); it != ev.end(); ++it) {
        Scalar c = coeff_value(it.value(), where + ".evaluation." + it.key());
        if (c != 0) t.evaluation[i][it.key()] = c;
      }
    }
  }

  const json& xi = array_field(doc, "xi", "document", false);
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const std::string w = "xi[" + std::to_string(k) + "]";
    ParsedTerm pt = parse_term(xi[k], *free, w, false);
    check_param(pt.coeff, w);
    Poly& slot = t.xi[pt.base];
    slot += pt.coeff;
    if (slot.is_zero()) t.xi.erase(pt.base);
  }
  return t;
}

ordered_json table_to_json(const GeneratorTable& t) {
  const FreeExtension& f = *t.free;
  ordered_json doc;
  doc["kind"] = "sullivan_table";
  doc["name"] = t.name;
  doc["factor"] = algebra_to_json(*t.factor->algebra(), t.factor->n(), t.factor->epsilon());
  doc["degree_cap"] = t.degree_cap;
  ordered_json params = ordered_json::array();
  for (const auto& p : t.parameters) params.push_back({{"name", p.name}, {"value", format_scalar(p.value)}});
  doc["parameters"] = params;

  ordered_json gens = ordered_json::array();
  for (std::size_t g = 0; g < f.generators().size(); ++g) {
    ordered_json entry;
    entry["label"] = f.generators()[g].label;
    entry["degree"] = f.generators()[g].degree;
    ordered_json terms = ordered_json::array();
    for (const auto& [term, coeff] : t.differential.at(g)) emit_terms(terms, f, term, coeff, true);
    entry["differential"] = terms;
    ordered_json ev = ordered_json::object();
    for (const auto& [label, c] : t.evaluation.at(g)) ev[label] = format_scalar(c);
    entry["evaluation"] = ev;
    gens.push_back(entry);
  }
  doc["generators"] = gens;

  ordered_json xi = ordered_json::array();
  for (const auto& [base, coeff] : t.xi) {
    FreeExtension::Term term{std::vector<unsigned>(f.generators().size(), 0), base};
    emit_terms(xi, f, term, coeff, false);
  }
  doc["xi"] = xi;
  return doc;
}

std::string write_table_text(const GeneratorTable& t) { return table_to_json(t).dump(2) + "\n"; }

bool same_structure(const DGAlgebra& a, const DGAlgebra& b) {
  if (a.name() != b.name() || a.dim() != b.dim() || a.unit() != b.unit()) return false;
  if (a.basis().labels() != b.basis().labels() || a.basis().degrees() != b.basis().degrees()) return false;
  if (a.declared_simply_connected() != b.declared_simply_connected()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.d(i) != b.d(i)) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.multiply_basis(i, j) != b.multiply_basis(i, j)) return false;
  }
  return true;
}

}  // namespace cdga
