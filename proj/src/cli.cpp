#include "cdga/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "cdga/algebra_file.hpp"
#include "cdga/errors.hpp"
#include "cdga/expression.hpp"
#include "cdga/obstruction.hpp"
#include "cdga/presets.hpp"
#include "cdga/products.hpp"
#include "cdga/twisted.hpp"

namespace cdga {

namespace {

using ojson = nlohmann::ordered_json;

// A report in both renderings; the JSON one is printed under --json.
struct Report {
  std::ostringstream text;
  ojson doc;
  int code = kOk;
};

struct Loaded {
  std::optional<AlgebraFile> algebra;
  std::optional<GeneratorTable> table;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A path that does not exist falls back to the built-in preset of the same
// stem, so "s2xs3.json" works from any directory.
Loaded load(const std::string& arg) {
  Loaded out;
  std::filesystem::path path(arg);
  if (std::filesystem::exists(path)) {
    nlohmann::json doc = parse_json_text(read_file(path));
    if (file_kind(doc) == FileKind::Table)
      out.table = table_from_json(doc);
    else
      out.algebra = algebra_from_json(doc);
    return out;
  }
  std::string stem = path.filename().string();
  if (stem.size() > 5 && stem.ends_with(".json")) stem.resize(stem.size() - 5);
  if (is_preset(stem)) {
    PresetData p = preset(stem);
    out.algebra = AlgebraFile{p.algebra, p.formal_dimension, p.orientation};
    return out;
  }
  if (stem == "s2xs3_table") {
    out.table = s2xs3_table(1, 0);
    return out;
  }
  throw ParseError("no such file or preset: " + arg);
}

AlgebraFile load_algebra(const std::string& arg) {
  Loaded l = load(arg);
  if (!l.algebra) throw PreconditionError("NotAnAlgebra", arg + " is a generator table, not an algebra");
  return *l.algebra;
}

PdPtr load_pd(const std::string& arg) {
  AlgebraFile f = load_algebra(arg);
  if (!f.formal_dimension)
    throw PreconditionError("NoFormalDimension", arg + " declares no formal dimension");
  return make_pd(f.algebra, *f.formal_dimension, f.orientation);
}

std::string betti_string(const std::vector<std::size_t>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

std::vector<std::size_t> betti_of(const DGAlgebra& a) { return cohomology(a.complex()).betti(); }

std::string factor_label(const std::string& label) {
  return label.find("⊗") != std::string::npos ? "(" + label + ")" : label;
}

std::string witness_labels(const DGAlgebra& a, const std::vector<std::size_t>& witness) {
  std::string s;
  for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? ", " : "") + a.label(witness[i]);
  return s;
}

void axiom_section(Report& r, const DGAlgebra& a, const AxiomReport& axioms, ojson& into) {
  ojson list = ojson::array();
  for (const auto& res : axioms.results) {
    r.text << "  " << res.axiom << ": " << (res.passed ? "pass" : "FAIL") << " (" << res.checked << " checked)";
    if (!res.passed) {
      r.text << ", witness " << witness_labels(a, res.witness);
      if (!res.detail.empty()) r.text << ": " << res.detail;
    }
    r.text << "\n";
    ojson j;
    j["axiom"] = res.axiom;
    j["passed"] = res.passed;
    j["checked"] = res.checked;
    ojson w = ojson::array();
    for (auto i : res.witness) w.push_back(a.label(i));
    j["witness"] = w;
    j["detail"] = res.detail;
    list.push_back(j);
  }
  into = list;
}

void cmd_check(Report& r, const std::string& file) {
  Loaded l = load(file);
  if (l.table) {
    const GeneratorTable& t = *l.table;
    TableReport rep = check_table(t);
    r.text << "generator table " << t.name << " over " << t.factor->algebra()->name() << "⊗"
           << t.factor->algebra()->name() << ", parameters";
    ojson params = ojson::object();
    for (const auto& p : t.parameters) {
      r.text << " " << p.name << " = " << format_scalar(p.value);
      params[p.name] = format_scalar(p.value);
    }
    r.text << "\n  target C(ξ) is a CDGA: " << (rep.target_is_cdga ? "pass" : "FAIL") << "\n";
    ojson gens = ojson::array();
    for (const auto& g : rep.generators) {
      r.text << "  " << g.label << ": D² = 0 " << (g.d_squared ? "pass" : "FAIL") << ", m∘D = δ∘m "
             << (g.chain_map ? "pass" : "FAIL") << "\n";
      if (!g.d_squared) r.text << "    D²(" << g.label << ") = " << g.d_squared_witness << "\n";
      if (!g.chain_map) r.text << "    " << g.chain_map_witness << "\n";
      gens.push_back({{"generator", g.label},
                      {"d_squared", g.d_squared},
                      {"chain_map", g.chain_map},
                      {"d_squared_witness", g.d_squared_witness},
                      {"chain_map_witness", g.chain_map_witness}});
    }
    r.text << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    r.doc["table"] = t.name;
    r.doc["parameters"] = params;
    r.doc["target_is_cdga"] = rep.target_is_cdga;
    r.doc["generators"] = gens;
    r.doc["passed"] = rep.passed();
    r.code = rep.passed() ? kOk : kMathFailure;
    return;
  }

  const AlgebraFile& f = *l.algebra;
  const DGAlgebra& a = *f.algebra;
  r.text << "algebra " << a.name() << ": dimension " << a.dim();
  if (f.formal_dimension) r.text << ", formal dimension " << *f.formal_dimension;
  r.text << "\naxioms:\n";
  AxiomReport axioms = check_cdga(a);
  r.doc["algebra"] = a.name();
  r.doc["dimension"] = a.dim();
  axiom_section(r, a, axioms, r.doc["axioms"]);
  bool ok = axioms.passed();

  if (f.formal_dimension) {
    PdCheck pd = check_pd(f.algebra, *f.formal_dimension, f.orientation);
    r.text << "poincare duality (n = " << *f.formal_dimension << "): " << (pd.ok() ? "pass" : "FAIL") << "\n";
    ojson failures = ojson::array();
    for (const auto& fail : pd.failures) {
      r.text << "  " << to_string(fail.kind) << " in degree " << fail.degree;
      if (!fail.witness.empty()) r.text << ", witness " << format_element(fail.witness, a);
      if (!fail.detail.empty()) r.text << ": " << fail.detail;
      r.text << "\n";
      failures.push_back({{"kind", to_string(fail.kind)},
                          {"degree", fail.degree},
                          {"witness", format_element(fail.witness, a)},
                          {"detail", fail.detail}});
    }
    r.doc["poincare_duality"] = {{"formal_dimension", *f.formal_dimension}, {"passed", pd.ok()}, {"failures", failures}};
    ok = ok && pd.ok();
  } else {
    r.text << "poincare duality: no formal dimension declared\n";
    r.doc["poincare_duality"] = nullptr;
  }
  r.text << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  r.doc["passed"] = ok;
  r.code = ok ? kOk : kMathFailure;
}

void cmd_diagonal(Report& r, const std::string& file) {
  PdPtr pd = load_pd(file);
  const DGAlgebra& a = *pd->algebra();
  const DGAlgebra& aa = *pd->square().algebra;
  r.text << "algebra " << a.name() << ", formal dimension " << pd->n() << "\n";
  std::string delta = format_element(pd->diagonal(), aa);
  r.text << "Δ = " << delta << "\n";
  r.text << "dual basis:\n";
  ojson duals = ojson::object();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::string v = format_element(pd->dual(i), a);
    r.text << "  " << a.label(i) << "* = " << v << "\n";
    duals[a.label(i)] = v;
  }
  MappingCone cone = cone_model(*pd);
  const DGAlgebra& c = *cone.algebra;
  r.text << "δ-table of C(Δ!):\n";
  ojson table = ojson::object();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    std::size_t s = cone.suspended_index[j];
    std::string v = format_element(c.d(s), c);
    r.text << "  δ(" << c.label(s) << ") = " << v << "\n";
    table[c.label(s)] = v;
  }
  r.doc["algebra"] = a.name();
  r.doc["formal_dimension"] = pd->n();
  r.doc["diagonal"] = delta;
  r.doc["dual_basis"] = duals;
  r.doc["delta_table"] = table;
}

void cmd_betti(Report& r, const std::string& file) {
  PdPtr pd = load_pd(file);
  DiagonalQuotient q = quotient_by_diagonal(*pd);
  MappingCone cone = cone_model(*pd);
  auto bq = betti_of(*q.quotient.algebra);
  auto bc = betti_of(*cone.algebra);
  std::size_t len = std::max(bq.size(), bc.size());
  bq.resize(len, 0);
  bc.resize(len, 0);
  r.text << "algebra " << pd->algebra()->name() << ", formal dimension " << pd->n() << "\n";
  r.text << "degree  A⊗A/(Δ)  C(Δ!)  verdict\n";
  bool all = true;
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < len; ++k) {
    bool agree = bq[k] == bc[k];
    all = all && agree;
    std::string deg = std::to_string(k), a = std::to_string(bq[k]), b = std::to_string(bc[k]);
    r.text << deg << std::string(8 - std::min<std::size_t>(deg.size(), 7), ' ') << a
           << std::string(9 - std::min<std::size_t>(a.size(), 8), ' ') << b
           << std::string(7 - std::min<std::size_t>(b.size(), 6), ' ') << (agree ? "AGREE" : "DISAGREE") << "\n";
    rows.push_back({{"degree", k}, {"quotient", bq[k]}, {"cone", bc[k]}, {"agree", agree}});
  }
  r.text << "A⊗A/(Δ): " << betti_string(bq) << "\n";
  r.text << "C(Δ!):   " << betti_string(bc) << "\n";
  r.text << "verdict: " << (all ? "AGREE" : "DISAGREE") << "\n";
  r.doc["algebra"] = pd->algebra()->name();
  r.doc["quotient_betti"] = bq;
  r.doc["cone_betti"] = bc;
  r.doc["degrees"] = rows;
  r.doc["agree"] = all;
  r.code = all ? kOk : kMathFailure;
}

SparseVec random_xi(const PDAlgebra& pd, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  SparseVec xi;
  if (pd.n() % 2 == 0) return xi;
  for (const auto& z : xi_cocycle_basis(pd)) add_scaled(xi, Scalar(coeff(rng)), z);
  return xi;
}

void cmd_cxi(Report& r, const std::string& file, const std::optional<std::string>& xi_text,
             const std::optional<std::string>& x_text, std::uint64_t seed) {
  PdPtr pd = load_pd(file);
  const DGAlgebra& aa = *pd->square().algebra;
  TwistedModel m;
  if (xi_text && x_text) throw PreconditionError("ConflictingOptions", "give either --xi or --x, not both");
  if (x_text) {
    SparseVec x = parse_element(*x_text, *pd->algebra());
    m = c_of_x(*pd, x);
    r.doc["x"] = format_element(x, *pd->algebra());
  } else {
    SparseVec xi = xi_text ? parse_element(*xi_text, aa) : random_xi(*pd, seed);
    if (!xi_text) r.doc["seed"] = seed;
    m = build_cxi(*pd, xi);
  }
  const DGAlgebra& c = *m.algebra;
  std::string xi = format_element(m.xi, aa);
  r.text << "C(ξ) for " << pd->algebra()->name() << ", ξ = " << xi << "\n";

  std::set<std::string> suspended;
  for (auto s : m.truncation.cone.suspended_index) suspended.insert(m.truncation.cone.algebra->label(s));
  const std::string s1 = c.label(m.s1);
  std::string square = format_element(c.multiply_basis(m.s1, m.s1), c);
  r.text << "** (" << s1 << ")² = " << square << "\n";
  r.text << "twisted products:\n";
  ojson products = ojson::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = i; j < c.dim(); ++j) {
      if (!suspended.count(c.label(i)) && !suspended.count(c.label(j))) continue;
      if (i == c.unit() || j == c.unit()) continue;
      SparseVec v = c.multiply_basis(i, j);
      if (v.empty()) continue;
      std::string lhs = factor_label(c.label(i)) + "·" + factor_label(c.label(j));
      std::string rhs = format_element(v, c);
      r.text << "  " << lhs << " = " << rhs << "\n";
      products.push_back({{"left", c.label(i)}, {"right", c.label(j)}, {"value", rhs}});
    }
  }
  r.text << "axioms:\n";
  axiom_section(r, c, m.axioms, r.doc["axioms"]);
  r.text << "  A⊗A → C(ξ) is a CDGA map: " << (m.inclusion_check.ok ? "pass" : "FAIL") << "\n";
  auto betti = betti_of(c);
  r.text << "Betti: " << betti_string(betti) << "\n";
  bool ok = m.axioms.passed() && m.inclusion_check.ok;
  r.doc["algebra"] = pd->algebra()->name();
  r.doc["xi"] = xi;
  r.doc["s1_square"] = square;
  r.doc["products"] = products;
  r.doc["inclusion_is_cdga_map"] = m.inclusion_check.ok;
  r.doc["betti"] = betti;
  r.doc["passed"] = ok;
  r.code = ok ? kOk : kMathFailure;
}

std::vector<Scalar> parse_q_list(const std::string& text) {
  std::vector<Scalar> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in --q list");
    out.push_back(parse_scalar(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ParseError("--q needs at least one value");
  return out;
}

void cmd_classify(Report& r, const std::string& q_text) {
  std::vector<Scalar> qs = parse_q_list(q_text);
  auto matrix = classify_example(qs);
  const std::size_t k = qs.size();
  std::vector<std::string> names;
  for (const auto& q : qs) {
    std::string s = format_scalar(q);
    names.push_back(s[0] == '-' ? "−" + s.substr(1) : s);
  }

  r.text << "verdicts for s2xs3_table(q, 0) against s2xs3_table(q', 0); rows q, columns q'\n";
  std::size_t width = 12;
  for (const auto& n : names) width = std::max(width, n.size() + 2);
  auto pad = [&](const std::string& s) { return s + std::string(width > s.size() ? width - s.size() : 1, ' '); };
  r.text << pad("q \\ q'");
  for (const auto& n : names) r.text << pad(n);
  r.text << "\n";
  bool expected = true;
  ojson rows = ojson::array();
  std::optional<std::pair<std::size_t, std::size_t>> shown;
  for (std::size_t i = 0; i < k; ++i) {
    r.text << pad(names[i]);
    ojson row = ojson::array();
    for (std::size_t j = 0; j < k; ++j) {
      auto v = matrix[i][j].verdict;
      r.text << pad(to_string(v));
      row.push_back(to_string(v));
      auto want = qs[i] == qs[j] ? ObstructionResult::Verdict::Exists : ObstructionResult::Verdict::Obstructed;
      expected = expected && v == want;
      if (v == ObstructionResult::Verdict::Obstructed && i > j && !shown) shown = {i, j};
    }
    r.text << "\n";
    rows.push_back(row);
  }
  if (!shown)
    for (std::size_t i = 0; i < k && !shown; ++i)
      for (std::size_t j = 0; j < k && !shown; ++j)
        if (matrix[i][j].verdict == ObstructionResult::Verdict::Obstructed) shown = {i, j};

  r.doc["q"] = names;
  r.doc["verdicts"] = rows;
  if (shown) {
    const auto& res = matrix[shown->first][shown->second];
    r.text << "trace for q = " << names[shown->first] << " against q' = " << names[shown->second]
           << " (q' renamed r):\n";
    for (const auto& line : res.trace) r.text << "  " << line << "\n";
    r.doc["trace"] = {{"q", names[shown->first]}, {"q_prime", names[shown->second]},
                      {"lines", res.trace}, {"failed_constraint", res.failed_constraint}};
  }
  r.text << "pattern (Exists exactly when q = q'): " << (expected ? "as expected" : "UNEXPECTED") << "\n";
  r.doc["as_expected"] = expected;
  r.code = expected ? kOk : kMathFailure;
}

std::string sign_string(int s) { return s > 0 ? "+1" : s < 0 ? "−1" : "none"; }

void cmd_product(Report& r, const std::string& file_a, const std::string& file_b,
                 const std::optional<std::string>& out_path) {
  PdPtr c = load_pd(file_a);
  PdPtr b = load_pd(file_b);
  CorrespondenceReport rep = diagonal_correspondence(*c, *b);
  const PDAlgebra& p = *rep.product.pd;
  std::string text = write_algebra_text(*p.algebra(), p.n(), p.epsilon());
  std::string path = out_path ? *out_path : p.algebra()->name() + ".json";
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
  }
  r.text << text;
  const DGAlgebra& aa = *p.square().algebra;
  r.text << "diagonal correspondence for " << c->algebra()->name() << " × " << b->algebra()->name() << ":\n";
  r.text << "  σ(Δ_C⊗Δ_B) = " << format_element(rep.sigma_of_diagonals, aa) << "\n";
  r.text << "  Δ_A = " << format_element(rep.product_diagonal, aa) << "\n";
  r.text << "  sign: " << sign_string(rep.sign) << "\n";
  r.text << "  σ is a CDGA isomorphism: " << (rep.sigma_check.ok && rep.sigma_bijective ? "pass" : "FAIL") << "\n";
  r.text << "  ideals correspond: " << (rep.ideals_correspond ? "pass" : "FAIL") << "\n";
  auto bs = rep.source_quotient_betti, bp = rep.product_quotient_betti;
  r.text << "  Betti (C⊗C⊗B⊗B)/(Δ_C⊗Δ_B): " << betti_string(bs) << "\n";
  r.text << "  Betti A⊗A/(Δ_A):           " << betti_string(bp) << "\n";
  r.text << "  Betti agreement: " << (rep.betti_agree ? "AGREE" : "DISAGREE") << "\n";
  r.text << "wrote " << path << "\n";

  r.doc["product"] = algebra_to_json(*p.algebra(), p.n(), p.epsilon());
  r.doc["sigma_of_diagonals"] = format_element(rep.sigma_of_diagonals, aa);
  r.doc["product_diagonal"] = format_element(rep.product_diagonal, aa);
  r.doc["sign"] = rep.sign;
  r.doc["sigma_is_isomorphism"] = rep.sigma_check.ok && rep.sigma_bijective;
  r.doc["ideals_correspond"] = rep.ideals_correspond;
  r.doc["source_quotient_betti"] = bs;
  r.doc["product_quotient_betti"] = bp;
  r.doc["betti_agree"] = rep.betti_agree;
  r.doc["written"] = path;
  r.code = rep.ok() ? kOk : kMathFailure;
}

int report_error(const std::string& kind, const std::string& code, const std::string& message, int status,
                 bool json, const ojson& head, std::ostream& out, std::ostream& err) {
  err << "error";
  if (!code.empty()) err << " [" << code << "]";
  err << ": " << message << "\n";
  if (json) {
    ojson doc = head;
    doc["error"] = {{"kind", kind}, {"code", code}, {"message", message}};
    doc["exit_status"] = status;
    out << doc.dump(2) << "\n";
  }
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Models of configuration spaces of two points from Poincaré duality CDGAs", "cdga-config"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "print the machine-readable report only");
  app.add_option("--seed", seed, "seed for randomly drawn ξ");

  std::vector<std::string> files;
  std::optional<std::string> xi, x, q, out_path;

  auto* check = app.add_subcommand("check", "verify the CDGA axioms and Poincaré duality (or a generator table)");
  check->add_option("file", files, "algebra or table file")->required()->expected(1);
  auto* diagonal = app.add_subcommand("diagonal", "print Δ, the dual basis and the δ-table of C(Δ!)");
  diagonal->add_option("file", files)->required()->expected(1);
  auto* betti = app.add_subcommand("betti-fm2", "compare Betti numbers of A⊗A/(Δ) and C(Δ!)");
  betti->add_option("file", files)->required()->expected(1);
  auto* cxi = app.add_subcommand("cxi", "build the twisted model C(ξ) or C(x)");
  cxi->add_option("file", files)->required()->expected(1);
  cxi->add_option("--xi", xi, "ξ in A⊗A, degree 2n−2");
  cxi->add_option("--x", x, "cocycle x in A, degree n−2; ξ = x⊗ω");
  auto* classify = app.add_subcommand("classify-example", "pairwise isomorphism verdicts for the S²×S³ tables");
  classify->add_option("--q", q, "comma separated values of q")->required();
  auto* product = app.add_subcommand("product", "product of two Poincaré duality algebras");
  product->add_option("files", files, "two algebra files")->required()->expected(2);
  product->add_option("--out", out_path, "where to write the product (default <name>.json)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  Report r;
  std::string command = app.get_subcommands().front()->get_name();
  r.doc["command"] = command;
  r.doc["args"] = args;
  ojson head = r.doc;
  r.text << "$ cdga-config";
  for (const auto& a : args) r.text << " " << a;
  r.text << "\n";

  try {
    if (command == "check")
      cmd_check(r, files.at(0));
    else if (command == "diagonal")
      cmd_diagonal(r, files.at(0));
    else if (command == "betti-fm2")
      cmd_betti(r, files.at(0));
    else if (command == "cxi")
      cmd_cxi(r, files.at(0), xi, x, seed);
    else if (command == "classify-example")
      cmd_classify(r, *q);
    else if (command == "product")
      cmd_product(r, files.at(0), files.at(1), out_path);
  } catch (const ParseError& e) {
    return report_error("ParseError", "", e.what(), kParseError, json, head, out, err);
  } catch (const StructureError& e) {
    return report_error("StructureError", "", e.what(), kParseError, json, head, out, err);
  } catch (const PdError& e) {
    std::string msg = e.what();
    for (const auto& f : e.failures()) msg += "; " + to_string(f.kind) + " in degree " + std::to_string(f.degree);
    return report_error("PdError", "", msg, kMathFailure, json, head, out, err);
  } catch (const PreconditionError& e) {
    return report_error("PreconditionError", e.code(), e.what(), kPrecondition, json, head, out, err);
  } catch (const MathError& e) {
    return report_error("MathError", "", e.what(), kMathFailure, json, head, out, err);
  }

  r.doc["exit_status"] = r.code;
  if (json)
    out << r.doc.dump(2) << "\n";
  else
    out << r.text.str();
  return r.code;
}

}  // namespace cdga
