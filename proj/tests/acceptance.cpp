// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdga/cli.hpp"
#include "cdga/cone.hpp"
#include "cdga/errors.hpp"
#include "cdga/expression.hpp"
#include "cdga/obstruction.hpp"
#include "cdga/presets.hpp"
#include "cdga/products.hpp"
#include "cdga/sullivan_table.hpp"
#include "cdga/twisted.hpp"
#include "oracle.hpp"

using namespace cdga;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

const std::vector<std::string> kPresets{"s2", "s3", "s4", "s5", "cp2", "s2xs3", "s3xs4"};
const std::vector<std::string> kOdd{"s3", "s5", "s2xs3", "s3xs4"};
const std::vector<std::string> kEven{"s2", "s4", "cp2"};

std::vector<std::size_t> betti(const DGAlgebra& a, std::size_t len) { return oracle::padded(oracle::betti(a), len); }

Outcome diagonal_table() {
  Outcome o;
  std::ostringstream out, err;
  int code = run_cli({"diagonal", std::string(CDGA_PRESET_DIR) + "/s2xs3.json"}, out, err);
  o.require(code == kOk, "diagonal exited with " + std::to_string(code));
  for (const char* line : {"Δ = 1⊗xy + x⊗y − y⊗x − xy⊗1", "δ(S1) = 1⊗xy + x⊗y − y⊗x − xy⊗1",
                           "δ(Sx) = x⊗xy − xy⊗x", "δ(Sy) = −y⊗xy − xy⊗y", "δ(Sxy) = −xy⊗xy"}) {
    std::string s = out.str();
    o.require(s.find(line) != std::string::npos, std::string("missing: ") + line);
  }
  return o;
}

Outcome table_integrity() {
  Outcome o;
  const int cases[][2] = {{0, 0}, {1, 0}, {0, 1}, {3, -2}};
  for (const auto& qr : cases) {
    TableReport rep = check_table(s2xs3_table(qr[0], qr[1]));
    o.require(rep.passed(), "check_table fails at (" + std::to_string(qr[0]) + "," + std::to_string(qr[1]) + ")");
    o.require(rep.generators.size() == 7, "expected 7 generators");
  }
  return o;
}

Outcome classification() {
  Outcome o;
  auto m = classify_example({0, 1, 2, -1});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      auto want = i == j ? ObstructionResult::Verdict::Exists : ObstructionResult::Verdict::Obstructed;
      o.require(m[i][j].verdict == want, "unexpected verdict at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  // q = 1 against q = 0
  const auto& tr = m[1][0].trace;
  auto found = [&](const std::string& s) {
    return std::any_of(tr.begin(), tr.end(), [&](const std::string& l) { return l.find(s) != std::string::npos; });
  };
  o.require(found("ψ(u)[u] = 1"), "trace lacks α₁ = 1");
  o.require(found("constraint: q − r = 0"), "trace lacks the constraint q − r = 0");
  o.require(!tr.empty() && tr.back().find("q = r required") != std::string::npos, "trace does not end in q = r");
  return o;
}

Outcome configuration_betti() {
  Outcome o;
  for (const auto& name : kPresets) {
    auto pd = preset_pd(name);
    std::size_t len = 2 * pd->n() + 1;
    auto q = betti(*quotient_by_diagonal(*pd).quotient.algebra, len);
    auto c = betti(*cone_model(*pd).algebra, len);
    o.require(q == c, name + ": A⊗A/(Δ) and C(Δ!) differ");
    if (name.size() == 2 && name[0] == 's') {
      std::vector<std::size_t> sphere(len, 0);
      sphere[0] = sphere[pd->n()] = 1;
      o.require(q == sphere, name + ": not the Betti numbers of the sphere");
    }
  }
  return o;
}

Outcome twisted_family() {
  Outcome o;
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& name : kOdd) {
    auto pd = preset_pd(name);
    auto basis = xi_cocycle_basis(*pd);
    for (int trial = 0; trial < 10; ++trial) {
      SparseVec xi;
      for (const auto& z : basis) add_scaled(xi, Scalar(coeff(rng)), z);
      TwistedModel m = build_cxi(*pd, xi);
      o.require(check_cdga(*m.algebra).passed() && m.inclusion_check.ok, name + ": C(ξ) fails the axioms");
    }
  }
  for (const auto& name : kEven) {
    auto pd = preset_pd(name);
    const DGAlgebra& aa = *pd->square().algebra;
    auto slots = aa.basis().in_degree(2 * pd->n() - 2);
    // (S⁴⊗S⁴)^6 = 0, so any nonzero ξ there is already of the wrong degree
    SparseVec xi{{slots.empty() ? pd->square().at(pd->algebra()->unit(), pd->algebra()->unit()) : slots[0], Scalar(1)}};
    bool rejected = false;
    try {
      build_cxi(*pd, xi);
    } catch (const PreconditionError&) {
      rejected = true;
    }
    o.require(rejected, name + ": nonzero ξ accepted");
  }
  return o;
}

Outcome phi_iso() {
  Outcome o;
  for (const char* name : {"s2xs3", "s3xs4"}) {
    PhiMap f = phi(*preset_pd(name));
    o.require(f.source_basis.size() == f.target_basis.size(), std::string(name) + ": Φ not square");
    o.require(f.bijective(), std::string(name) + ": Φ not invertible");
  }
  auto p = preset_pd("s2xs3");
  PhiMap f = phi(*p);
  o.require(f.source_basis.size() == 1 && f.target_basis.size() == 1, "s2xs3: dimensions are not 1");
  if (f.images.size() == 1) {
    SparseVec diff = f.images[0];
    add_scaled(diff, Scalar(-1), parse_element("y⊗xy", *p->square().algebra));
    o.require(format_element(f.source_basis[0], *p->algebra()) == "y", "source basis is not [y]");
    o.require(f.relations.contains(diff), "Φ([y]) ≠ [[y⊗xy]]");
  }
  if (o.ok) o.note = "s2xs3 1×1, s3xs4 " + std::to_string(phi(*preset_pd("s3xs4")).matrix.size()) + "×" +
                     std::to_string(phi(*preset_pd("s3xs4")).source_basis.size());
  return o;
}

Outcome equivalence() {
  Outcome o;
  for (const auto& name : kOdd) {
    EquivalenceIdeal e = equivalence_ideal(*preset_pd(name));
    o.require(e.check.ok(), name + ": I is not a differential ideal");
    o.require(e.check.acyclic, name + ": H*(I) ≠ 0");
  }
  auto p = preset_pd("s2xs3");
  const DGAlgebra& aa = *p->square().algebra;
  SparseVec xi = parse_element("y⊗xy", aa), xi2 = parse_element("−xy⊗y", aa);
  XiDecision d = decide_xi_equivalence(*p, xi, xi2);
  o.require(d.equivalent && d.congruent_mod_ideal && d.quotients_identical, "y⊗xy and −xy⊗y not shown equivalent");
  SparseVec diff = xi;
  add_scaled(diff, Scalar(-1), xi2);
  o.require(aa.multiply(parse_element("y⊗1", aa), p->diagonal()) == diff, "ξ − ξ' ≠ (y⊗1)·Δ");
  SparseVec recon = aa.multiply(d.r, p->diagonal());
  add_scaled(recon, Scalar(1), aa.apply_d(d.b));
  o.require(recon == diff, "witness does not reproduce ξ − ξ'");
  return o;
}

Outcome products() {
  Outcome o;
  CorrespondenceReport r = diagonal_correspondence(*preset_pd("s2"), *preset_pd("s3"));
  o.require(r.sign == 1 || r.sign == -1, "no sign relates σ(Δ⊗Δ) and Δ_A");
  o.require(r.sigma_of_diagonals == scaled(r.product.pd->diagonal(), r.sign), "σ(Δ⊗Δ) ≠ sign·Δ_A");
  o.require(r.ok(), "S²×S³ correspondence fails");
  CorrespondenceReport s = diagonal_correspondence(*preset_pd("s3"), *preset_pd("s3"));
  o.require(s.betti_agree && s.ok(), "S³×S³ correspondence fails");
  o.note = o.ok ? "sign " + std::to_string(r.sign) : o.note;
  return o;
}

Outcome even_models() {
  Outcome o;
  for (const auto& name : kEven) {
    auto pd = preset_pd(name);
    EvenModel m = even_model(*pd);
    o.require(m.ideal.ok() && m.ideal.acyclic, name + ": I is not an acyclic differential ideal");
    o.require(check_cdga(*m.cone.algebra).passed(), name + ": C(Δ!) fails the axioms");
    std::size_t len = 2 * pd->n() + 1;
    o.require(betti(*m.quotient.algebra, len) == betti(*m.cone.algebra, len), name + ": H*(C/I) ≠ H*(C)");
  }
  return o;
}

Outcome signs() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& name : kPresets) {
    auto pd = preset_pd(name);
    MappingCone c = cone_model(*pd);
    const DGAlgebra& a = *c.algebra;
    const DGAlgebra& r = *c.ring;
    const DGModule& b = *c.map.source;
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t ri = c.base_index[i], sj = c.suspended_index[j];
        SparseVec direct = scaled(c.suspend(b.action[i][j]), koszul(static_cast<long long>(b.degrees[j]) * r.degree(i)));
        // from r·sb and graded commutativity, |sb| = |b| − 1
        SparseVec derived = scaled(a.multiply_basis(ri, sj), koszul(static_cast<long long>(b.degrees[j] - 1) * r.degree(i)));
        o.require(a.multiply_basis(sj, ri) == direct && direct == derived, name + ": rule (iii) disagrees");
        ++pairs;
      }
    DGModule derived = desuspended_module(*pd);
    DGModule expl = desuspended_module_explicit(*pd);
    o.require(check_module(expl).ok, name + ": explicit action not associative");
    o.require(expl.action == derived.action, name + ": explicit exponent disagrees with the derived action");
  }
  if (o.ok) o.note = std::to_string(pairs) + " pairs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double bound;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "S²×S³ diagonal and δ-table", 1, diagonal_table},
      {2, "Sullivan table integrity", 5, table_integrity},
      {3, "classification at desk scale", 10, classification},
      {4, "Betti(A⊗A/(Δ)) = Betti(C(Δ!))", 0, configuration_betti},
      {5, "twisted family well-defined", 0, twisted_family},
      {6, "Φ isomorphism", 0, phi_iso},
      {7, "equivalence ideal", 0, equivalence},
      {8, "product correspondence", 0, products},
      {9, "even-dimensional model", 0, even_models},
      {10, "sign-convention self-consistency", 0, signs},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.bound > 0 && secs >= c.bound) o.require(false, "over the time bound");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing;
    if (c.bound > 0) std::cout << ", bound " << c.bound << " s";
    std::cout << ")";
    if (!o.note.empty()) std::cout << " " << o.note;
    std::cout << "\n";
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
