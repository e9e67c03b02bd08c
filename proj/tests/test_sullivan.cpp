#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cdga/errors.hpp"
#include "cdga/obstruction.hpp"
#include "cdga/presets.hpp"
#include "cdga/sullivan_table.hpp"

using namespace cdga;
using Elem = FreeExtension::Elem;
using Verdict = ObstructionResult::Verdict;

namespace {

Elem numeric(const Elem& x, const std::map<std::string, Scalar>& values) {
  return map_coefficients(x, [&](const Poly& p) { return p.evaluate(values); });
}

// ψ on generators rebuilt from a solver assignment.
std::vector<Elem> psi_from_assignment(const FreeExtension& f, const ObstructionResult& r) {
  std::vector<Elem> out(f.generators().size());
  for (std::size_t g = 0; g < out.size(); ++g)
    for (const auto& t : f.terms_of_degree(f.generators()[g].degree)) {
      auto it = r.assignment.find(unknown_name(f, g, t));
      REQUIRE(it != r.assignment.end());
      if (it->second != 0) out[g][t] = Poly(it->second);
    }
  return out;
}

// Multiplicative extension of ψ, identity on the base.
Elem apply_psi(const FreeExtension& f, const std::vector<Elem>& psi, const Elem& x) {
  Elem out;
  for (const auto& [t, c] : x) {
    Elem acc = f.monomial(std::vector<unsigned>(f.generators().size(), 0));
    for (std::size_t g = 0; g < t.exponents.size(); ++g)
      for (unsigned e = 0; e < t.exponents[g]; ++e) acc = f.multiply(acc, psi[g]);
    acc = f.multiply(acc, f.base_element(SparseVec{{t.base, Scalar(1)}}));
    add_to(out, c, acc);
  }
  return out;
}

bool commutes(const GeneratorTable& t1, const GeneratorTable& t2, const ObstructionResult& r) {
  const FreeExtension& f = *t1.free;
  auto psi = psi_from_assignment(f, r);
  std::vector<Elem> d1, d2;
  for (const auto& d : t1.differential) d1.push_back(numeric(d, t1.parameter_values()));
  for (const auto& d : t2.differential) d2.push_back(numeric(d, t2.parameter_values()));
  for (std::size_t g = 0; g < psi.size(); ++g) {
    Elem lhs = apply_psi(f, psi, d1[g]);
    Elem rhs = f.derivation(psi[g], d2);
    if (lhs != rhs) return false;
  }
  return true;
}

Scalar alpha1(const ObstructionResult& r, const FreeExtension& f) {
  std::vector<unsigned> e(f.generators().size(), 0);
  e[f.generator_index("u")] = 1;
  auto it = r.solved.find(unknown_name(f, f.generator_index("u"), FreeExtension::Term{e, f.base()->unit()}));
  REQUIRE(it != r.solved.end());
  REQUIRE(it->second.is_constant());
  return it->second.constant();
}

}  // namespace

TEST_CASE("polynomials") {
  Poly q = Poly::variable("q"), r = Poly::variable("r");
  CHECK((q - r).str() == "q − r");
  CHECK(Poly(0).str() == "0");
  CHECK(((q + r) * (q - r)) == q * q - r * r);
  CHECK((q - q).is_zero());
  CHECK(Poly(Scalar(3, 2)).is_constant());
  CHECK((q * 2 + 1).linear_coefficient("q") == Scalar(2));
  CHECK_FALSE((q * q).linear_coefficient("q").has_value());
  CHECK_FALSE((q * r).linear_coefficient("q").has_value());
  CHECK((q * r + 1).without("q") == Poly(1));
  CHECK((q * q + r).substitute("q", r + 1) == r * r + r * 3 + 1);
  Poly v = (q * r + q).evaluate({{"q", Scalar(2)}});
  CHECK(v == r * 2 + 2);
  CHECK((q * r).variables() == std::set<std::string>{"q", "r"});
  CHECK((-(q - r)).str() == "−q + r");
}

TEST_CASE("the S2 x S3 table") {
  GeneratorTable t = s2xs3_table(1, 0);
  const FreeExtension& f = *t.free;
  REQUIRE(f.generators().size() == 7);
  std::vector<int> degs;
  for (const auto& g : f.generators()) degs.push_back(g.degree);
  CHECK(degs == std::vector<int>{4, 5, 6, 6, 7, 7, 7});
  CHECK(t.degree_cap == 8);
  // D(u) = Δ
  CHECK(t.differential[f.generator_index("u")] == f.base_element(t.factor->diagonal()));
  // D² = 0 symbolically in q, r on every generator
  GeneratorTable sym = s2xs3_table(0, 0);
  for (std::size_t g = 0; g < 7; ++g) {
    CAPTURE(f.generators()[g].label);
    CHECK(f.derivation(sym.differential[g], sym.differential).empty());
  }
  // u² is a degree 8 monomial, inside the cap
  std::vector<unsigned> u2(7, 0);
  u2[0] = 2;
  CHECK(f.monomial_degree(u2) == 8);
}

TEST_CASE("check_table") {
  const int cases[][2] = {{0, 0}, {1, 0}, {0, 1}, {3, -2}, {5, 0}, {2, -3}};
  for (const auto& qr : cases) {
    CAPTURE(qr[0]);
    CAPTURE(qr[1]);
    TableReport rep = check_table(s2xs3_table(qr[0], qr[1]));
    CHECK(rep.passed());
    CHECK(rep.generators.size() == 7);
  }
  // fault: D(u) + x⊗x
  GeneratorTable bad = s2xs3_table(1, 0);
  const FreeExtension& f = *bad.free;
  const DGAlgebra& aa = *f.base();
  add_to(bad.differential[0], 1, f.base_element(SparseVec{{aa.index_of("x⊗x"), Scalar(1)}}));
  TableReport rep = check_table(bad);
  CHECK_FALSE(rep.passed());
  REQUIRE(!rep.generators.empty());
  CHECK(rep.generators[0].label == "u");
  CHECK_FALSE(rep.generators[0].chain_map);
  CHECK_FALSE(rep.generators[0].chain_map_witness.empty());

  // empty generator list
  GeneratorTable empty;
  empty.name = "empty";
  empty.factor = preset_pd("s2xs3");
  empty.free = std::make_shared<FreeExtension>(empty.factor->square().algebra, std::vector<FreeGenerator>{});
  CHECK(check_table(empty).passed());
}

TEST_CASE("iso_obstruction") {
  for (int q : {1, 2}) {
    GeneratorTable t = s2xs3_table(q, 0);
    ObstructionResult same = iso_obstruction(t, t);
    CHECK(same.verdict == Verdict::Exists);
    CHECK(commutes(t, t, same));
    CHECK(alpha1(same, *t.free) == 1);
  }
  GeneratorTable a = s2xs3_table(1, 0), b = s2xs3_table(0, 0);
  ObstructionResult ab = iso_obstruction(a, b);
  ObstructionResult ba = iso_obstruction(b, a);
  CHECK(ab.verdict == Verdict::Obstructed);
  CHECK(ba.verdict == Verdict::Obstructed);
  CHECK_FALSE(ab.failed_constraint.empty());
  CHECK(alpha1(ab, *a.free) == 1);

  // verdict symmetry over a grid, with every Exists witness re-verified here
  const std::vector<std::pair<int, int>> grid{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, -1}};
  for (const auto& x : grid)
    for (const auto& y : grid) {
      CAPTURE(x.first);
      CAPTURE(x.second);
      CAPTURE(y.first);
      CAPTURE(y.second);
      GeneratorTable t1 = s2xs3_table(x.first, x.second), t2 = s2xs3_table(y.first, y.second);
      ObstructionResult r12 = iso_obstruction(t1, t2), r21 = iso_obstruction(t2, t1);
      CHECK((r12.verdict == Verdict::Exists) == (r21.verdict == Verdict::Exists));
      if (r12.verdict == Verdict::Exists) CHECK(commutes(t1, t2, r12));
      if (x == y) CHECK(r12.verdict == Verdict::Exists);
    }
}

TEST_CASE("incompatible tables") {
  GeneratorTable a = s2xs3_table(1, 0);
  GeneratorTable b = a;
  b.degree_cap = 9;
  try {
    iso_obstruction(a, b);
    FAIL("expected IncompatibleTables");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "IncompatibleTables");
  }
  GeneratorTable c = a;
  auto gens = a.free->generators();
  gens.pop_back();
  c.free = std::make_shared<FreeExtension>(a.free->base(), gens);
  CHECK_THROWS_AS(iso_obstruction(a, c), PreconditionError);
}

TEST_CASE("classify_example") {
  auto one = classify_example({0});
  REQUIRE(one.size() == 1);
  CHECK(one[0][0].verdict == Verdict::Exists);

  auto two = classify_example({0, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0][0].verdict == Verdict::Exists);
  CHECK(two[1][1].verdict == Verdict::Exists);
  CHECK(two[0][1].verdict == Verdict::Obstructed);
  CHECK(two[1][0].verdict == Verdict::Obstructed);

  auto three = classify_example({1, 2, -1});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK((three[i][j].verdict == Verdict::Exists) == (i == j));

  // the trace of (1,0): α₁ forced to 1, final constraint q = r
  const auto& trace = two[1][0].trace;
  auto has = [&](const std::string& s) {
    return std::any_of(trace.begin(), trace.end(), [&](const std::string& line) { return line.find(s) != std::string::npos; });
  };
  CHECK(has("ψ(u)[u] = 1"));
  CHECK(has("q − r = 0"));
  CHECK(two[1][0].failed_constraint.find("q") != std::string::npos);
}
