#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cdga/cone.hpp"
#include "cdga/errors.hpp"
#include "cdga/expression.hpp"
#include "cdga/poincare.hpp"
#include "cdga/presets.hpp"
#include "oracle.hpp"

using namespace cdga;

namespace {

std::set<int> degenerate_degrees(const PdCheck& c) {
  std::set<int> out;
  for (const auto& f : c.failures)
    if (f.kind == PdFailure::Kind::Degenerate) out.insert(f.degree);
  return out;
}

bool has_kind(const PdCheck& c, PdFailure::Kind k) {
  for (const auto& f : c.failures)
    if (f.kind == k) return true;
  return false;
}

Scalar eps_of(const PDAlgebra& pd, const SparseVec& v) { return pd.eps(v); }

const std::vector<std::string> kPdPresets{"point", "s2", "s3", "s4", "s5", "cp2", "s2xs3", "s3xs4"};

}  // namespace

TEST_CASE("presets are Poincaré duality algebras") {
  for (const auto& name : kPdPresets) {
    CAPTURE(name);
    PresetData p = preset(name);
    PdCheck c = check_pd(p.algebra, p.formal_dimension, p.orientation);
    CHECK(c.ok());
    REQUIRE(c.pd);
    CHECK(c.pd->n() == p.formal_dimension);
    CHECK(eps_of(*c.pd, c.pd->omega()) == 1);
  }
}

TEST_CASE("orientation not closed") {
  AlgebraBuilder b("open", AlgebraBuilder::Order::Label);
  auto one = b.add_basis("1", 0), p = b.add_basis("p", 2), q = b.add_basis("q", 3);
  b.set_unit(one);
  b.set_differential(p, SparseVec{{q, Scalar(1)}});
  AlgebraPtr a = b.build();
  REQUIRE(check_cdga(*a).passed());
  PdCheck c = check_pd(a, 3, SparseVec{{a->index_of("q"), Scalar(1)}});
  CHECK_FALSE(c.ok());
  CHECK_FALSE(c.pd);
  REQUIRE(has_kind(c, PdFailure::Kind::OrientationNotClosed));
  for (const auto& f : c.failures)
    if (f.kind == PdFailure::Kind::OrientationNotClosed) {
      CHECK(f.degree == 2);
      CHECK(f.witness == SparseVec{{a->index_of("p"), Scalar(1)}});
    }
  CHECK_THROWS_AS(make_pd(a, 3, SparseVec{{a->index_of("q"), Scalar(1)}}), PdError);
  CHECK(to_string(PdFailure::Kind::OrientationNotClosed) == "OrientationNotClosed");
}

TEST_CASE("S2 x S3 without xy is degenerate") {
  AlgebraBuilder b("trunc", AlgebraBuilder::Order::Label);
  auto one = b.add_basis("1", 0);
  b.add_basis("x", 2);
  b.add_basis("y", 3);
  b.set_unit(one);
  AlgebraPtr a = b.build();
  PdCheck c = check_pd(a, 5, {});
  CHECK_FALSE(c.ok());
  auto degs = degenerate_degrees(c);
  CHECK(degs.count(2) == 1);
  // every reported witness is nonzero and pairs to zero with the complementary degree
  for (const auto& f : c.failures) {
    if (f.kind != PdFailure::Kind::Degenerate) continue;
    CHECK_FALSE(f.witness.empty());
    for (std::size_t j : a->basis().in_degree(5 - f.degree)) CHECK(a->multiply(f.witness, SparseVec{{j, 1}}).empty());
  }
  CHECK(degs == std::set<int>{0, 2, 3});
}

TEST_CASE("degenerate pairing with a square block") {
  // x, z in degree 2 with x·z = ω, x·x = z·z = 0 is fine; drop x·z and make x·x = ω: z pairs with nothing.
  AlgebraBuilder b("sq", AlgebraBuilder::Order::Label);
  auto one = b.add_basis("1", 0), x = b.add_basis("x", 2), z = b.add_basis("z", 2), w = b.add_basis("w", 4);
  b.set_unit(one);
  b.set_product(x, x, SparseVec{{w, Scalar(1)}});
  (void)z;
  AlgebraPtr a = b.build();
  PdCheck c = check_pd(a, 4, SparseVec{{a->index_of("w"), Scalar(1)}});
  CHECK(degenerate_degrees(c) == std::set<int>{2});
  for (const auto& f : c.failures) CHECK(f.witness == SparseVec{{a->index_of("z"), Scalar(1)}});
}

TEST_CASE("orientation outside the top degree") {
  PresetData p = preset("s2");
  PdCheck c = check_pd(p.algebra, 2, SparseVec{{p.algebra->unit(), Scalar(1)}});
  CHECK(has_kind(c, PdFailure::Kind::BadOrientation));
}

TEST_CASE("dual bases") {
  auto s2 = preset_pd("s2");
  const DGAlgebra& a2 = *s2->algebra();
  CHECK(format_element(s2->dual(a2.index_of("1")), a2) == "x");
  CHECK(format_element(s2->dual(a2.index_of("x")), a2) == "1");
  auto s3 = preset_pd("s3");
  CHECK(format_element(s3->dual(0), *s3->algebra()) == "y");
  CHECK(format_element(s3->dual(1), *s3->algebra()) == "1");
  auto p = preset_pd("s2xs3");
  const DGAlgebra& a = *p->algebra();
  CHECK(format_element(p->dual(a.index_of("1")), a) == "xy");
  CHECK(format_element(p->dual(a.index_of("x")), a) == "y");
  CHECK(format_element(p->dual(a.index_of("y")), a) == "x");
  CHECK(format_element(p->dual(a.index_of("xy")), a) == "1");

  // δ_ij table against the oracle on every preset
  for (const auto& name : kPdPresets) {
    CAPTURE(name);
    auto pd = preset_pd(name);
    const DGAlgebra& alg = *pd->algebra();
    auto expect = oracle::dual_basis(alg, pd->epsilon());
    REQUIRE(expect.size() == alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      CHECK(pd->dual(i) == expect[i]);
      for (std::size_t j = 0; j < alg.dim(); ++j)
        CHECK(pd->eps(alg.multiply(SparseVec{{i, Scalar(1)}}, pd->dual(j))) == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("diagonal class") {
  auto p = preset_pd("s2xs3");
  CHECK(format_element(p->diagonal(), *p->square().algebra) == "1⊗xy + x⊗y − y⊗x − xy⊗1");
  auto s3 = preset_pd("s3");
  CHECK(format_element(s3->diagonal(), *s3->square().algebra) == "1⊗y − y⊗1");
  auto s2 = preset_pd("s2");
  CHECK(format_element(s2->diagonal(), *s2->square().algebra) == "1⊗x + x⊗1");

  for (const auto& name : kPdPresets) {
    CAPTURE(name);
    auto pd = preset_pd(name);
    const TensorAlgebra& t = pd->square();
    const DGAlgebra& aa = *t.algebra;
    auto duals = oracle::dual_basis(*pd->algebra(), pd->epsilon());
    CHECK(pd->diagonal() == oracle::diagonal(t, duals));
    // cocycle
    CHECK(aa.apply_d(pd->diagonal()).empty());
    // twist symmetry τ(Δ) = (−1)^n Δ
    CHECK(twist(t, pd->diagonal()) == scaled(pd->diagonal(), koszul(pd->n())));
    // (a⊗1)Δ = (1⊗a)Δ for every a
    for (std::size_t i = 0; i < pd->algebra()->dim(); ++i) {
      SparseVec ai{{i, Scalar(1)}};
      CHECK(aa.multiply(t.left_inclusion(ai), pd->diagonal()) == aa.multiply(t.right_inclusion(ai), pd->diagonal()));
    }
  }
}

TEST_CASE("a ↦ (a⊗1)Δ is injective, and equals a⊗ω + ω⊗a in degree n−2") {
  for (const auto& name : kPdPresets) {
    CAPTURE(name);
    auto pd = preset_pd(name);
    const TensorAlgebra& t = pd->square();
    const DGAlgebra& aa = *t.algebra;
    const DGAlgebra& a = *pd->algebra();
    oracle::Mat images;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      SparseVec img = aa.multiply(t.left_inclusion(SparseVec{{i, Scalar(1)}}), pd->diagonal());
      std::vector<oracle::Q> row(aa.dim());
      for (const auto& [k, c] : img) row[k] = c;
      images.push_back(row);
    }
    CHECK(oracle::rank(images) == a.dim());
    for (std::size_t i : a.basis().in_degree(pd->n() - 2)) {
      SparseVec ai{{i, Scalar(1)}};
      SparseVec expect = t.pure(ai, pd->omega());
      add_scaled(expect, Scalar(1), t.pure(pd->omega(), ai));
      CHECK(aa.multiply(t.left_inclusion(ai), pd->diagonal()) == expect);
    }
  }
}

TEST_CASE("Δ does not depend on the basis") {
  std::mt19937_64 rng(31337);
  for (const auto& name : kPdPresets) {
    CAPTURE(name);
    auto pd = preset_pd(name);
    const DGAlgebra& a = *pd->algebra();
    for (int trial = 0; trial < 3; ++trial) {
      auto rows = oracle::random_basis_change(a, rng);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back("e" + std::to_string(i));
      BasisChange ch = change_basis(a, rows, labels);
      SparseVec eps_new;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Scalar v = pd->eps(ch.to_old(SparseVec{{i, Scalar(1)}}));
        if (v != 0) eps_new[i] = v;
      }
      auto pd2 = make_pd(ch.algebra, pd->n(), eps_new);
      const TensorAlgebra& t2 = pd2->square();
      SparseVec back;
      for (const auto& [k, c] : pd2->diagonal()) {
        auto [i, j] = t2.factors[k];
        add_scaled(back, c, pd->square().pure(ch.to_old(SparseVec{{i, Scalar(1)}}), ch.to_old(SparseVec{{j, Scalar(1)}})));
      }
      CHECK(back == pd->diagonal());
    }
  }
}

TEST_CASE("shriek map") {
  auto pd = preset_pd("s2xs3");
  ModuleMap f = shriek_map(*pd);
  CHECK(verify_module_map(f).ok);
  const DGAlgebra& aa = *pd->square().algebra;
  const DGAlgebra& a = *pd->algebra();
  CHECK(format_element(f.columns.at(a.index_of("x")), aa) == "x⊗xy − xy⊗x");
  CHECK(format_element(f.columns.at(a.index_of("xy")), aa) == "−xy⊗xy");
  for (const auto& name : kPdPresets) {
    auto p = preset_pd(name);
    ModuleMap g = shriek_map(*p);
    CHECK(g.columns.at(p->algebra()->unit()) == p->diagonal());
    CHECK(verify_module_map(g).ok);
  }
}
