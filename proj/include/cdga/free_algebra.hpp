// Degree-bounded free extensions R⊗Λ(Z) of a CDGA by graded generators,
// with polynomial coefficients.
#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cdga/algebra.hpp"
#include "cdga/poly.hpp"

namespace cdga {

struct FreeGenerator {
  std::string label;
  int degree = 1;
};

/// Elements are sums of terms m·r: a generator monomial m (exponents in
/// generator order; odd generators at most once) on the left, a basis
/// element r of the base on the right. Products follow
/// (m r)(m' r') = (-1)^{|r||m'|} (m m')(r r'), with the Koszul sign of
/// reordering odd generators.
class FreeExtension {
 public:
  struct Term {
    std::vector<unsigned> exponents;
    std::size_t base = 0;
    auto operator<=>(const Term&) const = default;
  };
  using Elem = std::map<Term, Poly>;

  FreeExtension(AlgebraPtr base, std::vector<FreeGenerator> generators);

  const AlgebraPtr& base() const { return base_; }
  const std::vector<FreeGenerator>& generators() const { return generators_; }
  std::size_t generator_index(const std::string& label) const;

  int monomial_degree(const std::vector<unsigned>& exponents) const;
  int degree(const Term& t) const { return monomial_degree(t.exponents) + base_->degree(t.base); }

  Elem generator(std::size_t g) const;
  Elem base_element(const SparseVec& r) const;
  Elem monomial(const std::vector<unsigned>& exponents) const;
  Elem multiply(const Elem& a, const Elem& b) const;

  /// The derivation extending d on the base and the given generator images.
  Elem derivation(const Elem& x, const std::vector<Elem>& on_generators) const;

  /// Every term of exactly the given degree.
  std::vector<Term> terms_of_degree(int degree) const;

  std::string format_term(const Term& t) const;
  std::string format(const Elem& x) const;

 private:
  AlgebraPtr base_;
  std::vector<FreeGenerator> generators_;
};

void add_to(FreeExtension::Elem& target, const Poly& factor, const FreeExtension::Elem& source);
FreeExtension::Elem scaled(const FreeExtension::Elem& x, const Poly& factor);
/// Applies f to every coefficient, dropping terms that become zero.
FreeExtension::Elem map_coefficients(const FreeExtension::Elem& x, const std::function<Poly(const Poly&)>& f);

}  // namespace cdga
