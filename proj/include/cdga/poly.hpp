// Multivariate polynomials with rational coefficients over named variables.
// Used for table parameters (q, r) and the unknown coefficients of ψ.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cdga/rational.hpp"

namespace cdga {

class Poly {
 public:
  /// Sorted (variable, exponent) pairs with positive exponents.
  using Monomial = std::vector<std::pair<std::string, unsigned>>;

  Poly() = default;
  Poly(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)
  static Poly variable(const std::string& name);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the whole value when is_constant()).
  Scalar constant() const;
  std::set<std::string> variables() const;
  bool contains(const std::string& name) const;

  /// c when every term containing `name` is exactly c·name; nullopt when
  /// `name` occurs non-linearly or with a non-constant coefficient, or not at all.
  std::optional<Scalar> linear_coefficient(const std::string& name) const;
  /// Terms free of `name`.
  Poly without(const std::string& name) const;

  Poly substitute(const std::string& name, const Poly& value) const;
  Poly substitute(const std::map<std::string, Poly>& values) const;
  /// Substitutes the given values; other variables stay symbolic.
  Poly evaluate(const std::map<std::string, Scalar>& values) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// "q − r", "2*ψ(u)[x⊗x]", "(−1/2)*a·b^2"; zero prints "0".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  std::map<Monomial, Scalar> terms_;
};

std::string format_monomial(const Poly::Monomial& m);

}  // namespace cdga
