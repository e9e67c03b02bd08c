#include "cdga/poly.hpp"

#include <algorithm>

namespace cdga {

Poly::Poly(const Scalar& constant) {
  if (constant != 0) terms_[{}] = constant;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.terms_[{{name, 1u}}] = 1;
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar Poly::constant() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [v, e] : m) {
      (void)e;
      out.insert(v);
    }
  }
  return out;
}

bool Poly::contains(const std::string& name) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [v, e] : m) {
      (void)e;
      if (v == name) return true;
    }
  }
  return false;
}

std::optional<Scalar> Poly::linear_coefficient(const std::string& name) const {
  std::optional<Scalar> coeff;
  for (const auto& [m, c] : terms_) {
    bool has = std::any_of(m.begin(), m.end(), [&](const auto& ve) { return ve.first == name; });
    if (!has) continue;
    if (m.size() != 1 || m.front().second != 1) return std::nullopt;
    coeff = c;
  }
  return coeff;
}

Poly Poly::without(const std::string& name) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (std::none_of(m.begin(), m.end(), [&](const auto& ve) { return ve.first == name; })) out.terms_[m] = c;
  return out;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {
Poly::Monomial multiply_monomials(const Poly::Monomial& a, const Poly::Monomial& b) {
  std::map<std::string, unsigned> e;
  for (const auto& [v, k] : a) e[v] += k;
  for (const auto& [v, k] : b) e[v] += k;
  return {e.begin(), e.end()};
}

Poly power(const Poly& p, unsigned k) {
  Poly out(1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}
}  // namespace

Poly Poly::substitute(const std::string& name, const Poly& value) const {
  return substitute(std::map<std::string, Poly>{{name, value}});
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    Monomial rest;
    for (const auto& [v, k] : m) {
      auto it = values.find(v);
      if (it == values.end())
        rest.emplace_back(v, k);
      else
        term = term * power(it->second, k);
    }
    Poly r;
    r.terms_[rest] = 1;
    out += term * r;
  }
  return out;
}

Poly Poly::evaluate(const std::map<std::string, Scalar>& values) const {
  std::map<std::string, Poly> p;
  for (const auto& [k, v] : values) p.emplace(k, Poly(v));
  return substitute(p);
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(multiply_monomials(m, m2), c * c2);
  return out;
}

std::string format_monomial(const Poly::Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += "·";
    s += m[i].first;
    if (m[i].second > 1) s += "^" + std::to_string(m[i].second);
  }
  return s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Constant last reads more naturally: "ψ(u)[u] − 1".
  std::vector<std::pair<Monomial, Scalar>> ordered;
  for (const auto& t : terms_)
    if (!t.first.empty()) ordered.push_back(t);
  if (terms_.count({})) ordered.emplace_back(Monomial{}, terms_.at({}));
  for (const auto& [m, c] : ordered) {
    Scalar mag = abs(c);
    if (first)
      s += c < 0 ? "−" : "";
    else
      s += c < 0 ? " − " : " + ";
    first = false;
    if (m.empty()) {
      s += format_scalar(mag);
    } else {
      if (mag != 1) s += format_scalar(mag) + "*";
      s += format_monomial(m);
    }
  }
  return s;
}

}  // namespace cdga
