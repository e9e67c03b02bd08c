#include "cdga/free_algebra.hpp"

#include "cdga/errors.hpp"

namespace cdga {

using Elem = FreeExtension::Elem;
using Term = FreeExtension::Term;

void add_to(Elem& target, const Poly& factor, const Elem& source) {
  for (const auto& [t, c] : source) {
    Poly v = factor * c;
    if (v.is_zero()) continue;
    auto [it, inserted] = target.try_emplace(t, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

Elem scaled(const Elem& x, const Poly& factor) {
  Elem out;
  add_to(out, factor, x);
  return out;
}

Elem map_coefficients(const Elem& x, const std::function<Poly(const Poly&)>& f) {
  Elem out;
  for (const auto& [t, c] : x) {
    Poly v = f(c);
    if (!v.is_zero()) out.emplace(t, std::move(v));
  }
  return out;
}

FreeExtension::FreeExtension(AlgebraPtr base, std::vector<FreeGenerator> generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].degree < 1) throw StructureError("generator " + generators_[i].label + " must have positive degree");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].label == generators_[i].label) throw StructureError("duplicate generator " + generators_[i].label);
    if (base_->basis().find(generators_[i].label))
      throw StructureError("generator " + generators_[i].label + " clashes with a base label");
  }
}

std::size_t FreeExtension::generator_index(const std::string& label) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].label == label) return i;
  throw StructureError("unknown generator \"" + label + "\"");
}

int FreeExtension::monomial_degree(const std::vector<unsigned>& exponents) const {
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += static_cast<int>(exponents[i]) * generators_[i].degree;
  return d;
}

Elem FreeExtension::generator(std::size_t g) const {
  std::vector<unsigned> e(generators_.size(), 0);
  e.at(g) = 1;
  return monomial(e);
}

Elem FreeExtension::monomial(const std::vector<unsigned>& exponents) const {
  if (exponents.size() != generators_.size()) throw StructureError("monomial has the wrong number of exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (generators_[i].degree % 2 != 0 && exponents[i] > 1) return {};
  return Elem{{Term{exponents, base_->unit()}, Poly(1)}};
}

Elem FreeExtension::base_element(const SparseVec& r) const {
  Elem out;
  std::vector<unsigned> none(generators_.size(), 0);
  for (const auto& [i, c] : r) out.emplace(Term{none, i}, Poly(c));
  return out;
}

Elem FreeExtension::multiply(const Elem& a, const Elem& b) const {
  Elem out;
  const std::size_t ng = generators_.size();
  for (const auto& [t1, c1] : a)
    for (const auto& [t2, c2] : b) {
      long long e = static_cast<long long>(base_->degree(t1.base)) * monomial_degree(t2.exponents);
      std::vector<unsigned> m(ng);
      bool vanishes = false;
      long long swaps = 0;
      for (std::size_t i = 0; i < ng && !vanishes; ++i) {
        m[i] = t1.exponents[i] + t2.exponents[i];
        bool odd = generators_[i].degree % 2 != 0;
        if (odd && m[i] > 1) vanishes = true;
        // Odd generators of t2 with smaller index move past odd ones of t1.
        if (odd && t1.exponents[i] == 1)
          for (std::size_t j = 0; j < i; ++j)
            if (generators_[j].degree % 2 != 0 && t2.exponents[j] == 1) ++swaps;
      }
      if (vanishes) continue;
      Poly c = c1 * c2 * Poly(koszul(e + swaps));
      for (const auto& [k, x] : base_->multiply_basis(t1.base, t2.base)) {
        Elem piece{{Term{m, k}, Poly(x)}};
        add_to(out, c, piece);
      }
    }
  return out;
}

Elem FreeExtension::derivation(const Elem& x, const std::vector<Elem>& on_generators) const {
  if (on_generators.size() != generators_.size()) throw StructureError("derivation needs one image per generator");
  std::map<std::vector<unsigned>, Elem> memo;
  std::function<Elem(const std::vector<unsigned>&)> d_monomial = [&](const std::vector<unsigned>& m) -> Elem {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::size_t g = 0;
    while (g < m.size() && m[g] == 0) ++g;
    Elem result;
    if (g < m.size()) {
      std::vector<unsigned> rest = m;
      --rest[g];
      // m = g·rest with no reordering since g has the smallest index.
      add_to(result, 1, multiply(on_generators[g], monomial(rest)));
      add_to(result, koszul(generators_[g].degree), multiply(generator(g), d_monomial(rest)));
    }
    memo.emplace(m, result);
    return result;
  };

  Elem out;
  for (const auto& [t, c] : x) {
    Elem r = base_element(SparseVec{{t.base, Scalar(1)}});
    add_to(out, c, multiply(d_monomial(t.exponents), r));
    add_to(out, c * Poly(koszul(monomial_degree(t.exponents))),
           multiply(monomial(t.exponents), base_element(base_->d(t.base))));
  }
  return out;
}

std::vector<Term> FreeExtension::terms_of_degree(int degree) const {
  std::vector<Term> out;
  std::vector<unsigned> e(generators_.size(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int used) {
    if (i == generators_.size()) {
      for (std::size_t k : base_->basis().in_degree(degree - used)) out.push_back(Term{e, k});
      return;
    }
    const int gd = generators_[i].degree;
    const unsigned max_e = gd % 2 != 0 ? 1u : static_cast<unsigned>((degree - used) / gd);
    for (unsigned k = 0; k <= max_e && used + static_cast<int>(k) * gd <= degree; ++k) {
      e[i] = k;
      walk(i + 1, used + static_cast<int>(k) * gd);
    }
    e[i] = 0;
  };
  walk(0, 0);
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    // Generator-heavy terms first, then by generator order, then by base index.
    int da = monomial_degree(a.exponents), db = monomial_degree(b.exponents);
    if (da != db) return da > db;
    if (a.exponents != b.exponents) return a.exponents > b.exponents;
    return a.base < b.base;
  });
  return out;
}

std::string FreeExtension::format_term(const Term& t) const {
  std::string m;
  for (std::size_t i = 0; i < t.exponents.size(); ++i) {
    if (t.exponents[i] == 0) continue;
    if (!m.empty()) m += "·";
    m += generators_[i].label;
    if (t.exponents[i] > 1) m += "^" + std::to_string(t.exponents[i]);
  }
  if (m.empty()) return base_->label(t.base);
  if (t.base == base_->unit()) return m;
  return m + "(" + base_->label(t.base) + ")";
}

std::string FreeExtension::format(const Elem& x) const {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : x) {
    std::string term = format_term(t);
    if (c.is_constant()) {
      Scalar v = c.constant();
      Scalar mag = abs(v);
      s += first ? (v < 0 ? "−" : "") : (v < 0 ? " − " : " + ");
      s += mag == 1 ? term : format_scalar(mag) + "*" + (term.find("⊗") != std::string::npos && t.exponents == std::vector<unsigned>(t.exponents.size(), 0) ? "(" + term + ")" : term);
    } else {
      s += first ? "" : " + ";
      s += "(" + c.str() + ")*" + (term.find("⊗") != std::string::npos ? "(" + term + ")" : term);
    }
    first = false;
  }
  return s;
}

}  // namespace cdga
