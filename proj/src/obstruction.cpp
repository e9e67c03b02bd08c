#include "cdga/obstruction.hpp"

#include <set>

#include "cdga/errors.hpp"

namespace cdga {

using Elem = FreeExtension::Elem;
using Term = FreeExtension::Term;

std::string to_string(ObstructionResult::Verdict v) {
  switch (v) {
    case ObstructionResult::Verdict::Exists: return "Exists";
    case ObstructionResult::Verdict::Obstructed: return "Obstructed";
    case ObstructionResult::Verdict::Unresolved: return "Unresolved";
  }
  return "?";
}

std::string unknown_name(const FreeExtension& f, std::size_t generator, const Term& term) {
  return "ψ(" + f.generators()[generator].label + ")[" + f.format_term(term) + "]";
}

namespace {

bool same_structure(const DGAlgebra& a, const DGAlgebra& b) {
  if (a.basis().labels() != b.basis().labels()) return false;
  std::map<std::string, std::string> id;
  for (const auto& l : a.basis().labels()) id[l] = l;
  return isomorphic_by_labels(a, b, id);
}

/// Writes a parameter-only constraint P = 0 as "lhs = rhs", positive terms left.
std::string as_equality(const Poly& p) {
  Poly lhs, rhs;
  for (const auto& [m, c] : p.terms()) {
    Poly term(c < 0 ? Scalar(-c) : c);
    Poly mono(1);
    for (const auto& [v, e] : m)
      for (unsigned k = 0; k < e; ++k) mono = mono * Poly::variable(v);
    if (c < 0)
      rhs += term * mono;
    else
      lhs += term * mono;
  }
  return lhs.str() + " = " + rhs.str();
}

/// Scales a constraint so its first coefficient is 1.
Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  // Prefer the first non-constant term for the leading coefficient.
  Scalar lead = p.terms().begin()->second;
  for (const auto& [m, c] : p.terms())
    if (!m.empty()) {
      lead = c;
      break;
    }
  return p * Poly(1 / lead);
}

class Solver {
 public:
  Solver(const GeneratorTable& t1, const GeneratorTable& t2) : t1_(t1), t2_(t2), f_(*t1.free) {
    for (const auto& p : t1.parameters) params_[p.name] = p.value;
    for (const auto& p : t2.parameters) params_[p.name] = p.value;
  }

  ObstructionResult run();

 private:
  bool is_unknown(const std::string& v) const { return unknown_id_.count(v) > 0; }
  std::vector<std::string> unknowns_in(const Poly& p) const {
    std::vector<std::string> out;
    for (const auto& v : p.variables())
      if (is_unknown(v)) out.push_back(v);
    return out;
  }
  Poly reduce(const Poly& p) const { return solved_.empty() ? p : p.substitute(solved_); }
  Elem psi(const Elem& x) const;
  /// Processes pending equations until no further pivot is available.
  /// Returns false when a parameter constraint fails.
  bool process();
  std::string params_text(const Poly& p) const;

  const GeneratorTable& t1_;
  const GeneratorTable& t2_;
  const FreeExtension& f_;
  std::map<std::string, Scalar> params_;
  std::map<std::string, std::size_t> unknown_id_;
  std::vector<std::string> unknown_order_;
  std::vector<Elem> psi_gen_;
  std::map<std::string, Poly> solved_;
  std::vector<Poly> pending_;
  ObstructionResult result_;
};

Elem Solver::psi(const Elem& x) const {
  Elem out;
  const std::size_t ng = f_.generators().size();
  for (const auto& [t, c] : x) {
    Elem v = f_.base_element(SparseVec{{t.base, Scalar(1)}});
    for (std::size_t g = ng; g-- > 0;)
      for (unsigned k = 0; k < t.exponents[g]; ++k) v = f_.multiply(psi_gen_[g], v);
    add_to(out, c, v);
  }
  return out;
}

std::string Solver::params_text(const Poly& p) const {
  std::string s;
  for (const auto& v : p.variables()) {
    if (!s.empty()) s += ", ";
    s += v + " = " + format_scalar(params_.at(v));
  }
  return s;
}

bool Solver::process() {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Poly> next;
    for (std::size_t k = 0; k < pending_.size(); ++k) {
      Poly eq = reduce(pending_[k]);
      if (eq.is_zero()) continue;
      auto unknowns = unknowns_in(eq);
      if (unknowns.empty()) {
        Poly c = normalized(eq);
        for (const auto& v : c.variables())
          if (!params_.count(v)) throw StructureError("constraint involves an unknown symbol " + v);
        Poly value = c.evaluate(params_);
        result_.trace.push_back("constraint: " + c.str() + " = 0");
        if (!value.is_zero()) {
          result_.failed_constraint = c.str() + " = 0";
          std::string where = params_text(c);
          result_.trace.push_back(as_equality(c) + " required, but " + (where.empty() ? c.str() : where));
          return false;
        }
        result_.trace.push_back("  holds for " + params_text(c));
        continue;
      }
      std::optional<std::string> pivot;
      Scalar coeff;
      for (const auto& v : unknowns) {
        auto c = eq.linear_coefficient(v);
        if (!c || *c == 0) continue;
        if (!pivot || unknown_id_.at(v) > unknown_id_.at(*pivot)) {
          pivot = v;
          coeff = *c;
        }
      }
      if (!pivot) {
        next.push_back(eq);
        continue;
      }
      Poly value = eq.without(*pivot) * Poly(-1 / coeff);
      for (auto& [name, s] : solved_) s = s.substitute(*pivot, value);
      solved_[*pivot] = value;
      result_.trace.push_back(*pivot + " = " + value.str());
      for (std::size_t rest = k + 1; rest < pending_.size(); ++rest) next.push_back(pending_[rest]);
      progress = true;
      break;
    }
    pending_ = std::move(next);
  }
  return true;
}

ObstructionResult Solver::run() {
  const std::size_t ng = f_.generators().size();
  psi_gen_.resize(ng);
  std::vector<std::vector<std::pair<Term, std::string>>> unknowns(ng);
  for (std::size_t g = 0; g < ng; ++g)
    for (const Term& t : f_.terms_of_degree(f_.generators()[g].degree)) {
      std::string name = unknown_name(f_, g, t);
      unknown_id_[name] = unknown_order_.size();
      unknown_order_.push_back(name);
      unknowns[g].emplace_back(t, name);
      psi_gen_[g].emplace(t, Poly::variable(name));
    }

  std::vector<std::size_t> order(ng);
  for (std::size_t g = 0; g < ng; ++g) order[g] = g;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return f_.generators()[a].degree < f_.generators()[b].degree;
  });

  auto leading = [&](std::size_t g) {
    std::vector<unsigned> e(ng, 0);
    e[g] = 1;
    return unknown_name(f_, g, Term{e, f_.base()->unit()});
  };

  for (std::size_t g : order) {
    const auto& gen = f_.generators()[g];
    result_.trace.push_back("stage " + gen.label + " (degree " + std::to_string(gen.degree) + "): " +
                            std::to_string(unknowns[g].size()) + " unknowns");
    Elem lhs = psi(t1_.differential[g]);
    Elem rhs = f_.derivation(psi_gen_[g], t2_.differential);
    add_to(lhs, -1, rhs);
    for (const auto& [t, c] : lhs) {
      (void)t;
      pending_.push_back(c);
    }
    if (!process()) {
      result_.verdict = ObstructionResult::Verdict::Obstructed;
      result_.solved = solved_;
      return result_;
    }
    Poly lead = reduce(Poly::variable(leading(g)));
    if (lead.is_constant() && lead.is_zero()) {
      result_.verdict = ObstructionResult::Verdict::Obstructed;
      result_.failed_constraint = leading(g) + " ≠ 0";
      result_.trace.push_back(leading(g) + " = 0, so ψ cannot be invertible");
      result_.solved = solved_;
      return result_;
    }
  }
  result_.solved = solved_;

  if (!pending_.empty()) {
    result_.verdict = ObstructionResult::Verdict::Unresolved;
    for (const auto& p : pending_) result_.residual.push_back(reduce(p).str() + " = 0");
    result_.trace.push_back("nonlinear residual system left: " + std::to_string(pending_.size()) + " equations");
    return result_;
  }
  for (std::size_t g = 0; g < ng; ++g) {
    Poly lead = reduce(Poly::variable(leading(g)));
    if (!unknowns_in(lead).empty()) {
      result_.verdict = ObstructionResult::Verdict::Unresolved;
      result_.residual.push_back(leading(g) + " = " + lead.str() + " must be nonzero");
      return result_;
    }
  }

  // Exists: free unknowns set to zero, then everything re-verified.
  std::map<std::string, Poly> full;
  for (const auto& name : unknown_order_) {
    Poly v = reduce(Poly::variable(name));
    std::map<std::string, Poly> zero;
    for (const auto& u : unknowns_in(v)) zero[u] = Poly(0);
    v = v.substitute(zero).evaluate(params_);
    if (!v.is_constant()) throw StructureError("unexpected symbol in " + name + " = " + v.str());
    full[name] = v;
    result_.assignment[name] = v.constant();
  }
  for (auto& e : psi_gen_) e = map_coefficients(e, [&](const Poly& p) { return p.substitute(full); });

  auto numeric = [&](const Elem& x) {
    return map_coefficients(x, [&](const Poly& p) { return p.evaluate(params_); });
  };
  std::vector<Elem> d1, d2;
  for (const auto& d : t1_.differential) d1.push_back(numeric(d));
  for (const auto& d : t2_.differential) d2.push_back(numeric(d));
  for (int degree = 0; degree <= t1_.degree_cap; ++degree)
    for (const Term& t : f_.terms_of_degree(degree)) {
      Elem x{{t, Poly(1)}};
      Elem a = psi(f_.derivation(x, d1));
      Elem b = f_.derivation(psi(x), d2);
      if (a != b) throw MathError("solver produced ψ that fails ψD = Dψ on " + f_.format_term(t));
    }
  // Invertibility: the linear part on generators of each degree.
  std::set<int> degrees;
  for (const auto& gen : f_.generators()) degrees.insert(gen.degree);
  for (int deg : degrees) {
    std::vector<std::size_t> gens;
    for (std::size_t g = 0; g < ng; ++g)
      if (f_.generators()[g].degree == deg) gens.push_back(g);
    std::vector<Vector> block(gens.size(), Vector(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        std::vector<unsigned> e(ng, 0);
        e[gens[j]] = 1;
        auto it = psi_gen_[gens[i]].find(Term{e, f_.base()->unit()});
        block[i][j] = it == psi_gen_[gens[i]].end() ? Scalar(0) : it->second.constant();
      }
    if (!invert(block)) {
      result_.verdict = ObstructionResult::Verdict::Unresolved;
      result_.residual.push_back("linear part of ψ in degree " + std::to_string(deg) + " is singular");
      return result_;
    }
  }
  result_.verdict = ObstructionResult::Verdict::Exists;
  result_.trace.push_back("ψ exists; free coefficients set to 0 and ψD = Dψ re-verified up to degree " +
                          std::to_string(t1_.degree_cap));
  return result_;
}

GeneratorTable disambiguate(const GeneratorTable& t1, const GeneratorTable& t2) {
  GeneratorTable out = t2;
  std::set<std::string> taken;
  for (const auto& p : t1.parameters) taken.insert(p.name);
  for (const auto& p : t2.parameters) taken.insert(p.name);
  for (const auto& p : t2.parameters) {
    bool clash = false;
    for (const auto& q : t1.parameters) clash = clash || q.name == p.name;
    if (!clash) continue;
    std::string name = p.name + "'";
    while (taken.count(name)) name += "'";
    taken.insert(name);
    out = rename_parameter(out, p.name, name);
  }
  return out;
}

}  // namespace

ObstructionResult iso_obstruction(const GeneratorTable& t1, const GeneratorTable& t2_in) {
  const FreeExtension& f1 = *t1.free;
  const FreeExtension& f2 = *t2_in.free;
  bool compatible = t1.degree_cap == t2_in.degree_cap && f1.generators().size() == f2.generators().size() &&
                    same_structure(*f1.base(), *f2.base());
  for (std::size_t g = 0; compatible && g < f1.generators().size(); ++g)
    compatible = f1.generators()[g].degree == f2.generators()[g].degree &&
                 f1.generators()[g].label == f2.generators()[g].label;
  if (!compatible)
    throw PreconditionError("IncompatibleTables", "tables differ in base algebra, generators or degree cap");
  GeneratorTable t2 = disambiguate(t1, t2_in);
  // Work entirely over the first table's extension; the second one's
  // differentials are expressed over the same terms.
  t2.free = t1.free;
  Solver solver(t1, t2);
  return solver.run();
}

std::vector<std::vector<ObstructionResult>> classify_example(const std::vector<Scalar>& qs) {
  std::vector<std::vector<ObstructionResult>> out(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j) {
      GeneratorTable a = fix_parameter(s2xs3_table(qs[i], 0), "r");
      GeneratorTable b = rename_parameter(fix_parameter(s2xs3_table(qs[j], 0), "r"), "q", "r");
      out[i].push_back(iso_obstruction(a, b));
    }
  return out;
}

}  // namespace cdga
