// Staged solver deciding whether two generator tables over A⊗A admit an
// isomorphism ψ of free extensions fixing A⊗A and commuting with D.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdga/sullivan_table.hpp"

namespace cdga {

struct ObstructionResult {
  enum class Verdict { Exists, Obstructed, Unresolved };
  Verdict verdict = Verdict::Unresolved;
  /// One line per derivation step: stage headers, solved unknowns,
  /// parameter constraints.
  std::vector<std::string> trace;
  /// Exists: value of every unknown (free ones set to 0).
  std::map<std::string, Scalar> assignment;
  /// Unknowns fixed during the derivation, as found (before free ones are zeroed).
  std::map<std::string, Poly> solved;
  /// Obstructed: the violated constraint, e.g. "q − r = 0".
  std::string failed_constraint;
  /// Unresolved: the equations left over.
  std::vector<std::string> residual;
};

std::string to_string(ObstructionResult::Verdict v);

/// Unknown coefficient of ψ(g) on a term, e.g. "ψ(u)[x⊗x]".
std::string unknown_name(const FreeExtension& f, std::size_t generator, const FreeExtension::Term& term);

/// Throws PreconditionError("IncompatibleTables") when the tables differ in
/// base algebra, generator degrees or degree cap.
ObstructionResult iso_obstruction(const GeneratorTable& t1, const GeneratorTable& t2);

/// Pairwise verdicts for s2xs3_table(q_i, 0) against s2xs3_table(q_j, 0).
/// The second table's q is renamed to r so traces read "q − r".
std::vector<std::vector<ObstructionResult>> classify_example(const std::vector<Scalar>& qs);

}  // namespace cdga
