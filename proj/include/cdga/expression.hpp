// Printing and parsing of algebra elements.
//
// Grammar (whitespace ignored between tokens):
//   expr  := ["+"|"-"] term { ("+"|"-") term }
//   term  := coeff ["*"] atom | atom | coeff
//   coeff := integer ["/" integer]
//   atom  := label | "(" label ")"
// "−" (U+2212) is accepted for "-", and "(x)" written between label
// characters stands for "⊗". A bare coefficient means that multiple of the
// unit. Labels are matched longest first.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdga/algebra.hpp"

namespace cdga {

/// "1⊗xy + x⊗y − y⊗x − xy⊗1", "2*(y⊗xy)", "−1/2*x"; zero prints "0".
std::string format_element(const SparseVec& v, const std::vector<std::string>& labels);
inline std::string format_element(const SparseVec& v, const DGAlgebra& a) {
  return format_element(v, a.basis().labels());
}

/// Throws ExpressionParseError (column = 1-based character offset).
SparseVec parse_element(std::string_view text, const DGAlgebra& algebra);

}  // namespace cdga
