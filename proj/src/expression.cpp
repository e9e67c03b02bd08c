#include "cdga/expression.hpp"

#include <algorithm>
#include <cctype>

#include "cdga/errors.hpp"

namespace cdga {

std::string format_element(const SparseVec& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : v) {
    const std::string& label = labels.at(i);
    Scalar mag = abs(c);
    if (first)
      s += c < 0 ? "−" : "";
    else
      s += c < 0 ? " − " : " + ";
    first = false;
    if (mag == 1) {
      s += label;
    } else {
      bool compound = label.find("⊗") != std::string::npos;
      s += format_scalar(mag) + "*" + (compound ? "(" + label + ")" : label);
    }
  }
  return s;
}

namespace {

const std::string kMinus = "−";
const std::string kTensor = "⊗";

class Parser {
 public:
  Parser(std::string text, const DGAlgebra& algebra) : text_(std::move(text)), algebra_(algebra) {
    labels_ = algebra.basis().labels();
    std::sort(labels_.begin(), labels_.end(), [](const std::string& a, const std::string& b) {
      return a.size() > b.size();
    });
  }

  SparseVec parse() {
    SparseVec out;
    skip_space();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (eat_minus())
      sign = -1;
    else
      eat('+');
    while (true) {
      skip_space();
      add_scaled(out, sign, term());
      skip_space();
      if (at_end()) break;
      if (eat_minus())
        sign = -1;
      else if (eat('+'))
        sign = 1;
      else
        fail("expected + or −");
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    // Column counts characters, not bytes.
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++column;
    throw ExpressionParseError(what + " in \"" + text_ + "\"", 1, column);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_minus() {
    if (eat('-')) return true;
    if (text_.compare(pos_, kMinus.size(), kMinus) == 0) {
      pos_ += kMinus.size();
      return true;
    }
    return false;
  }
  bool is_delimiter(std::size_t p) const {
    if (p >= text_.size()) return true;
    char c = text_[p];
    return std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '*' || c == ')' ||
           text_.compare(p, kMinus.size(), kMinus) == 0;
  }
  // Longest label starting at p and ending at a delimiter.
  std::optional<std::string> label_at(std::size_t p) const {
    for (const auto& l : labels_)
      if (text_.compare(p, l.size(), l) == 0 && is_delimiter(p + l.size())) return l;
    return std::nullopt;
  }

  SparseVec term() {
    std::size_t start = pos_;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end < text_.size() && text_[end] == '/') {
        ++end;
        if (end >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[end]))) {
          pos_ = end;
          fail("malformed rational");
        }
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
      std::size_t after = end;
      while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
      bool coefficient = after < text_.size() &&
                         (text_[after] == '*' || text_[after] == '(' || (after > end && label_at(after)));
      auto label = label_at(start);
      if (!coefficient && label && label->size() > end - start) {
        pos_ = start + label->size();
        return SparseVec{{algebra_.index_of(*label), Scalar(1)}};
      }
      Scalar c = parse_scalar(text_.substr(start, end - start));
      pos_ = after;
      if (!coefficient) return c == 0 ? SparseVec{} : SparseVec{{algebra_.unit(), c}};
      eat('*');
      skip_space();
      return scaled(atom(), c);
    }
    return atom();
  }

  SparseVec atom() {
    if (at_end()) fail("expected a basis label");
    if (auto l = label_at(pos_)) {
      pos_ += l->size();
      return SparseVec{{algebra_.index_of(*l), Scalar(1)}};
    }
    if (text_[pos_] == '(') {
      std::size_t open = pos_;
      ++pos_;
      skip_space();
      SparseVec inner = parse_inner();
      skip_space();
      if (!eat(')')) {
        pos_ = open;
        fail("unbalanced parenthesis");
      }
      return inner;
    }
    fail("unknown basis label");
  }

  // Label inside parentheses: may be followed by ')' directly.
  SparseVec parse_inner() {
    for (const auto& l : labels_)
      if (text_.compare(pos_, l.size(), l) == 0) {
        std::size_t q = pos_ + l.size();
        while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
        if (q < text_.size() && text_[q] == ')') {
          pos_ += l.size();
          return SparseVec{{algebra_.index_of(l), Scalar(1)}};
        }
      }
    fail("unknown basis label");
  }

  std::string text_;
  const DGAlgebra& algebra_;
  std::vector<std::string> labels_;
  std::size_t pos_ = 0;
};

// "(x)" written between two label characters stands for ⊗.
std::string expand_ascii_tensor(std::string_view in) {
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in.compare(i, 3, "(x)") == 0 && i > 0 && i + 3 < in.size()) {
      char before = in[i - 1], after = in[i + 3];
      auto label_char = [](char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '*' && c != '(';
      };
      if (label_char(before) && (label_char(after) || after == '(')) {
        out += kTensor;
        i += 2;
        continue;
      }
    }
    out.push_back(in[i]);
  }
  return out;
}

}  // namespace

SparseVec parse_element(std::string_view text, const DGAlgebra& algebra) {
  Parser p(expand_ascii_tensor(text), algebra);
  return p.parse();
}

}  // namespace cdga
