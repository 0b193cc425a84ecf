#ifndef HYPERSING_PARSE_HPP
#define HYPERSING_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypersing/error.hpp"
#include "hypersing/polynomial.hpp"

namespace hypersing {

// Grammar (whitespace insignificant):
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { ['*'] factor }      implicit '*' only after a literal
//   factor  := ['-'] power
//   power   := atom [ '^' integer ]
//   atom    := integer [ '/' integer ] | variable | '(' expr ')'
//   variable:= 'x' [0-4] | 'z' [1-4]

namespace detail {

inline constexpr unsigned kMaxExponent = 1000;

class PolyParser {
 public:
  PolyParser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Poly p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Poly expr() {
    Poly acc(vars_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = (c == '-');
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc += negate ? -t : t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Poly term() {
    bool after_literal = false;
    Poly acc = factor(after_literal);
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        bool lit = false;
        acc *= factor(lit);
        after_literal = lit;
      } else if (after_literal && (c == '(' || c == 'x' || c == 'z')) {
        bool lit = false;
        acc *= factor(lit);
        after_literal = lit;
      } else if (c == '/') {
        throw ParseError("division is only allowed inside a rational literal p/q", pos_);
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor(bool& was_literal) {
    if (peek() == '-') {
      ++pos_;
      return -factor(was_literal);
    }
    return power(was_literal);
  }

  Poly power(bool& was_literal) {
    Poly base = atom(was_literal);
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected a nonnegative integer exponent", pos_);
      unsigned long e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), start);
        ++pos_;
      }
      base = base.pow(static_cast<unsigned>(e));
      was_literal = false;
    }
    return base;
  }

  Int integer_literal() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (!at_end() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      throw ParseError("non-rational coefficient (only integers and p/q are accepted)", pos_);
    return Int(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Poly atom(bool& was_literal) {
    const char c = peek();
    was_literal = false;
    if (c == '(') {
      const std::size_t open = pos_++;
      Poly inner = expr();
      if (peek() != ')') throw ParseError("unbalanced parenthesis opened", open);
      ++pos_;
      return inner;
    }
    if (c == '.') throw ParseError("non-rational coefficient (only integers and p/q are accepted)", pos_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rat value(integer_literal());
      const std::size_t save = pos_;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("division is only allowed inside a rational literal p/q", save);
        const std::size_t den_pos = pos_;
        Int den = integer_literal();
        if (den == 0) throw ParseError("zero denominator", den_pos);
        value /= Rat(den);
      }
      was_literal = true;
      return Poly::constant(vars_, value);
    }
    if (c == 'x' || c == 'z') {
      const std::size_t start = pos_;
      ++pos_;
      std::string name(1, c);
      while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      return Poly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string name;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

/// Collects the variable tokens that occur in `text`, validating names.
inline std::vector<std::string> scan_variables(std::string_view text) {
  std::set<std::string> found;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c))) continue;
    if (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]))) continue;
    std::size_t j = i;
    std::string name;
    while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) name += text[j++];
    if (!is_valid_variable_name(name)) throw ParseError("unknown variable '" + name + "'", i);
    found.insert(name);
    i = j - 1;
  }
  std::vector<std::string> vars(found.begin(), found.end());
  if (!vars.empty() && vars.front()[0] != vars.back()[0])
    throw ParseError("x- and z-variables cannot be mixed", 0);
  return vars;
}

}  // namespace detail

/// Parses polynomial text. Without `expected_vars` the variable list is the
/// sorted set of variables occurring in the text.
inline Poly parse_poly(std::string_view text, std::optional<std::vector<std::string>> expected_vars = std::nullopt) {
  std::vector<std::string> vars = expected_vars ? *expected_vars : detail::scan_variables(text);
  Poly probe(vars);  // validates the list
  return detail::PolyParser(text, std::move(vars)).parse();
}

/// Canonical text: grevlex-sorted terms, explicit '*' and '^', "0" for zero.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || total_degree(e) == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << p.variables()[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace hypersing

#endif  // HYPERSING_PARSE_HPP
