#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace seqcm {

/// Syntax error with a 1-based position. `line` is 0 when the error comes
/// from a standalone expression.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string where = line ? std::to_string(line) + ":" + std::to_string(column)
                             : "column " + std::to_string(column);
    return where + ": " + what;
  }
  std::size_t line_, column_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t line, std::size_t column)
      : ParseError("UnknownVariable '" + name + "'", line, column) {}
};

namespace detail {

// Recursive-descent parser over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := (integer | identifier | '(' expr ')') ['^' integer]
class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text, std::size_t line, std::size_t column0)
      : ring_(std::move(ring)), text_(text), line_(line), column0_(column0) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column0_ + pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    Polynomial t = term();
    acc = negate ? acc - t : t;
    while (peek() == '+' || peek() == '-') {
      bool minus = text_[pos_++] == '-';
      Polynomial next = term();
      acc = minus ? acc - next : acc + next;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > 1000) fail("exponent too large");
    }
    if (pos_ == start) fail("expected exponent");
    return static_cast<unsigned>(e);
  }

  Polynomial maybe_power(Polynomial base) {
    if (peek() == '^') {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }

  Polynomial factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return maybe_power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& F = ring_->field();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = F.add(F.mul(v, 10 % F.characteristic()), static_cast<Coeff>(text_[pos_++] - '0'));
      return maybe_power(Polynomial::constant(ring_, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      Monomial m = split_identifier(word, start);
      Polynomial p = Polynomial::monomial(ring_, m);
      return maybe_power(p);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // An identifier is either a variable name or a juxtaposition such as `xy`,
  // split greedily by the longest matching variable name.
  Monomial split_identifier(const std::string& word, std::size_t start) {
    if (auto idx = ring_->index_of(word)) return ring_->var(*idx);
    Monomial m = ring_->one();
    std::size_t i = 0;
    while (i < word.size()) {
      std::size_t best = 0, best_idx = 0;
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        const auto& name = ring_->names()[v];
        if (name.size() > best && word.compare(i, name.size(), name) == 0) {
          best = name.size();
          best_idx = v;
        }
      }
      if (best == 0) throw UnknownVariable(word, line_, column0_ + start);
      m = m * ring_->var(best_idx);
      i += best;
    }
    return m;
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t line_, column0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `x^2*y - 3y`-style text; integer coefficients are reduced mod p.
/// `line`/`column` locate the text inside a larger input for error messages.
inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text,
                                   std::size_t line = 0, std::size_t column = 1) {
  return detail::PolyParser(ring, text, line, column).parse();
}

}  // namespace seqcm
