#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "gorcol/polynomial.hpp"

namespace gorcol {

// Recursive-descent parser for the polynomial grammar used by .alg files:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := uint | variable | '(' expr ')'
//
// Integer literals may be arbitrarily large; juxtaposition is not
// multiplication ("2x" is a syntax error). Errors carry the offset of the
// offending character.
namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(const F& field, const std::string& text,
             const std::vector<std::string>& vars)
      : field_(field), text_(text), vars_(vars) {}

  Polynomial<F> run() {
    Polynomial<F> p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                           "' at offset " + std::to_string(pos_),
                       pos_);
    return p;
  }

 private:
  int nvars() const { return static_cast<int>(vars_.size()); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c))
      throw ParseError(std::string("expected ") + what + " at offset " +
                           std::to_string(pos_),
                       pos_);
  }

  Polynomial<F> expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial<F> p = term();
    if (negate) p = neg(p);
    for (;;) {
      if (accept('+'))
        p = add(p, term());
      else if (accept('-'))
        p = sub(p, term());
      else
        break;
    }
    return p;
  }

  Polynomial<F> term() {
    Polynomial<F> p = factor();
    while (accept('*')) p = mul(p, factor());
    return p;
  }

  Polynomial<F> factor() {
    Polynomial<F> p = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty())
        throw ParseError("expected exponent at offset " + std::to_string(at), at);
      if (digits.size() > 5 || digits == "0")
        throw ParseError("exponent must be a positive integer (at most 99999), got '" +
                             digits + "'",
                         at);
      p = pow(p, std::stoi(digits));
    }
    return p;
  }

  Polynomial<F> atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input", text_.size());
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<F> p = expr();
      expect(')', "')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      return Polynomial<F>::constant(field_, nvars(), field_.from_decimal(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      std::string name = read_name();
      for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return Polynomial<F>::variable(field_, nvars(), i);
      throw ParseError("unknown variable '" + name + "' at offset " +
                           std::to_string(at),
                       at);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                         std::to_string(pos_),
                     pos_);
  }

  std::string read_digits() {
    std::string s;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      s += text_[pos_++];
    return s;
  }

  std::string read_name() {
    std::string s;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      s += text_[pos_++];
    return s;
  }

  const F& field_;
  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const F& field, const std::string& text,
                               const std::vector<std::string>& vars) {
  return detail::PolyParser<F>(field, text, vars).run();
}

}  // namespace gorcol
