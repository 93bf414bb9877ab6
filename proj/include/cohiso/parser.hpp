#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohiso/polynomial.hpp"

namespace cohiso {

/// Syntax error with 0-based character position in the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// Grammar (whitespace insignificant):
//   poly   := ('-')? term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' uint)?
//   coeff  := int | '(' rat ')' | '(' rat '*' sqrtm3 ')'
//           | '(' rat ('+'|'-') rat '*' sqrtm3 ')'
//   rat    := int ('/' uint)?
class PolynomialParser {
public:
  PolynomialParser(const std::string& text, const RingSignature& sig)
      : text_(text), sig_(sig) {}

  Polynomial parse() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    std::vector<std::pair<Monomial, ExactScalar>> raw;
    parse_term(raw, neg);
    skip_ws();
    while (pos_ < text_.size()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      advance();
      parse_term(raw, c == '-');
      skip_ws();
    }
    return Polynomial::from_terms(sig_, raw);
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    advance();
  }

  mpz_class parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty()) throw ParseError("expected integer", start);
    mpz_class v(digits);
    return neg ? mpz_class(-v) : v;
  }

  mpz_class parse_uint(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty()) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(digits);
  }

  mpq_class parse_rat() {
    mpz_class num = parse_int();
    skip_ws();
    if (peek() == '/') {
      advance();
      std::size_t dpos = pos_;
      mpz_class den = parse_uint("denominator");
      if (den == 0) throw ParseError("malformed rational literal: zero denominator", dpos);
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    std::string name;
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      throw ParseError("expected identifier", start);
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      name += peek();
      advance();
    }
    return name;
  }

  // coeff variants behind '(': "(r)", "(r*sqrtm3)", "(r +/- r*sqrtm3)"
  ExactScalar parse_paren_coeff() {
    expect('(');
    mpq_class first = parse_rat();
    skip_ws();
    if (peek() == ')') {
      advance();
      return ExactScalar(first);
    }
    if (peek() == '*') {
      advance();
      expect_sqrtm3();
      expect(')');
      return ExactScalar(mpq_class(0), first);
    }
    char sign = peek();
    if (sign != '+' && sign != '-') throw ParseError("expected ')', '*', '+' or '-'", pos_);
    advance();
    mpq_class second = parse_rat();
    expect('*');
    expect_sqrtm3();
    expect(')');
    if (sign == '-') second = -second;
    return ExactScalar(first, second);
  }

  void expect_sqrtm3() {
    skip_ws();
    std::size_t start = pos_;
    if (parse_ident() != "sqrtm3") throw ParseError("expected 'sqrtm3'", start);
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    std::size_t start = pos_;
    std::string name = parse_ident();
    int idx = sig_.index_of(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
    std::uint32_t power = 1;
    skip_ws();
    if (peek() == '^') {
      advance();
      mpz_class e = parse_uint("exponent");
      if (!e.fits_uint_p()) throw ParseError("exponent too large", pos_);
      power = static_cast<std::uint32_t>(e.get_ui());
    }
    mono.exp[static_cast<std::size_t>(idx)] += power;
  }

  void parse_term(std::vector<std::pair<Monomial, ExactScalar>>& raw, bool negate) {
    skip_ws();
    ExactScalar coeff(1);
    Monomial mono(sig_.arity());
    char c = peek();
    if (c == '(') {
      coeff = parse_paren_coeff();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      coeff = ExactScalar(mpq_class(parse_int()));
    } else {
      parse_factor(mono);
    }
    skip_ws();
    while (peek() == '*') {
      advance();
      parse_factor(mono);
      skip_ws();
    }
    if (negate) coeff = -coeff;
    raw.emplace_back(std::move(mono), std::move(coeff));
  }

  const std::string& text_;
  const RingSignature& sig_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text, const RingSignature& sig) {
  return PolynomialParser(text, sig).parse();
}

/// Leading sign used for printing: sign of the rational part, falling back to
/// the radical part.
inline bool print_sign_negative(const ExactScalar& c) {
  if (c.rat() != 0) return c.rat() < 0;
  return c.rad() < 0;
}

/// Canonical printer; output reparses to the identical polynomial.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const RingSignature& sig = p.signature();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = print_sign_negative(t.coeff);
    ExactScalar mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += to_string(mag);
    } else if (mag.is_one()) {
      out += to_string(t.mono, sig);
    } else {
      out += to_string(mag) + "*" + to_string(t.mono, sig);
    }
  }
  return out;
}

}  // namespace cohiso
