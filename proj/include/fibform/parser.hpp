#pragma once

/**
 * @file parser.hpp
 * @brief Text format for FibExpr.
 *
 *   expr      := ["+"|"-"] term (("+"|"-") term)*
 *   term      := fibref | altref | coef ["*"] [fibref | altref]
 *   fibref    := "F" "(" "n" [("+"|"-") natural] ")"
 *   altref    := "(-1)^n"
 *   coef      := polyfactor ["/" natural]
 *   polyfactor:= rational ["*"] ["n" ["^" natural]] | "n" ["^" natural] | "(" polysum ")"
 *   polysum   := ["+"|"-"] polyterm (("+"|"-") polyterm)*
 *   polyterm  := rational ["*"] ["n" ["^" natural]] | "n" ["^" natural]
 *   rational  := ["-"] natural ["/" natural]
 *
 * Whitespace may appear between any two tokens. A bare coefficient (no
 * F or (-1)^n) must be constant and contributes to e. Examples:
 *
 *   (2n+3)/5*F(n) - n/5*F(n-1)
 *   4n/5*F(n+1) + (3n+3)/5*F(n) + 1/2 + 1/2*(-1)^n
 */

#include "fibform/exact.hpp"
#include "fibform/seqform.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibform {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset), message_(message) {}

  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

namespace detail {

inline constexpr unsigned long max_exponent = 1000;

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  FibExpr run() {
    skip_ws();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (accept('+')) {
    } else if (accept('-')) {
      sign = -1;
    }
    term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (accept('+')) {
        term(1);
      } else if (accept('-')) {
        term(-1);
      } else {
        fail(std::string("unexpected character '") + src_[pos_] + "'");
      }
    }
    return FibExpr(std::move(terms_), const_e_, alt_f_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(at > src_.size() ? src_.size() : at, msg);
  }

  bool at_end() const { return pos_ >= src_.size(); }

  static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  void skip_ws() {
    while (!at_end() && is_ws(src_[pos_])) ++pos_;
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : src_[pos_];
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  Int natural(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && is_digit(src_[pos_])) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return from_decimal(src_.substr(start, pos_ - start));
  }

  std::size_t exponent() {
    skip_ws();
    if (at_end() || !is_digit(src_[pos_])) fail("exponent must be a non-negative integer literal");
    const std::size_t start = pos_;
    const Int k = natural("exponent");
    if (k > max_exponent) fail_at(start, "exponent too large (max " + std::to_string(max_exponent) + ")");
    return static_cast<std::size_t>(k);
  }

  // Matches "(-1)^n" starting at the current '(' without consuming otherwise.
  bool try_altref() {
    const std::size_t save = pos_;
    if (accept('(') && accept('-') && accept('1') && accept(')') && accept('^') && accept('n')) return true;
    pos_ = save;
    return false;
  }

  // rational ["*"] ["n" ["^" natural]], or "n" ["^" natural]; leading '-' allowed.
  RatPoly polyterm() {
    Rational c = 1;
    bool have_number = false;
    if (accept('-')) {
      c = -1;
      if (!is_digit(peek()) && peek() != 'n') fail("expected a number or n after '-'");
    }
    if (is_digit(peek())) {
      Int num = natural("number");
      Int den = 1;
      if (peek() == '/' && next_is_digit_after_slash()) {
        ++pos_;
        den = natural("denominator");
        if (den == 0) fail("zero denominator");
      }
      c *= Rational(num, den);
      have_number = true;
    }
    std::size_t k = 0;
    const std::size_t before_star = pos_;
    bool starred = false;
    if (have_number && peek() == '*') {
      ++pos_;
      starred = true;
    }
    if (peek() == 'n') {
      ++pos_;
      k = 1;
      if (accept('^')) k = exponent();
    } else if (!have_number) {
      fail("expected a number or n");
    } else if (starred) {
      pos_ = before_star;  // '*' belongs to the enclosing term
    }
    return RatPoly::monomial(c, k);
  }

  // '/' is a rational bar only when a natural follows, so "n/5" and "(..)/5" stay coef divisions.
  bool next_is_digit_after_slash() {
    std::size_t p = pos_ + 1;
    while (p < src_.size() && is_ws(src_[p])) ++p;
    return p < src_.size() && is_digit(src_[p]);
  }

  RatPoly polysum() {
    RatPoly sum;
    int sign = 1;
    if (accept('+')) {
    } else if (accept('-')) {
      sign = -1;
    }
    sum += Rational(sign) * polyterm();
    for (;;) {
      if (accept('+')) {
        sum += polyterm();
      } else if (accept('-')) {
        sum -= polyterm();
      } else {
        break;
      }
    }
    return sum;
  }

  RatPoly coef() {
    RatPoly p;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      p = polysum();
      expect(')', "')'");
    } else if (is_digit(c) || c == 'n') {
      p = polyterm();
    } else if (at_end()) {
      fail("unexpected end of input");
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (accept('/')) {
      const Int den = natural("natural number after '/'");
      if (den == 0) fail("division by zero");
      p = Rational(1, den) * p;
    }
    return p;
  }

  Int fibref_shift() {
    expect('F', "'F'");
    expect('(', "'(' after F");
    if (!accept('n')) fail("shift argument must be n, n+k or n-k");
    Int shift = 0;
    if (accept('+')) {
      if (!is_digit(peek())) fail("shift argument must be n, n+k or n-k");
      shift = -natural("shift");
    } else if (accept('-')) {
      if (!is_digit(peek())) fail("shift argument must be n, n+k or n-k");
      shift = natural("shift");
    }
    expect(')', "')' closing F(");
    return shift;
  }

  void add_constant(const RatPoly& p, std::size_t at, Rational& slot, const char* what) {
    if (p.degree().value_or(0) > 0) fail_at(at, std::string("polynomial coefficient not allowed on ") + what);
    slot += p.coeff(0);
  }

  void term(int sign) {
    const std::size_t start = (skip_ws(), pos_);
    const char c = peek();
    if (c == 'F') {
      terms_.push_back({fibref_shift(), RatPoly::constant(sign)});
      return;
    }
    if (c == '(' && try_altref()) {
      alt_f_ += sign;
      return;
    }
    RatPoly p = Rational(sign) * coef();
    const bool starred = accept('*');
    const char next = peek();
    if (next == 'F') {
      terms_.push_back({fibref_shift(), std::move(p)});
    } else if (next == '(') {
      if (!try_altref()) fail("expected (-1)^n");
      add_constant(p, start, alt_f_, "(-1)^n");
    } else if (starred) {
      fail("expected F(...) or (-1)^n after '*'");
    } else {
      add_constant(p, start, const_e_, "a constant term (missing F(...)?)");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<ShiftTerm> terms_;
  Rational const_e_ = 0;
  Rational alt_f_ = 0;
};

inline std::string fibref_text(const Int& shift) {
  if (shift == 0) return "F(n)";
  if (shift > 0) return "F(n-" + shift.str() + ")";
  return "F(n+" + Int(-shift).str() + ")";
}

inline std::string monomials_text(const RatPoly& p) {
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool neg = c[i] < 0;
    const Rational mag = neg ? Rational(-c[i]) : c[i];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "n";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// Appends "<sign> <magnitude>*<atom>" with the sign folded into the separator.
inline void append_scaled(std::string& out, const Rational& c, const std::string& atom) {
  const bool neg = c < 0;
  const Rational mag = neg ? Rational(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (atom.empty()) {
    out += to_string(mag);
  } else {
    if (mag != 1) out += to_string(mag) + "*";
    out += atom;
  }
}

}  // namespace detail

inline FibExpr parse(std::string_view text) { return detail::ExprParser(text).run(); }

/// Deterministic text accepted by parse(): terms by ascending shift, then e, then f.
inline std::string print(const FibExpr& e) {
  std::string out;
  for (const ShiftTerm& t : e.terms()) {
    const std::string ref = detail::fibref_text(t.shift);
    if (t.poly.degree() == Degree(0)) {
      detail::append_scaled(out, t.poly.coeff(0), ref);
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "(" + detail::monomials_text(t.poly) + ")*" + ref;
  }
  if (e.const_e() != 0) detail::append_scaled(out, e.const_e(), "");
  if (e.alt_f() != 0) detail::append_scaled(out, e.alt_f(), "(-1)^n");
  return out.empty() ? "0" : out;
}

}  // namespace fibform
