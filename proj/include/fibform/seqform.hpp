#pragma once

/**
 * @file seqform.hpp
 * @brief Sequences w_n = sum_i p_i(n) F_{n - j_i} + e + f (-1)^n.
 *
 * FibExpr is the working representation. Its terms are kept sorted by
 * strictly increasing shift with no zero polynomials, so two FibExpr values
 * that compare equal structurally denote the same sequence. The converse
 * needs canonicalize(): every shift is folded onto F_n and F_{n-1} with the
 * shift identity, and the resulting CanonForm is a faithful normal form.
 */

#include "fibform/exact.hpp"
#include "fibform/fib.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace fibform {

/// p(n) * F_{n - shift}. A negative shift reads F_{n + |shift|}.
struct ShiftTerm {
  Int shift;
  RatPoly poly;

  friend bool operator==(const ShiftTerm&, const ShiftTerm&) = default;
};

class FibExpr {
 public:
  FibExpr() = default;

  FibExpr(std::vector<ShiftTerm> terms, Rational const_e = 0, Rational alt_f = 0)
      : const_e_(std::move(const_e)), alt_f_(std::move(alt_f)) {
    std::map<Int, RatPoly> merged;
    for (ShiftTerm& t : terms) merged[t.shift] += t.poly;
    for (auto& [shift, poly] : merged)
      if (!poly.is_zero()) terms_.push_back({shift, std::move(poly)});
  }

  static FibExpr term(Int shift, RatPoly poly) { return FibExpr({{std::move(shift), std::move(poly)}}); }
  static FibExpr constant(Rational e) { return FibExpr({}, std::move(e), 0); }
  static FibExpr alternating(Rational f) { return FibExpr({}, 0, std::move(f)); }

  const std::vector<ShiftTerm>& terms() const { return terms_; }
  const Rational& const_e() const { return const_e_; }
  const Rational& alt_f() const { return alt_f_; }

  bool is_zero() const { return terms_.empty() && const_e_ == 0 && alt_f_ == 0; }

  // Largest coefficient-polynomial degree among the F-terms.
  Degree max_degree() const {
    Degree d;
    for (const ShiftTerm& t : terms_) d = std::max(d, t.poly.degree());
    return d;
  }

  friend bool operator==(const FibExpr&, const FibExpr&) = default;

 private:
  std::vector<ShiftTerm> terms_;
  Rational const_e_{0};
  Rational alt_f_{0};
};

/// P0(n) F_n + P1(n) F_{n-1} + e + f (-1)^n.
struct CanonForm {
  RatPoly p0;
  RatPoly p1;
  Rational const_e{0};
  Rational alt_f{0};

  FibExpr to_expr() const { return FibExpr({{Int(0), p0}, {Int(1), p1}}, const_e, alt_f); }

  // Max degree of P0, P1; empty when the Fibonacci part vanishes.
  Degree fib_degree() const { return std::max(p0.degree(), p1.degree()); }

  friend bool operator==(const CanonForm&, const CanonForm&) = default;
};

/// w_n - e - f(-1)^n = q_alpha(n) alpha^n - q_beta(n) beta^n.
struct BinetForm {
  QuadPoly q_alpha;
  QuadPoly q_beta;
};

inline Rational evaluate(const FibExpr& e, const Int& n) {
  Rational sum = e.const_e() + sign_power(n) * e.alt_f();
  for (const ShiftTerm& t : e.terms()) sum += poly_eval(t.poly, n) * fib(n - t.shift);
  return sum;
}

inline CanonForm canonicalize(const FibExpr& e) {
  CanonForm c;
  c.const_e = e.const_e();
  c.alt_f = e.alt_f();
  for (const ShiftTerm& t : e.terms()) {
    const ShiftCoeffs sc = shift_coeffs(t.shift);
    c.p0 += Rational(sc.on_fn) * t.poly;
    c.p1 += Rational(sc.on_fn1) * t.poly;
  }
  return c;
}

inline FibExpr add(const FibExpr& a, const FibExpr& b) {
  std::vector<ShiftTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return FibExpr(std::move(terms), a.const_e() + b.const_e(), a.alt_f() + b.alt_f());
}

inline FibExpr scale(const FibExpr& e, const Rational& r) {
  std::vector<ShiftTerm> terms;
  for (const ShiftTerm& t : e.terms()) terms.push_back({t.shift, r * t.poly});
  return FibExpr(std::move(terms), e.const_e() * r, e.alt_f() * r);
}

inline FibExpr operator+(const FibExpr& a, const FibExpr& b) { return add(a, b); }
inline FibExpr operator-(const FibExpr& a, const FibExpr& b) { return add(a, scale(b, -1)); }

/// The sequence n -> w_{n+k}.
inline FibExpr shift_index(const FibExpr& e, const Int& k) {
  std::vector<ShiftTerm> terms;
  for (const ShiftTerm& t : e.terms()) terms.push_back({t.shift - k, poly_taylor_shift(t.poly, k)});
  return FibExpr(std::move(terms), e.const_e(), sign_power(k) * e.alt_f());
}

inline BinetForm binet_decompose(const FibExpr& e) {
  const QuadRat inv_sqrt5{0, Rational(1, 5)};
  BinetForm b;
  for (const ShiftTerm& t : e.terms()) {
    const QuadPoly p = to_quad(t.poly);
    // 1/alpha^j = alpha^{-j}
    b.q_alpha += QuadRat(inv_sqrt5 * alpha_pow(-t.shift)) * p;
    b.q_beta += QuadRat(inv_sqrt5 * beta_pow(-t.shift)) * p;
  }
  return b;
}

// q_alpha(n) alpha^n - q_beta(n) beta^n in Q(sqrt 5).
inline QuadRat binet_evaluate(const BinetForm& b, const Int& n) {
  const QuadRat x{Rational(n)};
  return b.q_alpha(x) * alpha_pow(n) - b.q_beta(x) * beta_pow(n);
}

inline bool canonical_equal(const FibExpr& a, const FibExpr& b) { return canonicalize(a) == canonicalize(b); }

}  // namespace fibform
