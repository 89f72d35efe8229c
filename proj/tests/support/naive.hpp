#pragma once

// Slow, independent reference implementations. Nothing here may call the
// fast paths it is used to check.

#include "fibform/exact.hpp"
#include "fibform/seqform.hpp"

#include <cstdint>
#include <vector>

namespace fibform::testing {

// F_n by plain iteration; negative n walks the recurrence backwards
// (F_{k-2} = F_k - F_{k-1}) instead of using the sign rule.
inline Int naive_fib(std::int64_t n) {
  Int a = 0;  // F_k
  Int b = 1;  // F_{k+1}
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) {
      Int c = a + b;
      a = b;
      b = c;
    }
    return a;
  }
  for (std::int64_t k = 0; k > n; --k) {
    Int prev = b - a;  // F_{k-1}
    b = a;
    a = prev;
  }
  return a;
}

inline Rational naive_poly_eval(const RatPoly& p, std::int64_t n) {
  Rational sum = 0;
  Int power = 1;
  for (const Rational& c : p.coeffs()) {
    sum += c * power;
    power *= n;
  }
  return sum;
}

inline Rational naive_evaluate(const FibExpr& e, std::int64_t n) {
  Rational sum = e.const_e() + (n % 2 == 0 ? e.alt_f() : Rational(-e.alt_f()));
  for (const ShiftTerm& t : e.terms())
    sum += naive_poly_eval(t.poly, n) * naive_fib(n - static_cast<std::int64_t>(t.shift));
  return sum;
}

// alpha^n by repeated multiplication in Q(sqrt 5).
inline QuadRat naive_alpha_pow(std::int64_t n) {
  QuadRat acc = Rational(1);
  const QuadRat step = n >= 0 ? QuadRat::alpha() : QuadRat::alpha().inverse();
  for (std::int64_t k = 0; k < (n >= 0 ? n : -n); ++k) acc *= step;
  return acc;
}

}  // namespace fibform::testing
