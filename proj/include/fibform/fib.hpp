#pragma once

// Fibonacci numbers over all of Z, the shift identity and exact powers of
// the golden ratio.

#include "fibform/exact.hpp"

#include <cstdint>
#include <limits>
#include <utility>

namespace fibform {

namespace detail {

// (F_n, F_{n+1}) for n >= 0 by fast doubling.
inline std::pair<Int, Int> fib_pair(std::uint64_t n) {
  Int a = 0;  // F_k
  Int b = 1;  // F_{k+1}
  for (int bit = 63; bit >= 0; --bit) {
    // F_2k = F_k (2 F_{k+1} - F_k), F_2k+1 = F_k^2 + F_{k+1}^2
    Int c = a * (2 * b - a);
    Int d = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

inline std::uint64_t checked_index(const Int& magnitude) {
  if (magnitude > std::numeric_limits<std::uint64_t>::max())
    throw ArithmeticError("Fibonacci index out of range: " + magnitude.str());
  return static_cast<std::uint64_t>(magnitude);
}

}  // namespace detail

/// F_n for any integer n, with F_{-n} = (-1)^{n+1} F_n.
inline Int fib(const Int& n) {
  const Int mag = abs(n);
  Int value = detail::fib_pair(detail::checked_index(mag)).first;
  if (n < 0 && sign_power(mag) == 1) value = -value;  // even |n| flips sign
  return value;
}

/// Coefficients of F_{n-j} = on_fn * F_n + on_fn1 * F_{n-1}.
struct ShiftCoeffs {
  Int on_fn;
  Int on_fn1;

  friend bool operator==(const ShiftCoeffs&, const ShiftCoeffs&) = default;
};

// ((-1)^j F_{j-1}, (-1)^{j+1} F_j), valid for negative j too.
inline ShiftCoeffs shift_coeffs(const Int& j) {
  const int s = sign_power(j);
  return {Int(s * fib(j - 1)), Int(-s * fib(j))};
}

/// alpha^n = F_n * alpha + F_{n-1}, exactly in Q(sqrt 5).
inline QuadRat alpha_pow(const Int& n) {
  const Int fn = fib(n);
  const Int fn1 = fib(n - 1);
  // F_n (1 + sqrt5)/2 + F_{n-1}
  return {Rational(Rational(fn, 2) + fn1), Rational(fn, 2)};
}

inline QuadRat beta_pow(const Int& n) { return alpha_pow(n).conjugate(); }

}  // namespace fibform
