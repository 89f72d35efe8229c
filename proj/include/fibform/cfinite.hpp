#pragma once

// Characteristic polynomials and integer recurrences of canonical forms.

#include "fibform/exact.hpp"
#include "fibform/seqform.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fibform {

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// w_n = coeffs[0] w_{n-1} + ... + coeffs[m-1] w_{n-m}, seeded by w_0..w_{m-1}.
struct Recurrence {
  std::size_t order = 0;
  std::vector<Int> coeffs;
  IntPoly char_poly = IntPoly::constant(1);
  std::vector<Rational> initial;
};

enum class Direction { forward, backward };

inline IntPoly golden_poly() { return IntPoly{-1, -1, 1}; }  // x^2 - x - 1

/// (x^2-x-1)^{D+1} (x-1)^[e!=0] (x+1)^[f!=0] with D = max(deg P0, deg P1).
inline IntPoly char_poly(const CanonForm& c) {
  IntPoly poly = IntPoly::constant(1);
  if (const Degree d = c.fib_degree()) poly *= intpoly_pow(golden_poly(), *d + 1);
  if (c.const_e != 0) poly *= IntPoly{-1, 1};
  if (c.alt_f != 0) poly *= IntPoly{1, 1};
  return poly;
}

inline Recurrence recurrence_from_char_poly(IntPoly cp) {
  Recurrence r;
  r.order = *cp.degree();
  for (std::size_t i = 1; i <= r.order; ++i) r.coeffs.push_back(-cp.coeff(r.order - i));
  r.char_poly = std::move(cp);
  return r;
}

inline Recurrence to_recurrence(const FibExpr& e) {
  Recurrence r = recurrence_from_char_poly(char_poly(canonicalize(e)));
  for (std::size_t n = 0; n < r.order; ++n) r.initial.push_back(evaluate(e, Int(n)));
  return r;
}

// Checks w_n against the recurrence at every n in [lo, hi].
inline bool verify_recurrence(const FibExpr& e, const Recurrence& r, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t n = lo; n <= hi; ++n) {
    Rational rhs = 0;
    for (std::size_t i = 0; i < r.order; ++i)
      rhs += r.coeffs[i] * evaluate(e, Int(n - static_cast<std::int64_t>(i) - 1));
    if (rhs != evaluate(e, Int(n))) return false;
  }
  return true;
}

inline bool verify_recurrence(const FibExpr& e, std::int64_t lo, std::int64_t hi) {
  return verify_recurrence(e, to_recurrence(e), lo, hi);
}

/**
 * Runs the recurrence past its initial window.
 *
 * forward yields w_m, ..., w_{m+count-1}; backward yields w_{-1}, ...,
 * w_{-count}, solving for the trailing term. Backward steps divide by the
 * constant coefficient, which must be a unit.
 */
inline std::vector<Rational> extend(const Recurrence& r, std::size_t count, Direction dir) {
  if (r.initial.size() != r.order) throw std::invalid_argument("recurrence needs exactly order initial values");
  std::vector<Rational> out;
  out.reserve(count);
  if (dir == Direction::forward) {
    std::vector<Rational> window = r.initial;  // oldest first
    for (std::size_t k = 0; k < count; ++k) {
      Rational next = 0;
      for (std::size_t i = 0; i < r.order; ++i) next += r.coeffs[i] * window[window.size() - 1 - i];
      out.push_back(next);
      window.push_back(next);
    }
    return out;
  }
  if (r.order == 0) throw std::invalid_argument("backward extension needs a recurrence of order >= 1");
  const Int& last = r.coeffs.back();
  if (last != 1 && last != -1) throw InvariantViolation("constant coefficient is not a unit: " + last.str());
  // window[0] is the oldest known term
  std::vector<Rational> window(r.initial.begin(), r.initial.end());
  for (std::size_t k = 0; k < count; ++k) {
    // w_{t} = sum c_i w_{t-i}, solve for w_{t-m} with t = oldest + m - 1
    Rational rest = window[r.order - 1];
    for (std::size_t i = 1; i < r.order; ++i) rest -= r.coeffs[i - 1] * window[r.order - 1 - i];
    Rational older = rest * last;  // division by a unit
    out.push_back(older);
    window.insert(window.begin(), older);
    window.pop_back();
  }
  return out;
}

}  // namespace fibform
