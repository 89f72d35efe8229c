#pragma once

// Integrality of a sequence over all of Z.
//
// The derived recurrence is monic with integer coefficients and a constant
// coefficient of +-1, so integer values w_0..w_{m-1} propagate to every
// index in both directions. Checking the first m values is the whole
// decision.

#include "fibform/cfinite.hpp"
#include "fibform/exact.hpp"
#include "fibform/seqform.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace fibform {

struct Integral {
  std::vector<Int> certificate;  // w_0..w_{m-1}
};

struct NonIntegral {
  Int witness_n;
  Rational value;  // denominator > 1
};

using IntegralityVerdict = std::variant<Integral, NonIntegral>;

inline bool is_integral(const IntegralityVerdict& v) { return std::holds_alternative<Integral>(v); }

inline IntegralityVerdict is_integer_sequence(const FibExpr& e) {
  const Recurrence r = to_recurrence(e);
  Integral cert;
  for (std::size_t n = 0; n < r.order; ++n) {
    const Rational& v = r.initial[n];
    if (!is_integer(v)) return NonIntegral{Int(n), v};
    cert.certificate.push_back(numerator_of(v));
  }
  return cert;
}

/// First n in [lo, hi] (scan order) where w_n is not an integer.
inline std::optional<Int> brute_scan(const FibExpr& e, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t n = lo; n <= hi; ++n)
    if (!is_integer(evaluate(e, Int(n)))) return Int(n);
  return std::nullopt;
}

}  // namespace fibform
