#pragma once

/**
 * @file synth.hpp
 * @brief Recovering rational coefficient polynomials from integer values.
 *
 * A Template fixes the shape
 *
 *   (a n^k + ... ) F_n + ( ... ) F_{n-1} + e + f (-1)^n
 *
 * and therefore a list of unknowns. Sampling w_0..w_{k-1} gives a square
 * linear system over Q; its exact inverse maps initial values straight to
 * coefficients.
 *
 * Column order (the "slot" order) is fixed: P0 coefficients by descending
 * degree, then P1 coefficients by descending degree, then the constant,
 * then the alternating coefficient. Slots are named a, b, c, ... in that
 * order, so the rows of symbolic_inverse() line up with the usual way the
 * closed forms are written.
 */

#include "fibform/exact.hpp"
#include "fibform/fib.hpp"
#include "fibform/seqform.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibform {

class DegenerateTemplate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Template {
  Degree deg_p0;
  Degree deg_p1;
  bool has_const = false;
  bool has_alt = false;

  std::size_t unknowns() const {
    return (deg_p0 ? *deg_p0 + 1 : 0) + (deg_p1 ? *deg_p1 + 1 : 0) + (has_const ? 1 : 0) + (has_alt ? 1 : 0);
  }

  friend bool operator==(const Template&, const Template&) = default;
};

inline std::string slot_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "u" + std::to_string(i);
}

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Gauss-Jordan over Q. Pivot: first nonzero entry in the column, top-down.
inline std::optional<RatMatrix> invert(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("only square matrices are invertible");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

struct SynthSolution {
  FibExpr expr;
  std::vector<std::pair<std::string, Rational>> coefficients;  // slot order
};

/// Row n holds the multiplier of every unknown in w_n, for n = 0..k-1.
inline RatMatrix build_system(const Template& t) {
  const std::size_t k = t.unknowns();
  RatMatrix m(k, k);
  for (std::size_t n = 0; n < k; ++n) {
    const Int nn(n);
    std::size_t col = 0;
    auto fill_poly = [&](const Degree& deg, const Int& fib_value) {
      if (!deg) return;
      for (std::size_t p = *deg + 1; p-- > 0;) m(n, col++) = Rational(boost::multiprecision::pow(nn, static_cast<unsigned>(p)) * fib_value);
    };
    fill_poly(t.deg_p0, fib(nn));
    fill_poly(t.deg_p1, fib(nn - 1));
    if (t.has_const) m(n, col++) = 1;
    if (t.has_alt) m(n, col++) = sign_power(nn);
  }
  return m;
}

// Assembles the expression for coefficient values given in slot order.
inline FibExpr expr_from_slots(const Template& t, std::span<const Rational> slots) {
  if (slots.size() != t.unknowns()) throw UsageError("expected " + std::to_string(t.unknowns()) + " coefficients");
  std::size_t i = 0;
  auto take_poly = [&](const Degree& deg) {
    if (!deg) return RatPoly{};
    std::vector<Rational> asc(*deg + 1, Rational(0));
    for (std::size_t p = *deg + 1; p-- > 0;) asc[p] = slots[i++];
    return RatPoly(std::move(asc));
  };
  RatPoly p0 = take_poly(t.deg_p0);
  RatPoly p1 = take_poly(t.deg_p1);
  Rational e = t.has_const ? slots[i++] : Rational(0);
  Rational f = t.has_alt ? slots[i++] : Rational(0);
  return FibExpr({{Int(0), std::move(p0)}, {Int(1), std::move(p1)}}, std::move(e), std::move(f));
}

inline RatMatrix symbolic_inverse(const Template& t) {
  if (t.unknowns() == 0) throw UsageError("template has no unknowns");
  std::optional<RatMatrix> inv = invert(build_system(t));
  if (!inv) throw DegenerateTemplate("template system is singular at n = 0.." + std::to_string(t.unknowns() - 1));
  return *inv;
}

inline SynthSolution solve_template(const Template& t, std::span<const Rational> values) {
  if (t.unknowns() == 0) throw UsageError("template has no unknowns");
  if (values.size() != t.unknowns())
    throw UsageError("template needs " + std::to_string(t.unknowns()) + " values, got " + std::to_string(values.size()));
  const RatMatrix inv = symbolic_inverse(t);
  std::vector<Rational> slots(values.size(), Rational(0));
  for (std::size_t r = 0; r < inv.rows(); ++r)
    for (std::size_t c = 0; c < inv.cols(); ++c) slots[r] += inv(r, c) * values[c];
  SynthSolution s{expr_from_slots(t, slots), {}};
  for (std::size_t i = 0; i < slots.size(); ++i) s.coefficients.emplace_back(slot_name(i), slots[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Closed-form families

enum class Theorem {
  linear_linear = 1,         // (an+b)F_n + (cn+d)F_{n-1}
  quadratic_quadratic = 2,   // (an^2+bn+c)F_n + (dn^2+en+f)F_{n-1}
  quadratic_linear = 3,      // (an^2+bn+c)F_n + (dn+e)F_{n-1}
  linear_const_alt = 4,      // (an+b)F_n + (cn+d)F_{n-1} + e + f(-1)^n
};

inline Template theorem_template(Theorem which) {
  switch (which) {
    case Theorem::linear_linear: return {1, 1, false, false};
    case Theorem::quadratic_quadratic: return {2, 2, false, false};
    case Theorem::quadratic_linear: return {2, 1, false, false};
    case Theorem::linear_const_alt: return {1, 1, true, true};
  }
  throw UsageError("unknown theorem");
}

inline Theorem theorem_from_int(int which) {
  if (which < 1 || which > 4) throw UsageError("theorem must be 1, 2, 3 or 4");
  return static_cast<Theorem>(which);
}

/// One closed-form coefficient: (sum numerators[i] * z_{i+1}) / denominator.
struct ClosedFormRow {
  std::vector<long> numerators;
  long denominator;
};

/**
 * Closed-form coefficient rows of families 1-3, in slot order without the
 * free leading parameter (d, f and e respectively, which is the last slot).
 * The z parameters are z_1 = w_1, z_2 = w_2 - w_0, z_3 = w_3 - w_0,
 * z_4 = w_4 - 2 w_0, z_5 = w_5 - 3 w_0.
 */
inline std::vector<ClosedFormRow> closed_form_rows(Theorem which) {
  switch (which) {
    case Theorem::linear_linear:
      return {{{-1, -3, 2}, 5}, {{6, 3, -2}, 5}, {{-2, 4, -1}, 5}};
    case Theorem::quadratic_quadratic:
      return {{{-1, 3, 1, -3, 1}, 10},
              {{-5, -75, 15, 45, -17}, 50},
              {{30, 30, -10, -15, 6}, 25},
              {{3, -4, -3, 4, -1}, 10},
              {{-45, 80, 15, -40, 11}, 50}};
    case Theorem::quadratic_linear:
      return {{{2, -1, -2, 1}, 10}, {{-56, -7, 66, -23}, 50}, {{48, 6, -28, 9}, 25}, {{-6, 18, -9, 2}, 25}};
    case Theorem::linear_const_alt:
      break;
  }
  throw UsageError("family 4 has no z-parameter closed form here; use solve_template");
}

/// Multiplier of w_0 hidden in w_i for the z-substitution (F_{i-1}).
inline Int lead_multiplier(std::size_t i) { return fib(Int(i) - 1); }

/**
 * Builds a member of one of the four families from integer parameters.
 *
 *  1: (d, z1, z2, z3)    2: (f, z1..z5)    3: (e, z1..z4)    4: (w0..w5)
 *
 * Families 1-3 go through their closed forms; family 4 is solved from its
 * initial values.
 */
inline FibExpr theorem_construct(Theorem which, std::span<const Int> params) {
  const Template t = theorem_template(which);
  if (params.size() != t.unknowns())
    throw UsageError("family " + std::to_string(static_cast<int>(which)) + " takes " + std::to_string(t.unknowns()) +
                     " parameters, got " + std::to_string(params.size()));
  if (which == Theorem::linear_const_alt) {
    std::vector<Rational> w(params.begin(), params.end());
    return solve_template(t, w).expr;
  }
  const std::span<const Int> z = params.subspan(1);
  std::vector<Rational> slots;
  for (const ClosedFormRow& row : closed_form_rows(which)) {
    Int acc = 0;
    for (std::size_t i = 0; i < row.numerators.size(); ++i) acc += row.numerators[i] * z[i];
    slots.push_back(make_rational(acc, row.denominator));
  }
  slots.emplace_back(params[0]);
  return expr_from_slots(t, slots);
}

// w_0..w_{k-1} corresponding to (lead, z_1, ...) for families 1-3.
inline std::vector<Rational> theorem_initial_values(std::span<const Int> params) {
  std::vector<Rational> w;
  w.emplace_back(params[0]);
  for (std::size_t i = 1; i < params.size(); ++i) w.emplace_back(params[i] + lead_multiplier(i) * params[0]);
  return w;
}

}  // namespace fibform
