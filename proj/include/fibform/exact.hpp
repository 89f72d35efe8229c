#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic kernel: big integers, rationals, Q(sqrt 5) and
 *        dense univariate polynomials over any of them.
 *
 * Nothing in here touches floating point. Rationals are always kept in
 * lowest terms with a positive denominator (zero is 0/1), which is what
 * boost::multiprecision's rational adaptor guarantees.
 *
 * Polynomials are dense, ascending by degree, and never carry a trailing
 * zero coefficient. The zero polynomial has no degree at all: degree()
 * returns an empty Degree, and callers have to branch on that.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibform {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Degree of a polynomial; empty for the zero polynomial.
using Degree = std::optional<std::size_t>;

// Division by zero and friends.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad arguments from a caller: wrong counts, out-of-range sizes.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  return Rational(num, den);
}

inline Rational divide(const Rational& a, const Rational& b) {
  if (b == 0) throw ArithmeticError("division by zero");
  return Rational(a / b);
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Int numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// (-1)^k for any integer k.
inline int sign_power(const Int& k) { return boost::multiprecision::bit_test(abs(k), 0) ? -1 : 1; }

/// Decimal digit string to Int. cpp_int's own string constructor reads a
/// leading 0 as an octal prefix, so leading zeros are dropped first.
/// Pre: digits is non-empty and all ASCII digits.
inline Int from_decimal(std::string_view digits) {
  std::size_t first = 0;
  while (first + 1 < digits.size() && digits[first] == '0') ++first;
  return Int(std::string(digits.substr(first)));
}

// "num" or "num/den".
inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rational& r) {
  const Int den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// Q(sqrt 5)

/// r + s*sqrt(5) with rational r, s.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(Rational r) : r_(std::move(r)) {}  // NOLINT: implicit embedding of Q
  QuadRat(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

  static QuadRat sqrt5() { return {Rational(0), Rational(1)}; }
  static QuadRat alpha() { return {Rational(1, 2), Rational(1, 2)}; }
  static QuadRat beta() { return {Rational(1, 2), Rational(-1, 2)}; }

  const Rational& rational_part() const { return r_; }
  const Rational& sqrt5_part() const { return s_; }

  bool is_zero() const { return r_ == 0 && s_ == 0; }

  QuadRat conjugate() const { return {r_, Rational(-s_)}; }

  // r^2 - 5 s^2; zero only for zero since sqrt 5 is irrational.
  Rational norm() const { return Rational(r_ * r_ - 5 * s_ * s_); }

  QuadRat inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in Q(sqrt 5)");
    const Rational n = norm();
    return {Rational(r_ / n), Rational(-s_ / n)};
  }

  QuadRat operator-() const { return {Rational(-r_), Rational(-s_)}; }

  friend QuadRat operator+(const QuadRat& a, const QuadRat& b) {
    return {Rational(a.r_ + b.r_), Rational(a.s_ + b.s_)};
  }
  friend QuadRat operator-(const QuadRat& a, const QuadRat& b) {
    return {Rational(a.r_ - b.r_), Rational(a.s_ - b.s_)};
  }
  friend QuadRat operator*(const QuadRat& a, const QuadRat& b) {
    return {Rational(a.r_ * b.r_ + 5 * a.s_ * b.s_), Rational(a.r_ * b.s_ + a.s_ * b.r_)};
  }
  friend QuadRat operator/(const QuadRat& a, const QuadRat& b) { return a * b.inverse(); }

  QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
  QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
  QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }

  friend bool operator==(const QuadRat& a, const QuadRat& b) { return a.r_ == b.r_ && a.s_ == b.s_; }

  friend std::ostream& operator<<(std::ostream& os, const QuadRat& q) {
    return os << to_string(q.r_) << " + " << to_string(q.s_) << "*sqrt5";
  }

 private:
  Rational r_{0};
  Rational s_{0};
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials

template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }

  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T{});
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Degree degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T{}; }

  // Horner evaluation.
  T operator()(const T& x) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = T(acc * x + *it);
    return acc;
  }

  Poly operator-() const {
    std::vector<T> v;
    v.reserve(coeffs_.size());
    for (const T& c : coeffs_) v.push_back(T(-c));
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = T(v[i] + a.coeffs_[i]);
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = T(v[i] + b.coeffs_[i]);
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = T(v[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    return Poly(std::move(v));
  }

  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> v;
    v.reserve(p.coeffs_.size());
    for (const T& c : p.coeffs_) v.push_back(T(s * c));
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RatPoly = Poly<Rational>;
using QuadPoly = Poly<QuadRat>;
using IntPoly = Poly<Int>;

inline Rational poly_eval(const RatPoly& p, const Int& n) { return p(Rational(n)); }

inline QuadPoly to_quad(const RatPoly& p) {
  std::vector<QuadRat> v(p.coeffs().begin(), p.coeffs().end());
  return QuadPoly(std::move(v));
}

inline QuadPoly conjugate(const QuadPoly& p) {
  std::vector<QuadRat> v;
  v.reserve(p.coeffs().size());
  for (const QuadRat& c : p.coeffs()) v.push_back(c.conjugate());
  return QuadPoly(std::move(v));
}

/// q(x) = p(x + k), by binomial expansion of every monomial.
inline RatPoly poly_taylor_shift(const RatPoly& p, const Int& k) {
  const auto& c = p.coeffs();
  std::vector<Rational> out(c.size(), Rational(0));
  // row holds C(i, j) * k^(i-j) for the current i
  std::vector<Int> row;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<Int> next(i + 1, Int(0));
    next[i] = 1;
    for (std::size_t j = 0; j < i; ++j) next[j] = row[j] * k + (j > 0 ? row[j - 1] : Int(0));
    row = std::move(next);
    for (std::size_t j = 0; j <= i; ++j) out[j] += c[i] * row[j];
  }
  return RatPoly(std::move(out));
}

template <class T>
Poly<T> pow(Poly<T> base, unsigned long long k) {
  Poly<T> result = Poly<T>::constant(T(1));
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

inline IntPoly intpoly_pow(const IntPoly& base, unsigned long long k) { return pow(base, k); }

/// Human-readable polynomial in descending degree, e.g. "x^4 - 2*x^3 + 1".
template <class T>
std::string poly_to_string(const Poly<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const T& c = p.coeffs()[i];
    if (c == T{}) continue;
    const bool negative = c < 0;
    const T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace fibform
