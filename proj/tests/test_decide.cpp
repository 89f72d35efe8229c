#include "fibform/decide.hpp"
#include "fibform/parser.hpp"
#include "fibform/synth.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"
#include "support/reference_exprs.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fibform;
using namespace fibform::testing;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("is_integer_sequence examples") {
  const auto a = is_integer_sequence(a010049());
  REQUIRE(std::holds_alternative<Integral>(a));
  CHECK(std::get<Integral>(a).certificate == ints({0, 1, 1, 3}));

  const auto h = is_integer_sequence(parse("n/2*F(n)"));
  REQUIRE(std::holds_alternative<NonIntegral>(h));
  CHECK(std::get<NonIntegral>(h).witness_n == 1);
  CHECK(std::get<NonIntegral>(h).value == Rational(1, 2));

  const auto q = is_integer_sequence(quadratic_linear_example());
  REQUIRE(std::holds_alternative<Integral>(q));
  CHECK(std::get<Integral>(q).certificate == ints({1, 1, 2, 2, 4, 7}));

  const auto z = is_integer_sequence(FibExpr{});
  REQUIRE(is_integral(z));
  CHECK(std::get<Integral>(z).certificate.empty());
}

TEST_CASE("least non-negative witness is reported") {
  // w_0 = 1/3 is integral? no: 1/3 at every n; w_0 is the first
  const auto c = is_integer_sequence(FibExpr::constant(Rational(1, 3)));
  CHECK(std::get<NonIntegral>(c).witness_n == 0);
  // (n/3) F(n): n = 1 gives 1/3
  const auto w = is_integer_sequence(parse("n/3*F(n)"));
  CHECK(std::get<NonIntegral>(w).witness_n == 1);
}

TEST_CASE("brute_scan examples") {
  CHECK_FALSE(brute_scan(a010049(), -40, 40).has_value());
  CHECK_FALSE(brute_scan(FibExpr{}, -100, 100).has_value());
  // first n in [-10, 10] with n * F_n odd
  std::optional<std::int64_t> expected;
  for (std::int64_t n = -10; n <= 10 && !expected; ++n)
    if (boost::multiprecision::bit_test(abs(Int(n) * naive_fib(n)), 0)) expected = n;
  REQUIRE(expected.has_value());
  const auto got = brute_scan(parse("n/2*F(n)"), -10, 10);
  REQUIRE(got.has_value());
  CHECK(*got == *expected);
}

TEST_CASE("decision agrees with brute force on 200 mixed expressions") {
  Gen g(41);
  int integral = 0;
  for (int i = 0; i < 200; ++i) {
    const FibExpr e = g.family_case(i % 2 == 1);
    const IntegralityVerdict v = is_integer_sequence(e);
    const auto scan = brute_scan(e, -40, 40);
    CHECK(is_integral(v) == !scan.has_value());
    if (const auto* bad = std::get_if<NonIntegral>(&v)) {
      CHECK(evaluate(e, bad->witness_n) == bad->value);
      CHECK(denominator_of(bad->value) > 1);
    } else {
      ++integral;
      CHECK(std::get<Integral>(v).certificate.size() == to_recurrence(e).order);
    }
  }
  CHECK(integral >= 100);  // every unperturbed case is integral
}
