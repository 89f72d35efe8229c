// Builds one member of each closed-form family, prints it with its
// recurrence and integrality certificate.

#include "fibform/fibform.hpp"

#include <iostream>
#include <vector>

int main() {
  using namespace fibform;
  const std::vector<std::pair<Theorem, std::vector<Int>>> cases = {
      {Theorem::linear_linear, {0, 1, 1, 3}},
      {Theorem::quadratic_quadratic, {0, 0, 1, 4, 12, 31}},
      {Theorem::quadratic_linear, {1, 1, 1, 1, 2}},
      {Theorem::linear_const_alt, {0, 1, 2, 6, 12, 26}},
  };
  for (const auto& [which, params] : cases) {
    const FibExpr e = theorem_construct(which, params);
    const Recurrence r = to_recurrence(e);
    std::cout << "family " << static_cast<int>(which) << ": " << print(e) << "\n";
    std::cout << "  char poly " << poly_to_string(r.char_poly) << "\n  w_0..w_10:";
    for (int n = 0; n <= 10; ++n) std::cout << " " << to_string(evaluate(e, n));
    std::cout << "\n  integral: " << (is_integral(is_integer_sequence(e)) ? "yes" : "no") << "\n";
  }
}
