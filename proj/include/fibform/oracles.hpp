#pragma once

// Brute-force counters used to cross-check closed forms. These enumerate
// objects one by one on purpose; keep n small.

#include "fibform/exact.hpp"

#include <string>
#include <vector>

namespace fibform::oracles {

inline constexpr unsigned max_enumeration_n = 25;

namespace detail {

inline void check_cap(unsigned n) {
  if (n > max_enumeration_n)
    throw UsageError("enumeration capped at n <= " + std::to_string(max_enumeration_n) + ", got " + std::to_string(n));
}

// Sum of part counts over all compositions of `remaining` into parts >= 2.
inline void compositions(unsigned remaining, unsigned parts_so_far, Int& total) {
  if (remaining == 0) {
    total += parts_so_far;
    return;
  }
  for (unsigned part = 2; part <= remaining; ++part) compositions(remaining - part, parts_so_far + 1, total);
}

inline void words(std::vector<int>& word, unsigned length, Int& total) {
  if (word.size() == length) {
    unsigned ones = 0;
    unsigned inversions = 0;
    for (int bit : word) {
      if (bit == 1)
        ++ones;
      else
        inversions += ones;
    }
    total += inversions;
    return;
  }
  word.push_back(0);
  words(word, length, total);
  word.pop_back();
  if (word.empty() || word.back() == 0) {
    word.push_back(1);
    words(word, length, total);
    word.pop_back();
  }
}

}  // namespace detail

/// Total number of parts over all compositions of n+1 with no part equal to 1.
inline Int compositions_parts_count(unsigned n) {
  detail::check_cap(n);
  Int total = 0;
  detail::compositions(n + 1, 0, total);
  return total;
}

/// Total inversions (a 1 before a 0) over binary words of length n with no two adjacent 1s.
inline Int fibonacci_word_inversions(unsigned n) {
  detail::check_cap(n);
  Int total = 0;
  std::vector<int> word;
  word.reserve(n);
  detail::words(word, n, total);
  return total;
}

// L_0 = L_1 = 1, L_n = L_{n-1} + L_{n-2} + 1.
inline Int leonardo(unsigned n) {
  Int prev = 1;
  Int cur = 1;
  for (unsigned i = 1; i < n; ++i) {
    Int next = cur + prev + 1;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace fibform::oracles
