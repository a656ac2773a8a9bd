#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>

#include "ulam/permutation.hpp"

namespace ulam {

// n! as an exact 64-bit value; requires 0 <= n <= 20.
std::uint64_t factorial64(int n);

// Zero-based rank of pi in the lexicographic order of S_n (Lehmer code).
std::uint64_t permutation_rank(const Permutation& pi);

// Inverse of permutation_rank; requires rank < n!.
Permutation permutation_unrank(int n, std::uint64_t rank);

// Calls fn(entries) for every permutation of [n] in lexicographic order.
// The span is only valid for the duration of the call.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(std::span<const int>(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace ulam
