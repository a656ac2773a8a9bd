#include "ulam/enumeration.hpp"

#include <stdexcept>

namespace ulam {

std::uint64_t factorial64(int n) {
  if (n < 0 || n > 20) {
    throw std::invalid_argument("factorial64 needs 0 <= n <= 20");
  }
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) {
    r *= static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t permutation_rank(const Permutation& pi) {
  const int n = pi.size();
  if (n > 20) {
    throw std::invalid_argument("rank only fits 64 bits for n <= 20");
  }
  const auto& e = pi.entries();
  std::uint64_t rank = 0;
  std::uint64_t base = factorial64(n - 1);
  // Lehmer digit at position i counts later entries smaller than e[i].
  for (int i = 0; i < n - 1; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      smaller += e[j] < e[i];
    }
    rank += static_cast<std::uint64_t>(smaller) * base;
    base /= static_cast<std::uint64_t>(n - 1 - i);
  }
  return rank;
}

Permutation permutation_unrank(int n, std::uint64_t rank) {
  if (n < 1 || n > 20 || rank >= factorial64(n)) {
    throw std::invalid_argument("unrank out of range");
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pool[i] = i + 1;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  std::uint64_t base = factorial64(n - 1);
  for (int i = n - 1; i >= 1; --i) {
    const auto d = static_cast<std::size_t>(rank / base);
    rank %= base;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    base /= static_cast<std::uint64_t>(i);
  }
  out.push_back(pool[0]);
  return Permutation(std::move(out));
}

}  // namespace ulam
