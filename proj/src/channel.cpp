#include "ulam/channel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ulam {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("bound must be positive");
  }
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x = engine_();
  while (x >= limit) {
    x = engine_();
  }
  return x % bound;
}

std::vector<int> delete_at(const Permutation& pi, const DeletionPattern& pattern) {
  const int n = pi.size();
  if (pattern.positions.size() >= static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cannot delete every position");
  }
  int prev = 0;
  for (int p : pattern.positions) {
    if (p <= prev || p > n) {
      throw std::invalid_argument("pattern positions must be strictly increasing in [1, n]");
    }
    prev = p;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - pattern.positions.size());
  std::size_t next_del = 0;
  for (int i = 1; i <= n; ++i) {
    if (next_del < pattern.positions.size() && pattern.positions[next_del] == i) {
      ++next_del;
      continue;
    }
    out.push_back(pi.entries()[i - 1]);
  }
  return out;
}

std::vector<std::vector<int>> deletion_ball(const Permutation& pi, int t) {
  const int n = pi.size();
  if (t < 0 || t >= n) {
    throw std::invalid_argument("need 0 <= t < n");
  }
  std::vector<std::vector<int>> ball;
  std::vector<int> comb(static_cast<std::size_t>(t));
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    ball.push_back(delete_at(pi, {comb}));
    if (t == 0) {
      break;
    }
    int i = t - 1;
    while (i >= 0 && comb[i] == n - (t - 1 - i)) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++comb[i];
    for (int j = i + 1; j < t; ++j) {
      comb[j] = comb[j - 1] + 1;
    }
  }
  std::sort(ball.begin(), ball.end());
  ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
  return ball;
}

DeletionPattern sample_pattern(int n, int t, Rng& rng) {
  if (t < 0 || t >= n) {
    throw std::invalid_argument("need 0 <= t < n");
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  for (int k = 0; k < t; ++k) {
    const auto j = static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - k)));
    std::swap(pool[k], pool[j]);
  }
  DeletionPattern p;
  p.positions.assign(pool.begin(), pool.begin() + t);
  std::sort(p.positions.begin(), p.positions.end());
  return p;
}

DeletionPattern sample_pattern(int n, int t, std::uint64_t seed) {
  Rng rng(seed);
  return sample_pattern(n, t, rng);
}

}  // namespace ulam
