#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ulam/permutation.hpp"

namespace ulam {

// Positions to delete, 1-based and strictly increasing.
struct DeletionPattern {
  std::vector<int> positions;
};

// Seeded generator with hand-rolled range reduction. mt19937_64 is fully
// pinned by the standard and the rejection step below avoids the library
// distributions, whose output may differ between standard library
// implementations; the same seed therefore gives the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// The subsequence of pi left after removing the patterned positions.
std::vector<int> delete_at(const Permutation& pi, const DeletionPattern& pattern);

// Every distinct subsequence reachable by deleting exactly t positions,
// sorted. For a permutation all symbols differ, so this has exactly
// C(n, t) elements.
std::vector<std::vector<int>> deletion_ball(const Permutation& pi, int t);

// Uniform pattern of t distinct positions in [1, n].
DeletionPattern sample_pattern(int n, int t, Rng& rng);
DeletionPattern sample_pattern(int n, int t, std::uint64_t seed);

}  // namespace ulam
