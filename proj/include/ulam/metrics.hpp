#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ulam/permutation.hpp"

namespace ulam {

// Number of positions where a and b disagree. Sizes must match.
int hamming_distance(const Permutation& a, const Permutation& b);

// Length of a longest common subsequence; plain two-row dynamic program, so
// sequences up to about 10^4 entries are fine. Entries within each argument
// must be distinct.
int lcs_length(std::span<const int> a, std::span<const int> b);

// Ulam distance n - lcs_length(a, b): the fewest translocations turning a
// into b.
int ulam_distance(const Permutation& a, const Permutation& b);

// Insertion/deletion edit distance between the one-line forms; for
// permutations of the same set this is exactly twice the Ulam distance.
int levenshtein_distance(const Permutation& a, const Permutation& b);

// Number of discordant pairs: pairs of values whose relative order differs.
// Counted as inversions of a^{-1} b via merge sort, O(n log n).
long long kendall_tau_distance(const Permutation& a, const Permutation& b);

enum class GeneratorSet {
  kAdjacentTransposition,
  kTranslocation,
  kGeneralizedAdjacentTransposition,
  kGeneralizedTransposition,
};

inline constexpr std::size_t kDefaultBfsStateCap = 10'000'000;

// All distinct permutations one generator application away from pi.
std::vector<Permutation> generator_neighbors(const Permutation& pi, GeneratorSet gens);

// Fewest generator applications turning `from` into `to`, found by breadth
// first search. Every listed generator set is closed under inverses, so this
// is a genuine (right-invariant) metric. Returns std::nullopt when the
// search would visit more than state_cap states; that is a distinct
// "oracle unavailable" outcome, never an approximation.
std::optional<int> bfs_group_distance(const Permutation& from, const Permutation& to,
                                      GeneratorSet gens,
                                      std::size_t state_cap = kDefaultBfsStateCap);

// Distance from source to every permutation of [n], indexed by lexicographic
// rank. Dense table, so this requires n <= 10.
std::vector<int> bfs_distances_from(const Permutation& source, GeneratorSet gens);

}  // namespace ulam
