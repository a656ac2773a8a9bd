#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ulam {

// A permutation of [n] = {1, ..., n} in one-line notation. Positions and
// values are both 1-based at this interface.
class Permutation {
 public:
  // Validates that one_line is a bijection on [n]; throws std::invalid_argument.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }

  // Value at position pos, pos in [1, n].
  int entry(int pos) const;

  // Position holding value, i.e. the inverse permutation evaluated at value.
  int position_of(int value) const;

  const std::vector<int>& entries() const { return entries_; }

  Permutation inverse() const;

  // Composition (*this after rhs): result(i) = (*this)(rhs(i)).
  Permutation compose(const Permutation& rhs) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

// Space-separated one-line form, e.g. "1 3 4 2 5".
std::string to_string(const Permutation& pi);

// Parses a space-separated one-line form; throws std::invalid_argument on
// malformed text or a non-permutation.
Permutation parse_permutation(const std::string& line);

// pi with the sentinel n+1 appended, a permutation of [n+1] whose last entry
// is fixed. The successor mapping works on this form.
class ExtendedPermutation {
 public:
  explicit ExtendedPermutation(const Permutation& base);

  // Reinterprets a permutation of [n+1] whose last entry is n+1; throws
  // std::invalid_argument otherwise.
  static ExtendedPermutation from_word(Permutation word);

  // The full (n+1)-entry word.
  const Permutation& word() const { return word_; }

  // The underlying permutation of [n], sentinel stripped.
  Permutation base() const;

  int base_size() const { return word_.size() - 1; }

 private:
  explicit ExtendedPermutation(Permutation word, int) : word_(std::move(word)) {}

  Permutation word_;
};

// Moves the value at position `from` to position `to`; the skipped block
// shifts by one. Requires from != to.
struct Translocation {
  int from = 0;
  int to = 0;
};

// Swaps the values at positions i and j, i != j.
struct Transposition {
  int i = 0;
  int j = 0;
};

// Exchanges the disjoint position blocks [a_lo, a_hi] and [b_lo, b_hi].
// Blocks may have different lengths; everything between them stays put.
struct GeneralizedTransposition {
  int a_lo = 0;
  int a_hi = 0;
  int b_lo = 0;
  int b_hi = 0;

  // True when the two blocks touch with no gap.
  bool adjacent() const;
};

Permutation apply_translocation(const Permutation& pi, const Translocation& op);
Permutation apply_transposition(const Permutation& pi, const Transposition& op);
Permutation apply_generalized_transposition(const Permutation& pi,
                                            const GeneralizedTransposition& op);

}  // namespace ulam

template <>
struct std::hash<ulam::Permutation> {
  std::size_t operator()(const ulam::Permutation& pi) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : pi.entries()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
