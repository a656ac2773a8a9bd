#pragma once

#include <span>
#include <string>
#include <vector>

#include "ulam/permutation.hpp"

namespace ulam {

// Internal marker for an erased slot. Erased entries print as '*'.
inline constexpr int kErased = 0;

// The successor word of pi in S_n: a permutation w of [n+1] where w_i is the
// symbol that follows i when reading (pi, n+1) cyclically. A deletion in pi
// only disturbs w in a bounded number of positions, which is what makes
// Hamming-metric machinery applicable to deletions.
Permutation successor_word(const Permutation& pi);

// True when w arises as successor_word of some permutation. Equivalent to
// the functional graph i -> w_i being a single (n+1)-cycle, checked by
// walking the cycle through w_{n+1}.
bool is_successor_word(const Permutation& w);

// Recovers the extended permutation whose successor word is w; throws
// std::invalid_argument when w is not in the image.
ExtendedPermutation invert_successor_word(const Permutation& w);

// A word over [m] with some slots erased. Non-erased entries are distinct.
class ErasedWord {
 public:
  // entries may contain kErased; everything else must be distinct and in
  // [1, entries.size()].
  explicit ErasedWord(std::vector<int> entries);

  int length() const { return static_cast<int>(entries_.size()); }
  int entry(int pos) const;  // 1-based; kErased for erased slots
  bool is_erased(int pos) const { return entry(pos) == kErased; }
  int erased_count() const { return erased_count_; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const ErasedWord&) const = default;

 private:
  std::vector<int> entries_;
  int erased_count_ = 0;
};

// Space-separated form with '*' for erased slots, e.g. "4 5 * 2".
std::string to_string(const ErasedWord& w);

// Parses the '*' form back; throws std::invalid_argument on malformed text.
ErasedWord parse_erased_word(const std::string& line);

// The successor word rebuilt from a subsequence of some pi in S_n that lost
// t = n - received.size() symbols. Successors that are still observable are
// filled in; the slots for deleted symbols are erased. Compared against
// successor_word(pi), the result has at most t substitutions plus exactly t
// erasures.
ErasedWord erased_successor_word(std::span<const int> received, int n);

}  // namespace ulam
