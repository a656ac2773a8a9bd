#pragma once

#include <optional>
#include <span>

#include "ulam/base_code.hpp"
#include "ulam/permutation.hpp"

namespace ulam {

// A code in S_n correcting up to t symbol deletions in the Ulam metric: the
// permutations whose successor words land in a base codebook of minimum
// Hamming distance 3t+1. Words are kept sorted lexicographically, so
// word(index) and index_of are each other's inverse.
class DeletionCode {
 public:
  DeletionCode(int n, int t, Codebook base, std::vector<Permutation> words);

  int n() const { return n_; }
  int t() const { return t_; }
  const Codebook& base() const { return base_; }

  std::size_t size() const { return words_.size(); }
  const Permutation& word(std::size_t index) const;
  const std::vector<Permutation>& words() const { return words_; }
  std::optional<std::size_t> index_of(const Permutation& pi) const;

  // log2(n! / size): the rate loss against using all of S_n.
  double redundancy_bits() const;

 private:
  int n_ = 0;
  int t_ = 0;
  Codebook base_;
  std::vector<Permutation> words_;
};

// Filters the base codebook down to successor words and pulls each one back
// to its permutation in S_n. Requires base words of length n+1, syndrome
// rows 3t-1 when syndrome-constructed, declared distance >= 3t+1, and
// n+1 >= 3t+1 so the distance is achievable at all.
DeletionCode build_deletion_code(int n, int t, Codebook base);

// The syndrome label whose class captures the most successor words; the
// lexicographically smallest such label on ties. Scanning all of S_n, the
// best class holds at least n!/prime^(3t-1) codewords.
SyndromeLabel best_label(int n, int t);

struct DeletionDecodeResult {
  enum class Status {
    kDecoded,
    kFail,
    kAmbiguous,
  };

  Status status = Status::kFail;
  std::optional<Permutation> word;
};

// Recovers the codeword a received subsequence came from. Works for any
// number of deletions up to the code's t: the missing symbols erase known
// slots of the successor word and each deletion corrupts at most one other
// slot, so erasure-aware Hamming decoding in the base code finishes the job.
DeletionDecodeResult decode_deletions(const DeletionCode& code, std::span<const int> received);

// Exhaustive pairwise check that distinct words stay at Ulam distance > t.
bool verify_deletion_code(std::span<const Permutation> words, int t);

// True when a and b share a word in their deletion balls, i.e. their Ulam
// distance is at most t.
bool confusable(const Permutation& a, const Permutation& b, int t);

}  // namespace ulam
