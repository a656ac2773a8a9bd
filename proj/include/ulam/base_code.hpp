#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ulam/mapping.hpp"
#include "ulam/permutation.hpp"

namespace ulam {

// Parameters of a permutation code in S_word_length used for its Hamming
// distance. prime is the modulus for the moment syndromes; it must be the
// smallest prime >= word_length so that the evaluation points 1..word_length
// stay distinct mod prime.
struct FieldParams {
  int word_length = 0;
  int prime = 0;
  int syndrome_rows = 0;

  bool operator==(const FieldParams&) const = default;
};

int smallest_prime_geq(int m);

FieldParams make_field_params(int word_length, int syndrome_rows);

// Residues (s_1, ..., s_r) mod prime with s_k = sum_i i^k w_i. Together with
// the constant symbol sum this pins an (r+1)-row Vandermonde system, so two
// distinct words sharing a label differ in at least r+2 positions.
using SyndromeLabel = std::vector<int>;

SyndromeLabel syndrome(std::span<const int> word, const FieldParams& params);
SyndromeLabel syndrome(const Permutation& word, const FieldParams& params);

enum class Construction {
  kSyndrome,
  kGreedy,
};

// Words cannot be enumerated past this length here; S_11 and beyond is out
// of desk range.
inline constexpr int kMaxEnumerationLength = 10;

// A permutation code in S_word_length with a declared minimum Hamming
// distance. Words are kept sorted lexicographically.
class Codebook {
 public:
  Codebook(FieldParams params, Construction construction, SyndromeLabel label,
           int min_distance, std::vector<Permutation> words);

  const FieldParams& params() const { return params_; }
  Construction construction() const { return construction_; }

  // The defining label for syndrome classes; empty for greedy codebooks.
  const SyndromeLabel& label() const { return label_; }

  // Declared minimum distance: syndrome_rows + 2 for a syndrome class, the
  // requested distance for a greedy build. verify_min_distance checks it.
  int min_distance() const { return min_distance_; }

  std::size_t size() const { return words_.size(); }
  const Permutation& word(std::size_t index) const;
  const std::vector<Permutation>& words() const { return words_; }
  std::optional<std::size_t> index_of(const Permutation& w) const;

 private:
  FieldParams params_;
  Construction construction_;
  SyndromeLabel label_;
  int min_distance_ = 0;
  std::vector<Permutation> words_;
};

// All words of S_word_length whose syndrome equals label.
Codebook build_syndrome_class(const FieldParams& params, const SyndromeLabel& label);

// First-fit scan of S_word_length in lexicographic order, keeping words at
// Hamming distance >= min_distance from everything kept so far.
Codebook build_greedy(const FieldParams& params, int min_distance);

// Exhaustive pairwise check that distinct codewords are at Hamming distance
// >= min_distance.
bool verify_min_distance(const Codebook& book, int min_distance);

struct HammingDecodeResult {
  enum class Status {
    kDecoded,
    kFail,       // no codeword within the error budget
    kAmbiguous,  // several codewords within the budget; never guessed
  };

  Status status = Status::kFail;
  std::optional<Permutation> word;
};

// Nearest-codeword decoding under max_substitutions substitution errors on
// the non-erased slots; received.erased_count() must not exceed
// max_erasures. Unique whenever the book's true minimum distance exceeds
// 2 * max_substitutions + max_erasures.
HammingDecodeResult decode_hamming(const ErasedWord& received, const Codebook& book,
                                   int max_substitutions, int max_erasures);

}  // namespace ulam
