#include "ulam/deletion_code.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ulam/channel.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/mapping.hpp"
#include "ulam/metrics.hpp"
#include "ulam/parallel.hpp"

namespace ulam {

DeletionCode::DeletionCode(int n, int t, Codebook base, std::vector<Permutation> words)
    : n_(n), t_(t), base_(std::move(base)), words_(std::move(words)) {
  if (n < 2 || t < 1 || t >= n) {
    throw std::invalid_argument("need n >= 2 and 1 <= t < n");
  }
  for (const Permutation& w : words_) {
    if (w.size() != n) {
      throw std::invalid_argument("codeword length mismatch");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("duplicate codewords");
  }
}

const Permutation& DeletionCode::word(std::size_t index) const {
  if (index >= words_.size()) {
    throw std::out_of_range("codeword index out of range");
  }
  return words_[index];
}

std::optional<std::size_t> DeletionCode::index_of(const Permutation& pi) const {
  const auto it = std::lower_bound(words_.begin(), words_.end(), pi);
  if (it == words_.end() || *it != pi) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - words_.begin());
}

double DeletionCode::redundancy_bits() const {
  double log_fact = 0;
  for (int i = 2; i <= n_; ++i) {
    log_fact += std::log2(static_cast<double>(i));
  }
  return log_fact - std::log2(static_cast<double>(size()));
}

DeletionCode build_deletion_code(int n, int t, Codebook base) {
  if (n < 2 || t < 1 || t >= n) {
    throw std::invalid_argument("need n >= 2 and 1 <= t < n");
  }
  if (n + 1 < 3 * t + 1) {
    throw std::invalid_argument("need n + 1 >= 3t + 1");
  }
  if (base.params().word_length != n + 1) {
    throw std::invalid_argument("base words must have length n + 1");
  }
  if (base.min_distance() < 3 * t + 1) {
    throw std::invalid_argument("base distance must be at least 3t + 1");
  }
  if (base.construction() == Construction::kSyndrome &&
      base.params().syndrome_rows != 3 * t - 1) {
    throw std::invalid_argument("syndrome base needs 3t - 1 rows");
  }
  std::vector<Permutation> words;
  for (const Permutation& w : base.words()) {
    if (is_successor_word(w)) {
      words.push_back(invert_successor_word(w).base());
    }
  }
  return DeletionCode(n, t, std::move(base), std::move(words));
}

SyndromeLabel best_label(int n, int t) {
  if (n < 2 || t < 1 || t >= n) {
    throw std::invalid_argument("need n >= 2 and 1 <= t < n");
  }
  const FieldParams params = make_field_params(n + 1, 3 * t - 1);
  std::map<SyndromeLabel, std::uint64_t> counts;
  for_each_permutation(n, [&](std::span<const int> v) {
    const Permutation w = successor_word(Permutation(std::vector<int>(v.begin(), v.end())));
    ++counts[syndrome(w, params)];
  });
  SyndromeLabel best;
  std::uint64_t best_count = 0;
  for (const auto& [label, count] : counts) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

DeletionDecodeResult decode_deletions(const DeletionCode& code, std::span<const int> received) {
  const int n = code.n();
  const int lost = n - static_cast<int>(received.size());
  if (lost < 0 || lost > code.t()) {
    throw std::invalid_argument("received length implies more deletions than t");
  }
  const ErasedWord erased = erased_successor_word(received, n);
  const HammingDecodeResult inner =
      decode_hamming(erased, code.base(), code.t(), code.t());
  switch (inner.status) {
    case HammingDecodeResult::Status::kFail:
      return {DeletionDecodeResult::Status::kFail, std::nullopt};
    case HammingDecodeResult::Status::kAmbiguous:
      return {DeletionDecodeResult::Status::kAmbiguous, std::nullopt};
    case HammingDecodeResult::Status::kDecoded:
      break;
  }
  if (!is_successor_word(*inner.word)) {
    return {DeletionDecodeResult::Status::kFail, std::nullopt};
  }
  Permutation pi = invert_successor_word(*inner.word).base();
  if (!code.index_of(pi)) {
    return {DeletionDecodeResult::Status::kFail, std::nullopt};
  }
  return {DeletionDecodeResult::Status::kDecoded, std::move(pi)};
}

bool verify_deletion_code(std::span<const Permutation> words, int t) {
  if (words.size() < 2) {
    return true;
  }
  auto chunks = parallel_chunks<bool>(words.size() - 1, [&](std::uint64_t begin,
                                                            std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (ulam_distance(words[i], words[j]) <= t) {
          return false;
        }
      }
    }
    return true;
  });
  return std::all_of(chunks.begin(), chunks.end(), [](bool ok) { return ok; });
}

bool confusable(const Permutation& a, const Permutation& b, int t) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("size mismatch");
  }
  const auto ball_a = deletion_ball(a, t);
  const auto ball_b = deletion_ball(b, t);
  std::vector<std::vector<int>> common;
  std::set_intersection(ball_a.begin(), ball_a.end(), ball_b.begin(), ball_b.end(),
                        std::back_inserter(common));
  return !common.empty();
}

}  // namespace ulam
