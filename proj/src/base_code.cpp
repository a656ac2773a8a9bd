#include "ulam/base_code.hpp"

#include <algorithm>
#include <stdexcept>

#include "ulam/enumeration.hpp"
#include "ulam/parallel.hpp"

namespace ulam {

namespace {

void check_enumerable(const FieldParams& params) {
  if (params.word_length > kMaxEnumerationLength) {
    throw std::invalid_argument("word length exceeds the enumeration cap");
  }
}

void check_label(const SyndromeLabel& label, const FieldParams& params) {
  if (static_cast<int>(label.size()) != params.syndrome_rows) {
    throw std::invalid_argument("label length must equal syndrome_rows");
  }
  for (int c : label) {
    if (c < 0 || c >= params.prime) {
      throw std::invalid_argument("label residues must lie in [0, prime)");
    }
  }
}

int hamming_raw(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i];
  }
  return d;
}

}  // namespace

int smallest_prime_geq(int m) {
  if (m < 1) {
    throw std::invalid_argument("m must be positive");
  }
  for (int p = std::max(m, 2);; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      return p;
    }
  }
}

FieldParams make_field_params(int word_length, int syndrome_rows) {
  if (word_length < 2) {
    throw std::invalid_argument("word_length must be at least 2");
  }
  if (syndrome_rows < 0) {
    throw std::invalid_argument("syndrome_rows must be non-negative");
  }
  return {word_length, smallest_prime_geq(word_length), syndrome_rows};
}

SyndromeLabel syndrome(std::span<const int> word, const FieldParams& params) {
  if (static_cast<int>(word.size()) != params.word_length) {
    throw std::invalid_argument("word length mismatch");
  }
  const auto p = static_cast<std::uint64_t>(params.prime);
  SyndromeLabel s(static_cast<std::size_t>(params.syndrome_rows), 0);
  for (int i = 1; i <= params.word_length; ++i) {
    std::uint64_t power = 1;
    for (int k = 0; k < params.syndrome_rows; ++k) {
      power = power * static_cast<std::uint64_t>(i) % p;
      const auto term = power * static_cast<std::uint64_t>(word[i - 1]) % p;
      s[k] = static_cast<int>((static_cast<std::uint64_t>(s[k]) + term) % p);
    }
  }
  return s;
}

SyndromeLabel syndrome(const Permutation& word, const FieldParams& params) {
  return syndrome(std::span<const int>(word.entries()), params);
}

Codebook::Codebook(FieldParams params, Construction construction, SyndromeLabel label,
                   int min_distance, std::vector<Permutation> words)
    : params_(params),
      construction_(construction),
      label_(std::move(label)),
      min_distance_(min_distance),
      words_(std::move(words)) {
  for (const Permutation& w : words_) {
    if (w.size() != params_.word_length) {
      throw std::invalid_argument("codeword length mismatch");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("duplicate codewords");
  }
}

const Permutation& Codebook::word(std::size_t index) const {
  if (index >= words_.size()) {
    throw std::out_of_range("codeword index out of range");
  }
  return words_[index];
}

std::optional<std::size_t> Codebook::index_of(const Permutation& w) const {
  const auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - words_.begin());
}

Codebook build_syndrome_class(const FieldParams& params, const SyndromeLabel& label) {
  check_enumerable(params);
  check_label(label, params);
  const std::uint64_t total = factorial64(params.word_length);
  auto chunks = parallel_chunks<std::vector<Permutation>>(
      total, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<Permutation> kept;
        std::vector<int> v = permutation_unrank(params.word_length, begin).entries();
        for (std::uint64_t r = begin; r < end; ++r) {
          if (syndrome(std::span<const int>(v), params) == label) {
            kept.emplace_back(v);
          }
          std::next_permutation(v.begin(), v.end());
        }
        return kept;
      });
  std::vector<Permutation> words;
  for (auto& chunk : chunks) {
    words.insert(words.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
  }
  return Codebook(params, Construction::kSyndrome, label, params.syndrome_rows + 2,
                  std::move(words));
}

Codebook build_greedy(const FieldParams& params, int min_distance) {
  check_enumerable(params);
  if (min_distance < 1) {
    throw std::invalid_argument("min_distance must be positive");
  }
  std::vector<Permutation> kept;
  for_each_permutation(params.word_length, [&](std::span<const int> v) {
    for (const Permutation& w : kept) {
      int d = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        d += w.entries()[i] != v[i];
      }
      if (d < min_distance) {
        return;
      }
    }
    kept.emplace_back(std::vector<int>(v.begin(), v.end()));
  });
  return Codebook(params, Construction::kGreedy, {}, min_distance, std::move(kept));
}

bool verify_min_distance(const Codebook& book, int min_distance) {
  const std::size_t m = book.size();
  if (m < 2) {
    return true;
  }
  auto chunks = parallel_chunks<bool>(m - 1, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (hamming_raw(book.word(i).entries(), book.word(j).entries()) < min_distance) {
          return false;
        }
      }
    }
    return true;
  });
  return std::all_of(chunks.begin(), chunks.end(), [](bool ok) { return ok; });
}

HammingDecodeResult decode_hamming(const ErasedWord& received, const Codebook& book,
                                   int max_substitutions, int max_erasures) {
  if (received.length() != book.params().word_length) {
    throw std::invalid_argument("received length mismatch");
  }
  if (max_substitutions < 0 || max_erasures < 0) {
    throw std::invalid_argument("error budgets must be non-negative");
  }
  if (received.erased_count() > max_erasures) {
    throw std::invalid_argument("received word has more erasures than the budget");
  }
  HammingDecodeResult result;
  for (const Permutation& w : book.words()) {
    int mismatches = 0;
    for (int i = 0; i < received.length(); ++i) {
      const int r = received.entries()[i];
      mismatches += r != kErased && r != w.entries()[i];
    }
    if (mismatches > max_substitutions) {
      continue;
    }
    if (result.status == HammingDecodeResult::Status::kDecoded) {
      return {HammingDecodeResult::Status::kAmbiguous, std::nullopt};
    }
    result.status = HammingDecodeResult::Status::kDecoded;
    result.word = w;
  }
  return result;
}

}  // namespace ulam
