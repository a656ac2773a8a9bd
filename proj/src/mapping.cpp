#include "ulam/mapping.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ulam {

Permutation successor_word(const Permutation& pi) {
  const int n = pi.size();
  const ExtendedPermutation ext(pi);
  const auto& e = ext.word().entries();
  std::vector<int> w(static_cast<std::size_t>(n) + 1);
  for (int pos = 0; pos <= n; ++pos) {
    const int value = e[pos];
    const int succ = e[(pos + 1) % (n + 1)];
    w[value - 1] = succ;
  }
  return Permutation(std::move(w));
}

bool is_successor_word(const Permutation& w) {
  const int m = w.size();
  if (m < 2) {
    return false;
  }
  int seen = 0;
  int cur = w.entries()[m - 1];
  while (cur != m && seen < m) {
    cur = w.entries()[cur - 1];
    ++seen;
  }
  // The walk returns to the sentinel after visiting each symbol once exactly
  // when i -> w_i is one full cycle.
  return cur == m && seen == m - 1;
}

ExtendedPermutation invert_successor_word(const Permutation& w) {
  const int m = w.size();
  if (!is_successor_word(w)) {
    throw std::invalid_argument("word is not a successor word");
  }
  std::vector<int> out(static_cast<std::size_t>(m));
  out[0] = w.entries()[m - 1];
  for (int i = 1; i < m; ++i) {
    out[i] = w.entries()[out[i - 1] - 1];
  }
  return ExtendedPermutation::from_word(Permutation(std::move(out)));
}

ErasedWord::ErasedWord(std::vector<int> entries) : entries_(std::move(entries)) {
  const int m = static_cast<int>(entries_.size());
  if (m == 0) {
    throw std::invalid_argument("empty erased word");
  }
  std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
  for (int v : entries_) {
    if (v == kErased) {
      ++erased_count_;
      continue;
    }
    if (v < 1 || v > m || seen[v]) {
      throw std::invalid_argument("erased word entries must be distinct values in [m]");
    }
    seen[v] = 1;
  }
}

int ErasedWord::entry(int pos) const {
  if (pos < 1 || pos > length()) {
    throw std::invalid_argument("position out of range");
  }
  return entries_[pos - 1];
}

std::string to_string(const ErasedWord& w) {
  std::ostringstream os;
  for (int i = 0; i < w.length(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    if (w.entries()[i] == kErased) {
      os << '*';
    } else {
      os << w.entries()[i];
    }
  }
  return os.str();
}

ErasedWord parse_erased_word(const std::string& line) {
  std::istringstream is(line);
  std::vector<int> v;
  std::string tok;
  while (is >> tok) {
    if (tok == "*") {
      v.push_back(kErased);
    } else {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (...) {
        throw std::invalid_argument("malformed erased word token: " + tok);
      }
      if (used != tok.size()) {
        throw std::invalid_argument("malformed erased word token: " + tok);
      }
      v.push_back(x);
    }
  }
  return ErasedWord(std::move(v));
}

ErasedWord erased_successor_word(std::span<const int> received, int n) {
  if (n < 1) {
    throw std::invalid_argument("n must be positive");
  }
  if (received.empty() || received.size() > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("received length must be in [1, n]");
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : received) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("received symbols must be distinct values in [n]");
    }
    seen[v] = 1;
  }
  std::vector<int> w(static_cast<std::size_t>(n) + 1, kErased);
  for (std::size_t j = 0; j < received.size(); ++j) {
    const int succ = j + 1 < received.size() ? received[j + 1] : n + 1;
    w[received[j] - 1] = succ;
  }
  w[n] = received[0];
  return ErasedWord(std::move(w));
}

}  // namespace ulam
