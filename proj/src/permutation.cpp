#include "ulam/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ulam {

namespace {

void check_position(int pos, int n, const char* what) {
  if (pos < 1 || pos > n) {
    throw std::invalid_argument(std::string(what) + " out of range");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = static_cast<int>(entries_.size());
  if (n == 0) {
    throw std::invalid_argument("empty permutation");
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of [n]");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) {
    throw std::invalid_argument("identity needs n >= 1");
  }
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[i] = i + 1;
  }
  return Permutation(std::move(v));
}

int Permutation::entry(int pos) const {
  check_position(pos, size(), "position");
  return entries_[pos - 1];
}

int Permutation::position_of(int value) const {
  check_position(value, size(), "value");
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] == value) {
      return i + 1;
    }
  }
  throw std::logic_error("value missing from permutation");
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 0; i < size(); ++i) {
    inv[entries_[i] - 1] = i + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (size() != rhs.size()) {
    throw std::invalid_argument("size mismatch in compose");
  }
  std::vector<int> out(entries_.size());
  for (int i = 0; i < size(); ++i) {
    out[i] = entries_[rhs.entries_[i] - 1];
  }
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& pi) {
  std::ostringstream os;
  for (int i = 0; i < pi.size(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    os << pi.entries()[i];
  }
  return os.str();
}

Permutation parse_permutation(const std::string& line) {
  std::istringstream is(line);
  std::vector<int> v;
  int x = 0;
  while (is >> x) {
    v.push_back(x);
  }
  if (!is.eof()) {
    throw std::invalid_argument("malformed permutation line: " + line);
  }
  return Permutation(std::move(v));
}

ExtendedPermutation::ExtendedPermutation(const Permutation& base)
    : word_([&base] {
        std::vector<int> v = base.entries();
        v.push_back(base.size() + 1);
        return Permutation(std::move(v));
      }()) {}

ExtendedPermutation ExtendedPermutation::from_word(Permutation word) {
  if (word.size() < 2 || word.entry(word.size()) != word.size()) {
    throw std::invalid_argument("last entry must be the sentinel n+1");
  }
  return ExtendedPermutation(std::move(word), 0);
}

Permutation ExtendedPermutation::base() const {
  std::vector<int> v(word_.entries().begin(), word_.entries().end() - 1);
  return Permutation(std::move(v));
}

bool GeneralizedTransposition::adjacent() const {
  return a_lo < b_lo ? b_lo - a_hi == 1 : a_lo - b_hi == 1;
}

Permutation apply_translocation(const Permutation& pi, const Translocation& op) {
  const int n = pi.size();
  check_position(op.from, n, "translocation from");
  check_position(op.to, n, "translocation to");
  if (op.from == op.to) {
    throw std::invalid_argument("translocation needs from != to");
  }
  std::vector<int> v = pi.entries();
  if (op.from < op.to) {
    std::rotate(v.begin() + (op.from - 1), v.begin() + op.from, v.begin() + op.to);
  } else {
    std::rotate(v.begin() + (op.to - 1), v.begin() + (op.from - 1), v.begin() + op.from);
  }
  return Permutation(std::move(v));
}

Permutation apply_transposition(const Permutation& pi, const Transposition& op) {
  const int n = pi.size();
  check_position(op.i, n, "transposition i");
  check_position(op.j, n, "transposition j");
  if (op.i == op.j) {
    throw std::invalid_argument("transposition needs i != j");
  }
  std::vector<int> v = pi.entries();
  std::swap(v[op.i - 1], v[op.j - 1]);
  return Permutation(std::move(v));
}

Permutation apply_generalized_transposition(const Permutation& pi,
                                            const GeneralizedTransposition& op) {
  const int n = pi.size();
  GeneralizedTransposition g = op;
  if (g.a_lo > g.b_lo) {
    std::swap(g.a_lo, g.b_lo);
    std::swap(g.a_hi, g.b_hi);
  }
  check_position(g.a_lo, n, "block bound");
  check_position(g.a_hi, n, "block bound");
  check_position(g.b_lo, n, "block bound");
  check_position(g.b_hi, n, "block bound");
  if (g.a_lo > g.a_hi || g.b_lo > g.b_hi || g.a_hi >= g.b_lo) {
    throw std::invalid_argument("blocks must be disjoint intervals");
  }
  const auto& e = pi.entries();
  std::vector<int> v;
  v.reserve(e.size());
  v.insert(v.end(), e.begin(), e.begin() + (g.a_lo - 1));
  v.insert(v.end(), e.begin() + (g.b_lo - 1), e.begin() + g.b_hi);
  v.insert(v.end(), e.begin() + g.a_hi, e.begin() + (g.b_lo - 1));
  v.insert(v.end(), e.begin() + (g.a_lo - 1), e.begin() + g.a_hi);
  v.insert(v.end(), e.begin() + g.b_hi, e.end());
  return Permutation(std::move(v));
}

}  // namespace ulam
