#include "ulam/metrics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "ulam/enumeration.hpp"

namespace ulam {

namespace {

void check_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("size mismatch");
  }
}

void check_distinct(std::span<const int> s) {
  std::vector<int> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::invalid_argument("entries must be distinct");
  }
}

long long count_inversions(std::vector<int>& v, std::vector<int>& scratch, std::size_t lo,
                           std::size_t hi) {
  if (hi - lo <= 1) {
    return 0;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  long long inv = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      scratch[k++] = v[i++];
    } else {
      inv += static_cast<long long>(mid - i);
      scratch[k++] = v[j++];
    }
  }
  while (i < mid) {
    scratch[k++] = v[i++];
  }
  while (j < hi) {
    scratch[k++] = v[j++];
  }
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace

int hamming_distance(const Permutation& a, const Permutation& b) {
  check_same_size(a, b);
  int d = 0;
  for (int i = 0; i < a.size(); ++i) {
    d += a.entries()[i] != b.entries()[i];
  }
  return d;
}

int lcs_length(std::span<const int> a, std::span<const int> b) {
  check_distinct(a);
  check_distinct(b);
  const std::size_t m = b.size();
  std::vector<int> prev(m + 1, 0);
  std::vector<int> cur(m + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cur[j + 1] = a[i] == b[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

int ulam_distance(const Permutation& a, const Permutation& b) {
  check_same_size(a, b);
  return a.size() - lcs_length(a.entries(), b.entries());
}

int levenshtein_distance(const Permutation& a, const Permutation& b) {
  return 2 * ulam_distance(a, b);
}

long long kendall_tau_distance(const Permutation& a, const Permutation& b) {
  check_same_size(a, b);
  // Relabel by a's values: the pair {x, y} is discordant exactly when the
  // sequence b^{-1}(a(i)) has an inversion at the corresponding positions.
  const Permutation binv = b.inverse();
  std::vector<int> seq(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    seq[i] = binv.entries()[a.entries()[i] - 1];
  }
  std::vector<int> scratch(seq.size());
  return count_inversions(seq, scratch, 0, seq.size());
}

std::vector<Permutation> generator_neighbors(const Permutation& pi, GeneratorSet gens) {
  const int n = pi.size();
  std::vector<Permutation> out;
  switch (gens) {
    case GeneratorSet::kAdjacentTransposition:
      for (int i = 1; i < n; ++i) {
        out.push_back(apply_transposition(pi, {i, i + 1}));
      }
      break;
    case GeneratorSet::kTranslocation:
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i != j) {
            out.push_back(apply_translocation(pi, {i, j}));
          }
        }
      }
      break;
    case GeneratorSet::kGeneralizedAdjacentTransposition:
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j < n; ++j) {
          for (int l = j + 1; l <= n; ++l) {
            out.push_back(apply_generalized_transposition(pi, {i, j, j + 1, l}));
          }
        }
      }
      break;
    case GeneratorSet::kGeneralizedTransposition:
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            for (int l = k; l <= n; ++l) {
              out.push_back(apply_generalized_transposition(pi, {i, j, k, l}));
            }
          }
        }
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> bfs_group_distance(const Permutation& from, const Permutation& to,
                                      GeneratorSet gens, std::size_t state_cap) {
  check_same_size(from, to);
  if (from.size() > 20) {
    throw std::invalid_argument("bfs_group_distance needs n <= 20");
  }
  if (from == to) {
    return 0;
  }
  const int n = from.size();
  const std::uint64_t target = permutation_rank(to);
  std::unordered_map<std::uint64_t, int> dist;
  dist.emplace(permutation_rank(from), 0);
  std::deque<std::uint64_t> frontier;
  frontier.push_back(permutation_rank(from));
  while (!frontier.empty()) {
    const std::uint64_t cur_rank = frontier.front();
    frontier.pop_front();
    const Permutation cur = permutation_unrank(n, cur_rank);
    const int d = dist.at(cur_rank);
    for (const Permutation& next : generator_neighbors(cur, gens)) {
      const std::uint64_t r = permutation_rank(next);
      if (dist.contains(r)) {
        continue;
      }
      if (r == target) {
        return d + 1;
      }
      if (dist.size() >= state_cap) {
        return std::nullopt;
      }
      dist.emplace(r, d + 1);
      frontier.push_back(r);
    }
  }
  throw std::logic_error("generator set does not connect the group");
}

std::vector<int> bfs_distances_from(const Permutation& source, GeneratorSet gens) {
  if (source.size() > 10) {
    throw std::invalid_argument("bfs_distances_from needs n <= 10");
  }
  const int n = source.size();
  const std::uint64_t total = factorial64(n);
  std::vector<int> dist(total, -1);
  dist[permutation_rank(source)] = 0;
  std::deque<std::uint64_t> frontier;
  frontier.push_back(permutation_rank(source));
  while (!frontier.empty()) {
    const std::uint64_t cur_rank = frontier.front();
    frontier.pop_front();
    const int d = dist[cur_rank];
    for (const Permutation& next : generator_neighbors(permutation_unrank(n, cur_rank), gens)) {
      const std::uint64_t r = permutation_rank(next);
      if (dist[r] < 0) {
        dist[r] = d + 1;
        frontier.push_back(r);
      }
    }
  }
  return dist;
}

}  // namespace ulam
