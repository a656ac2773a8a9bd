#include "ulam/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ulam/enumeration.hpp"
#include "ulam/metrics.hpp"
#include "ulam/parallel.hpp"

namespace ulam {

BigInt big_factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial of a negative number");
  }
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

BigInt big_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  return big_factorial(n) / (big_factorial(k) * big_factorial(n - k));
}

BigInt gv_lower(int n, int t) {
  if (n < 1 || t < 0 || t >= n) {
    throw std::invalid_argument("need n >= 1 and 0 <= t < n");
  }
  const BigInt denom = big_binomial(n, t) * big_factorial(t) * big_binomial(n, t);
  return (big_factorial(n) + denom - 1) / denom;
}

BigInt sphere_upper(int n, int t) {
  if (n < 1 || t < 0 || t >= n) {
    throw std::invalid_argument("need n >= 1 and 0 <= t < n");
  }
  return big_factorial(n) / (big_factorial(t) * big_binomial(n, t));
}

BigRat gabrys_size(int n, int t) {
  if (n < 1 || t < 1) {
    throw std::domain_error("need n >= 1 and t >= 1");
  }
  if (t % 2 != 0 || (2 * n) % t != 0) {
    throw std::domain_error("formula needs even t dividing 2n");
  }
  const int block = 2 * n / t;
  const int half_t = t / 2;
  const BigInt numerator = boost::multiprecision::pow(big_factorial(block),
                                                      static_cast<unsigned>(half_t));
  const int denom_exp = 3 * half_t - 4;
  BigRat result(numerator,
                boost::multiprecision::pow(BigInt(block), static_cast<unsigned>(half_t)));
  if (denom_exp >= 0) {
    result /= boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(denom_exp));
  } else {
    result *= boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(-denom_exp));
  }
  return result;
}

BollobasBound bollobas_bound(std::int64_t vertices, std::int64_t max_degree,
                             std::int64_t triangles) {
  if (vertices < 1 || max_degree < 0 || triangles < 0) {
    throw std::invalid_argument("graph statistics out of range");
  }
  if (max_degree == 0) {
    return {static_cast<double>(vertices), false};
  }
  BollobasBound out;
  std::int64_t t = triangles;
  if (t == 0) {
    t = 1;
    out.triangles_clamped = true;
  }
  const double v = static_cast<double>(vertices);
  const double d = static_cast<double>(max_degree);
  out.value = v / (10.0 * d) *
              (std::log2(d) - 0.5 * std::log2(static_cast<double>(t) / v));
  return out;
}

ConfusabilityGraph::ConfusabilityGraph(int n, int t,
                                       std::vector<std::vector<std::uint32_t>> adjacency)
    : n_(n), t_(t), adjacency_(std::move(adjacency)) {
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
    edge_count_ += list.size();
  }
  edge_count_ /= 2;

  // Triangles: for every edge u < v, count common neighbors above v.
  const std::uint64_t total = adjacency_.size();
  auto chunks = parallel_chunks<std::uint64_t>(total, [&](std::uint64_t begin,
                                                          std::uint64_t end) {
    std::uint64_t found = 0;
    for (std::uint64_t u = begin; u < end; ++u) {
      const auto& nu = adjacency_[u];
      for (std::uint32_t v : nu) {
        if (v <= u) {
          continue;
        }
        const auto& nv = adjacency_[v];
        auto iu = std::upper_bound(nu.begin(), nu.end(), v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), v);
        while (iu != nu.end() && iv != nv.end()) {
          if (*iu < *iv) {
            ++iu;
          } else if (*iv < *iu) {
            ++iv;
          } else {
            ++found;
            ++iu;
            ++iv;
          }
        }
      }
    }
    return found;
  });
  for (std::uint64_t c : chunks) {
    triangle_count_ += c;
  }
}

const std::vector<std::uint32_t>& ConfusabilityGraph::neighbors(std::uint32_t rank) const {
  if (rank >= adjacency_.size()) {
    throw std::out_of_range("vertex rank out of range");
  }
  return adjacency_[rank];
}

ConfusabilityGraph build_confusability_graph(int n, int t, int max_n) {
  if (n < 1 || t < 0 || t >= n) {
    throw std::invalid_argument("need n >= 1 and 0 <= t < n");
  }
  if (n > max_n) {
    throw std::invalid_argument("n exceeds the graph size guard");
  }
  const auto total = static_cast<std::size_t>(factorial64(n));
  std::vector<std::vector<int>> one_line;
  one_line.reserve(total);
  for_each_permutation(n, [&](std::span<const int> v) {
    one_line.emplace_back(v.begin(), v.end());
  });
  auto chunks = parallel_chunks<std::vector<std::pair<std::uint32_t, std::uint32_t>>>(
      total, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (std::uint64_t i = begin; i < end; ++i) {
          for (std::size_t j = i + 1; j < total; ++j) {
            const int lcs = lcs_length(one_line[i], one_line[j]);
            if (n - lcs <= t) {
              edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            }
          }
        }
        return edges;
      });
  std::vector<std::vector<std::uint32_t>> adjacency(total);
  for (const auto& edges : chunks) {
    for (const auto& [i, j] : edges) {
      adjacency[i].push_back(j);
      adjacency[j].push_back(i);
    }
  }
  return ConfusabilityGraph(n, t, std::move(adjacency));
}

std::vector<Permutation> greedy_independent_set(const ConfusabilityGraph& graph) {
  const auto total = static_cast<std::uint32_t>(graph.vertex_count());
  std::vector<char> taken(total, 0);
  std::vector<Permutation> out;
  for (std::uint32_t u = 0; u < total; ++u) {
    bool blocked = false;
    for (std::uint32_t v : graph.neighbors(u)) {
      if (taken[v]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      taken[u] = 1;
      out.push_back(permutation_unrank(graph.n(), u));
    }
  }
  return out;
}

}  // namespace ulam
