#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "ulam/permutation.hpp"

namespace ulam {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_factorial(int n);
BigInt big_binomial(int n, int k);

// Gilbert-Varshamov style floor on the best t-deletion code size:
// ceil(n! / (C(n,t) * t! * C(n,t))), from the confusability degree bound.
BigInt gv_lower(int n, int t);

// Sphere-packing style ceiling: floor(n! / (t! * C(n,t))), since codeword
// deletion balls of size C(n,t) must stay disjoint inside the n!/t! distinct
// deleted words.
BigInt sphere_upper(int n, int t);

// Exact value of the comparison-construction size
// ((2n/t)!)^(t/2) / ((n+1)^(3t/2-4) * (2n/t)^(t/2)). Only defined for even t
// dividing 2n; throws std::domain_error otherwise. At small n this formula
// can exceed n!, so report it with that caveat rather than clamping.
BigRat gabrys_size(int n, int t);

struct BollobasBound {
  double value = 0;
  // Set when a zero triangle count was replaced by one to keep the log
  // finite.
  bool triangles_clamped = false;
};

// Independence-number bound V/(10 max_degree) * (log2(max_degree) -
// log2(triangles/V)/2) evaluated on measured graph statistics. A graph with
// no edges trivially has independence number V; that value is returned
// directly in that degenerate case.
BollobasBound bollobas_bound(std::int64_t vertices, std::int64_t max_degree,
                             std::int64_t triangles);

// The graph on S_n joining permutations at Ulam distance <= t (equivalently,
// with intersecting t-deletion balls). Vertices are lexicographic ranks.
class ConfusabilityGraph {
 public:
  ConfusabilityGraph(int n, int t, std::vector<std::vector<std::uint32_t>> adjacency);

  int n() const { return n_; }
  int t() const { return t_; }
  std::uint64_t vertex_count() const { return adjacency_.size(); }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t rank) const;

  int max_degree() const { return max_degree_; }
  std::uint64_t edge_count() const { return edge_count_; }
  std::uint64_t triangle_count() const { return triangle_count_; }

 private:
  int n_ = 0;
  int t_ = 0;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  int max_degree_ = 0;
  std::uint64_t edge_count_ = 0;
  std::uint64_t triangle_count_ = 0;
};

// Builds the graph by pairwise Ulam distance; max_n guards the quadratic
// sweep (7! already means 12.7 million pairs).
ConfusabilityGraph build_confusability_graph(int n, int t, int max_n = 7);

// First-fit independent set scanning vertices in rank order. The result is a
// valid t-deletion code and, by the greedy degree argument, has at least
// gv_lower(n, t) elements.
std::vector<Permutation> greedy_independent_set(const ConfusabilityGraph& graph);

}  // namespace ulam
