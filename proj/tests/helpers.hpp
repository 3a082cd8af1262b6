#ifndef CSPAR_TESTS_HELPERS_HPP
#define CSPAR_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cspar/csp.hpp"
#include "cspar/graph.hpp"
#include "cspar/predicate.hpp"

namespace cspar::testing {

// Running example: 4x4 predicate whose complement splits into three bicliques.
inline KaryPredicate demo_predicate() {
  return KaryPredicate({4, 4}, {{0, 0}, {0, 2}, {0, 3}, {1, 0}, {1, 1},
                                {2, 0}, {2, 1}, {3, 1}, {3, 2}, {3, 3}});
}

// Boolean predicate on {0,1}^2 from a 4-bit support mask; the bit for cell
// (x, y) is x * 2 + y.
inline KaryPredicate boolean_predicate(unsigned mask) {
  std::vector<Tuple> support;
  for (Label x = 0; x < 2; ++x)
    for (Label y = 0; y < 2; ++y)
      if (mask >> (x * 2 + y) & 1) support.push_back({x, y});
  return KaryPredicate({2, 2}, support);
}

inline KaryPredicate random_predicate(int r, int s, std::mt19937_64& rng,
                                      double density = 0.5) {
  std::vector<Tuple> support;
  for (Label x = 0; x < r; ++x)
    for (Label y = 0; y < s; ++y)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density)
        support.push_back({x, y});
  return KaryPredicate({r, s}, support);
}

inline KaryPredicate random_sparsifiable_predicate(int r, int s,
                                                   std::mt19937_64& rng) {
  for (;;) {
    KaryPredicate p = random_predicate(r, s, rng);
    if (classify(p).sparsifiable) return p;
  }
}

// Simple directed graph with the requested edge count (or as many distinct
// ordered pairs as exist) and integer weights in 1..max_weight.
inline WeightedGraph random_directed_graph(int n, int edges, int max_weight,
                                           std::mt19937_64& rng) {
  std::vector<Edge> out;
  std::set<std::pair<int, int>> seen;
  int attempts = 0;
  while (static_cast<int>(out.size()) < edges && attempts < 50 * edges + 100) {
    ++attempts;
    const int u = static_cast<int>(rng() % n);
    const int v = static_cast<int>(rng() % n);
    if (u == v || !seen.insert({u, v}).second) continue;
    out.push_back({u, v, static_cast<double>(1 + rng() % max_weight)});
  }
  return WeightedGraph(n, /*directed=*/true, std::move(out));
}

inline Assignment random_assignment(const std::vector<int>& domains,
                                    std::mt19937_64& rng) {
  Assignment a(domains.size());
  for (std::size_t i = 0; i < domains.size(); ++i)
    a[i] = static_cast<Label>(rng() % domains[i]);
  return a;
}

}  // namespace cspar::testing

#endif
