#include "cspar/cover.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "union_find.hpp"

namespace cspar {

std::pair<WeightedGraph, CoverMap> bipartite_double_cover(const WeightedGraph& g) {
  if (!g.directed())
    fail(errc::bad_parameters, "double cover is defined for directed graphs");
  const int n = g.vertex_count();
  CoverMap m{n, 2};
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    edges.push_back({m.to_cover(e.u, 0), m.to_cover(e.v, 1), e.weight});
  return {WeightedGraph(2 * n, /*directed=*/false, std::move(edges),
                        /*left_size=*/n),
          m};
}

std::pair<KUniformHypergraph, CoverMap> k_fold_cover(const KUniformHypergraph& h) {
  const int n = h.vertex_count();
  const int k = h.arity();
  CoverMap m{n, k};
  std::vector<HyperEdge> edges;
  edges.reserve(h.edge_count());
  for (const HyperEdge& e : h.edges()) {
    HyperEdge lifted;
    lifted.weight = e.weight;
    lifted.vertices.reserve(k);
    for (int t = 0; t < k; ++t)
      lifted.vertices.push_back(m.to_cover(e.vertices[t], t));
    edges.push_back(std::move(lifted));
  }
  return {KUniformHypergraph(k * n, k, std::move(edges)), m};
}

WeightedGraph auxiliary_graph(const KaryPredicate& p) {
  if (p.arity() != 2)
    fail(errc::not_binary, "auxiliary graph needs a binary predicate");
  const int r = p.domain_size(0);
  std::vector<Edge> edges;
  for (const Tuple& t : p.sorted_support())
    edges.push_back({t[0], r + t[1], 1.0});
  return WeightedGraph(r + p.domain_size(1), /*directed=*/false, std::move(edges),
                       /*left_size=*/r);
}

WeightedGraph bipartite_complement(const WeightedGraph& g) {
  if (!g.bipartite())
    fail(errc::not_bipartite, "complement needs a graph with a bipartition");
  const int l = *g.left_size();
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> present(l, std::vector<bool>(n - l, false));
  for (const Edge& e : g.edges()) {
    const int u = std::min(e.u, e.v);
    const int v = std::max(e.u, e.v);
    present[u][v - l] = true;
  }
  std::vector<Edge> edges;
  for (int u = 0; u < l; ++u)
    for (int v = l; v < n; ++v)
      if (!present[u][v - l]) edges.push_back({u, v, 1.0});
  return WeightedGraph(n, /*directed=*/false, std::move(edges), l);
}

Colouring biclique_colouring(const KaryPredicate& p) {
  auto cls = classify(p);
  if (!cls.sparsifiable)
    fail(errc::not_sparsifiable,
         "predicate has a singleton 2x2 restriction; no colouring exists");

  const int r = p.domain_size(0);
  const int s = p.domain_size(1);
  const int n = r + s;
  WeightedGraph comp = bipartite_complement(auxiliary_graph(p));

  detail::UnionFind uf(n);
  for (const Edge& e : comp.edges()) uf.unite(e.u, e.v);

  // Components numbered by smallest member; left vertices come first by id.
  std::vector<int> colour_of_root(n, -1);
  int colours = 0;
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (colour_of_root[root] < 0) colour_of_root[root] = colours++;
    colour[v] = colour_of_root[root];
  }

  // Each component with an edge must be a biclique across the bipartition.
  std::vector<int> left_count(colours, 0), right_count(colours, 0);
  std::vector<long> edge_count(colours, 0);
  for (int v = 0; v < n; ++v)
    (v < r ? left_count : right_count)[colour[v]] += 1;
  for (const Edge& e : comp.edges()) edge_count[colour[e.u]] += 1;
  for (int c = 0; c < colours; ++c) {
    if (edge_count[c] == 0) continue;
    if (edge_count[c] != static_cast<long>(left_count[c]) * right_count[c])
      fail(errc::biclique_violation,
           "complement component " + std::to_string(c) +
               " is not a complete bipartite graph");
  }

  Colouring out;
  out.colour_count = colours;
  out.left.assign(colour.begin(), colour.begin() + r);
  out.right.assign(colour.begin() + r, colour.end());
  return out;
}

std::vector<int> lift_assignment(const Assignment& a, const Colouring& c,
                                 const CoverMap& m) {
  if (m.layers != 2)
    fail(errc::bad_parameters, "assignment lifting needs a two-layer cover");
  if (static_cast<int>(a.size()) != m.base_vertices)
    fail(errc::invalid_assignment, "assignment size differs from the base graph");
  std::vector<int> lifted(m.cover_vertex_count(), -1);
  for (int v = 0; v < m.base_vertices; ++v) {
    const Label x = a[v];
    if (x < 0) fail(errc::invalid_assignment, "negative label");
    if (x < static_cast<int>(c.left.size()))
      lifted[m.to_cover(v, 0)] = c.left[x];
    if (x < static_cast<int>(c.right.size()))
      lifted[m.to_cover(v, 1)] = c.right[x];
  }
  return lifted;
}

PruneResult prune_isolated(const WeightedGraph& g) {
  const auto deg = g.degrees();
  std::vector<int> kept;
  std::vector<int> new_id(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 0) {
      new_id[v] = static_cast<int>(kept.size());
      kept.push_back(v);
    }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    edges.push_back({new_id[e.u], new_id[e.v], e.weight});
  std::optional<int> left;
  if (g.left_size()) {
    int count = 0;
    for (int v : kept)
      if (v < *g.left_size()) ++count;
    left = count;
  }
  return {WeightedGraph(static_cast<int>(kept.size()), g.directed(),
                        std::move(edges), left),
          std::move(kept)};
}

std::vector<int> nor_lift(const std::vector<int>& labels, const KaryPredicate& p,
                          const CoverMap& m) {
  if (!is_singleton(p))
    fail(errc::not_singleton, "partition lift needs a singleton predicate");
  auto r = p.uniform_domain();
  if (!r)
    fail(errc::non_uniform_domains, "partition lift needs a single domain");
  if (p.arity() != m.layers)
    fail(errc::bad_parameters, "cover layer count differs from predicate arity");
  if (static_cast<int>(labels.size()) != m.base_vertices)
    fail(errc::not_a_partition, "one part id per base vertex required");
  const Tuple a = *p.support().begin();
  std::vector<int> lifted(m.cover_vertex_count());
  for (int v = 0; v < m.base_vertices; ++v) {
    if (labels[v] < 0 || labels[v] >= *r)
      fail(errc::not_a_partition, "part id out of range");
    for (int t = 0; t < m.layers; ++t)
      lifted[m.to_cover(v, t)] = (labels[v] + a[t]) % *r;
  }
  return lifted;
}

}  // namespace cspar
