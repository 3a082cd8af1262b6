#ifndef CSPAR_COVER_HPP
#define CSPAR_COVER_HPP

#include <utility>
#include <vector>

#include "cspar/csp.hpp"
#include "cspar/graph.hpp"
#include "cspar/predicate.hpp"

namespace cspar {

/// Bijection between (vertex, layer) pairs of a base graph and the vertices
/// of its layered cover. Layer t occupies cover ids [t*n, (t+1)*n).
struct CoverMap {
  int base_vertices = 0;
  int layers = 2;

  int to_cover(int v, int layer) const { return layer * base_vertices + v; }
  int cover_vertex_count() const { return base_vertices * layers; }
  std::pair<int, int> from_cover(int cover_vertex) const {
    return {cover_vertex % base_vertices, cover_vertex / base_vertices};
  }
};

/// Vertex colouring of the predicate's auxiliary graph. Property (*):
/// supported cells get distinct endpoint colours, unsupported cells equal ones.
struct Colouring {
  int colour_count = 0;
  std::vector<int> left;   // colour of left label vertices, size r
  std::vector<int> right;  // colour of right label vertices, size s
};

/// Bipartite double cover of a directed graph: edge (u,v) lifts to the
/// undirected edge {u^(0), v^(1)}. Never a multigraph, so weights carry over.
std::pair<WeightedGraph, CoverMap> bipartite_double_cover(const WeightedGraph& g);

/// k-partite k-fold cover of a k-uniform hypergraph; k = 2 coincides with the
/// bipartite double cover.
std::pair<KUniformHypergraph, CoverMap> k_fold_cover(const KUniformHypergraph& h);

/// Auxiliary bipartite graph of a binary predicate: left vertices are the
/// left labels, right vertices the right labels, one unit edge per supported
/// pair. Left ids 0..r-1, right ids r..r+s-1.
WeightedGraph auxiliary_graph(const KaryPredicate& p);

/// Complement across the bipartition only; an involution. Edges get unit weight.
WeightedGraph bipartite_complement(const WeightedGraph& g);

/// Colours the auxiliary graph by connected components of its bipartite
/// complement, ordered by smallest vertex id. Requires a sparsifiable
/// predicate; each component with an edge is checked to be a biclique.
Colouring biclique_colouring(const KaryPredicate& p);

/// Lift an assignment through a colouring onto the double cover: the layer-0
/// copy of a variable gets the left colour of its label, the layer-1 copy the
/// right colour. A copy whose label is out of the colour table's range (a
/// variable never occupying that side, hence an isolated cover vertex) gets -1.
std::vector<int> lift_assignment(const Assignment& a, const Colouring& c,
                                 const CoverMap& m);

struct PruneResult {
  WeightedGraph graph;            // induced on the kept vertices, ids compacted
  std::vector<int> kept_vertices; // kept_vertices[new_id] = old id, ascending
};

/// Drop degree-zero vertices. Cut and CSP values are unaffected.
PruneResult prune_isolated(const WeightedGraph& g);

/// Partition lift for a singleton predicate with supported tuple a: the
/// layer-t copy of v moves from part j to part (j + a[t]) mod r. Realizes the
/// correspondence between nOR values on H and P values on the k-fold cover.
std::vector<int> nor_lift(const std::vector<int>& labels, const KaryPredicate& p,
                          const CoverMap& m);

}  // namespace cspar

#endif
