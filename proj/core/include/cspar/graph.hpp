#ifndef CSPAR_GRAPH_HPP
#define CSPAR_GRAPH_HPP

#include <optional>
#include <vector>

#include "cspar/errors.hpp"

namespace cspar {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Weighted simple graph, directed or undirected. An optional bipartition is
/// stored as a prefix split: vertices [0, left_size) form the left class and
/// the rest the right class; every edge must then cross the split.
class WeightedGraph {
 public:
  WeightedGraph(int vertex_count, bool directed, std::vector<Edge> edges = {},
                std::optional<int> left_size = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool bipartite() const { return left_size_.has_value(); }
  std::optional<int> left_size() const { return left_size_; }

  double total_weight() const;
  std::vector<int> degrees() const;  // direction-blind

 private:
  int vertex_count_;
  bool directed_;
  std::vector<Edge> edges_;
  std::optional<int> left_size_;
};

struct HyperEdge {
  std::vector<int> vertices;  // ordered, pairwise distinct
  double weight = 1.0;
};

/// Weighted directed k-uniform hypergraph: each hyperedge is an ordered
/// k-tuple of distinct vertices.
class KUniformHypergraph {
 public:
  KUniformHypergraph(int vertex_count, int arity, std::vector<HyperEdge> edges = {});

  int vertex_count() const { return vertex_count_; }
  int arity() const { return arity_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  double total_weight() const;

 private:
  int vertex_count_;
  int arity_;
  std::vector<HyperEdge> edges_;
};

}  // namespace cspar

#endif
