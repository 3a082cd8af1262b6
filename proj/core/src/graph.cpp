#include "cspar/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace cspar {

WeightedGraph::WeightedGraph(int vertex_count, bool directed,
                             std::vector<Edge> edges, std::optional<int> left_size)
    : vertex_count_(vertex_count), directed_(directed), edges_(std::move(edges)),
      left_size_(left_size) {
  if (vertex_count_ < 0) fail(errc::bad_parameters, "negative vertex count");
  if (left_size_ && (*left_size_ < 0 || *left_size_ > vertex_count_))
    fail(errc::bad_parameters, "bipartition split out of range");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      fail(errc::vertex_out_of_range, "edge endpoint " +
                                          std::to_string(e.u < 0 || e.u >= vertex_count_ ? e.u : e.v) +
                                          " out of range");
    if (e.u == e.v)
      fail(errc::bad_parameters, "self-loop at vertex " + std::to_string(e.u));
    if (!(e.weight > 0.0))
      fail(errc::bad_parameters, "edge weights must be positive");
    auto key = directed_ ? std::pair{e.u, e.v}
                         : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second)
      fail(errc::bad_parameters, "duplicate edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ")");
    if (left_size_) {
      const bool u_left = e.u < *left_size_;
      const bool v_left = e.v < *left_size_;
      if (u_left == v_left)
        fail(errc::not_bipartite, "edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) +
                                      ") does not cross the bipartition");
    }
  }
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (const Edge& e : edges_) sum += e.weight;
  return sum;
}

std::vector<int> WeightedGraph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

KUniformHypergraph::KUniformHypergraph(int vertex_count, int arity,
                                       std::vector<HyperEdge> edges)
    : vertex_count_(vertex_count), arity_(arity), edges_(std::move(edges)) {
  if (vertex_count_ < 0) fail(errc::bad_parameters, "negative vertex count");
  if (arity_ < 1) fail(errc::bad_parameters, "hyperedge arity must be positive");
  std::set<std::vector<int>> seen;
  for (const HyperEdge& e : edges_) {
    if (static_cast<int>(e.vertices.size()) != arity_)
      fail(errc::arity_mismatch, "hyperedge arity mismatch");
    std::set<int> distinct;
    for (int v : e.vertices) {
      if (v < 0 || v >= vertex_count_)
        fail(errc::vertex_out_of_range,
             "hyperedge vertex " + std::to_string(v) + " out of range");
      if (!distinct.insert(v).second)
        fail(errc::bad_parameters, "hyperedge entries must be distinct");
    }
    if (!(e.weight > 0.0))
      fail(errc::bad_parameters, "hyperedge weights must be positive");
    if (!seen.insert(e.vertices).second)
      fail(errc::bad_parameters, "duplicate hyperedge");
  }
}

double KUniformHypergraph::total_weight() const {
  double sum = 0.0;
  for (const HyperEdge& e : edges_) sum += e.weight;
  return sum;
}

}  // namespace cspar
