#include "cspar/cuts.hpp"

#include <string>

namespace cspar {

double cut_value(const WeightedGraph& g, const std::vector<int>& s) {
  std::vector<bool> in(g.vertex_count(), false);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      fail(errc::vertex_out_of_range, "subset vertex " + std::to_string(v));
    in[v] = true;
  }
  double total = 0.0;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) total += e.weight;
  return total;
}

double lcut_value_labels(const WeightedGraph& g, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != g.vertex_count())
    fail(errc::not_a_partition, "one part id per vertex required");
  double total = 0.0;
  for (const Edge& e : g.edges())
    if (labels[e.u] != labels[e.v]) total += e.weight;
  return total;
}

double lcut_value(const WeightedGraph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> labels(g.vertex_count(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) {
      if (v < 0 || v >= g.vertex_count())
        fail(errc::not_a_partition, "part member " + std::to_string(v) + " out of range");
      if (labels[v] != -1)
        fail(errc::not_a_partition, "vertex " + std::to_string(v) + " in two parts");
      labels[v] = static_cast<int>(i);
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (labels[v] == -1)
      fail(errc::not_a_partition, "vertex " + std::to_string(v) + " in no part");
  return lcut_value_labels(g, labels);
}

}  // namespace cspar
