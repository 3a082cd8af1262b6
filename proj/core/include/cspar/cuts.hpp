#ifndef CSPAR_CUTS_HPP
#define CSPAR_CUTS_HPP

#include <vector>

#include "cspar/graph.hpp"

namespace cspar {

/// Total weight of edges with exactly one endpoint in s. Direction is ignored.
double cut_value(const WeightedGraph& g, const std::vector<int>& s);

/// Total weight of edges whose endpoints lie in different parts.
/// parts must partition the vertex set. For undirected graphs,
/// 2 * lcut_value(g, parts) == sum of cut_value over the parts.
double lcut_value(const WeightedGraph& g, const std::vector<std::vector<int>>& parts);

/// Same, with the partition given as one part id per vertex.
double lcut_value_labels(const WeightedGraph& g, const std::vector<int>& labels);

}  // namespace cspar

#endif
