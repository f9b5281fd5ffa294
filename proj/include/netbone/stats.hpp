#pragma once

#include <cstddef>

#include "netbone/graph.hpp"

namespace netbone {

// Summary figures for one graph, including backbone sizes under both
// built-in structures. Weight range and retention fractions are zero for
// edgeless graphs.
struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool directed = false;
  std::size_t weak_components = 0;
  std::size_t strong_components = 0;
  double min_weight = 0.0;
  double max_weight = 0.0;
  std::size_t metric_backbone_edges = 0;
  std::size_t ultrametric_backbone_edges = 0;
  double metric_retention = 0.0;
  double ultrametric_retention = 0.0;
};

GraphStats graph_stats(const DistanceGraph& g);

}  // namespace netbone
