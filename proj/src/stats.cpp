#include "netbone/stats.hpp"

#include <algorithm>

#include "netbone/backbone.hpp"

namespace netbone {

GraphStats graph_stats(const DistanceGraph& g) {
  GraphStats s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.directed = g.directed();
  s.weak_components = components(g, ComponentKind::Weak).size();
  s.strong_components = components(g, ComponentKind::Strong).size();
  if (s.edges > 0) {
    s.min_weight = kInf;
    for (const Edge& e : g.edges()) {
      s.min_weight = std::min(s.min_weight, e.weight);
      s.max_weight = std::max(s.max_weight, e.weight);
    }
    s.metric_backbone_edges =
        extract_backbone(g, builtin_structure("metric")).kept_count();
    s.ultrametric_backbone_edges =
        extract_backbone(g, builtin_structure("ultrametric")).kept_count();
    s.metric_retention =
        static_cast<double>(s.metric_backbone_edges) / static_cast<double>(s.edges);
    s.ultrametric_retention =
        static_cast<double>(s.ultrametric_backbone_edges) /
        static_cast<double>(s.edges);
  }
  return s;
}

}  // namespace netbone
