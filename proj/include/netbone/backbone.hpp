#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netbone/closure.hpp"

namespace netbone {

enum class EdgeClass { Triangular, SemiTriangular };

struct ClassifiedEdge {
  Edge edge;  // canonical orientation
  EdgeClass cls = EdgeClass::Triangular;
  // Direct weight over closure distance; > 1 exactly for semi-triangular
  // edges and meaningless for triangular ones.
  double distortion = 1.0;
};

// The distance backbone of a graph under a structure: the subgraph of edges
// whose weight survives closure unchanged, plus the per-edge classification
// and the distortion of every removed (semi-triangular) edge. The backbone
// keeps the full node set.
struct BackboneReport {
  DistanceGraph backbone;
  std::vector<ClassifiedEdge> classes;  // canonical edge order
  std::string structure_name;

  std::size_t kept_count() const;
  std::size_t removed_count() const;
};

// Classifies every edge by comparing its weight with the closure entry of
// its endpoints: exact comparison for combine = max, relative tolerance
// 1e-12 otherwise (float sums may be inexact).
BackboneReport extract_backbone(const DistanceGraph& g,
                                const DistanceStructure& s);

// True when the backbone alone reproduces the full closure: exactly for
// combine = max, within absolute 1e-9 per entry otherwise.
bool backbone_preserves_closure(const DistanceGraph& g,
                                const DistanceStructure& s);

// Semi-triangular edges ranked by distortion, descending; ties fall back to
// canonical edge order.
std::vector<std::pair<Edge, double>> semi_triangular_ranking(
    const BackboneReport& r);

}  // namespace netbone
