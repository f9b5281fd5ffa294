#include "netbone/backbone.hpp"

#include <algorithm>
#include <cmath>

namespace netbone {

namespace {

bool weights_equal(double direct, double closed, CombineKind kind) {
  if (kind == CombineKind::Max) return direct == closed;
  // closure <= direct always holds; near-ties on float sums count as equal.
  return direct - closed <= 1e-12 * direct;
}

}  // namespace

std::size_t BackboneReport::kept_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += (c.cls == EdgeClass::Triangular);
  return n;
}

std::size_t BackboneReport::removed_count() const {
  return classes.size() - kept_count();
}

BackboneReport extract_backbone(const DistanceGraph& g,
                                const DistanceStructure& s) {
  ClosureMatrix closure = distance_closure(g, s);

  BackboneReport report;
  report.structure_name = s.name;
  report.backbone = DistanceGraph(g.directed());
  for (const auto& label : g.labels()) report.backbone.add_node(label);

  for (const Edge& e : g.canonical_edges()) {
    double closed = closure.at(e.src, e.dst);
    ClassifiedEdge ce;
    ce.edge = e;
    if (weights_equal(e.weight, closed, s.combine_kind)) {
      ce.cls = EdgeClass::Triangular;
      ce.distortion = 1.0;
      report.backbone.add_edge(e.src, e.dst, e.weight, e.weight_text);
    } else {
      ce.cls = EdgeClass::SemiTriangular;
      ce.distortion = e.weight / closed;
    }
    report.classes.push_back(std::move(ce));
  }
  return report;
}

bool backbone_preserves_closure(const DistanceGraph& g,
                                const DistanceStructure& s) {
  BackboneReport report = extract_backbone(g, s);
  ClosureMatrix full = distance_closure(g, s);
  ClosureMatrix pruned = distance_closure(report.backbone, s);
  const std::size_t n = full.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double a = full.at(i, j);
      double b = pruned.at(i, j);
      if (s.combine_kind == CombineKind::Max) {
        if (a != b) return false;
      } else if (std::isinf(a) || std::isinf(b)) {
        if (a != b) return false;
      } else if (std::abs(a - b) > 1e-9) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<Edge, double>> semi_triangular_ranking(
    const BackboneReport& r) {
  std::vector<std::pair<Edge, double>> ranked;
  for (const auto& c : r.classes) {
    if (c.cls == EdgeClass::SemiTriangular) ranked.push_back({c.edge, c.distortion});
  }
  // classes is already in canonical edge order, so a stable sort leaves
  // equal distortions canonically ordered.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return ranked;
}

}  // namespace netbone
