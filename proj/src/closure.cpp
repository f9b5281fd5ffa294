#include "netbone/closure.hpp"

#include <cmath>
#include <queue>

namespace netbone {

ClosureMatrix::ClosureMatrix(std::vector<std::string> labels,
                             std::string structure_name, double fill)
    : labels_(std::move(labels)),
      structure_(std::move(structure_name)),
      entries_(labels_.size() * labels_.size(), fill) {}

bool ClosureMatrix::operator==(const ClosureMatrix& other) const {
  return labels_ == other.labels_ && entries_ == other.entries_;
}

namespace {

void require_min_aggregate(const DistanceStructure& s) {
  if (!s.aggregate_is_min) {
    throw Error(ErrorCode::UnsupportedAggregator,
                "structure '" + s.name +
                    "' does not aggregate paths by min; only min-aggregation "
                    "closures are supported");
  }
}

ClosureMatrix closure_triple_loop(const DistanceGraph& g,
                                  const DistanceStructure& s) {
  const std::size_t n = g.node_count();
  ClosureMatrix m(g.labels(), s.name, kInf);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 0.0);
  for (const Edge& e : g.edges()) {
    m.set(e.src, e.dst, e.weight);
    if (!g.directed()) m.set(e.dst, e.src, e.weight);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double ik = m.at(i, k);
      if (std::isinf(ik)) continue;  // combine saturates at inf
      for (std::size_t j = 0; j < n; ++j) {
        double kj = m.at(k, j);
        if (std::isinf(kj)) continue;
        double through = s.combine(ik, kj);
        if (through < m.at(i, j)) m.set(i, j, through);
      }
    }
  }
  return m;
}

ClosureMatrix closure_per_source(const DistanceGraph& g,
                                 const DistanceStructure& s) {
  const std::size_t n = g.node_count();
  ClosureMatrix m(g.labels(), s.name, kInf);
  auto adj = g.out_adjacency();
  using Item = std::pair<double, NodeIndex>;
  for (std::size_t src = 0; src < n; ++src) {
    std::vector<double> dist(n, kInf);
    dist[src] = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.push({0.0, static_cast<NodeIndex>(src)});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (auto [v, w] : adj[u]) {
        // combine is non-decreasing with identity 0, so extending a path
        // never shortens it and the frontier order stays valid.
        double nd = s.combine(d, w);
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.push({nd, v});
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) m.set(src, j, dist[j]);
  }
  return m;
}

}  // namespace

ClosureMatrix distance_closure(const DistanceGraph& g,
                               const DistanceStructure& s,
                               ClosureAlgorithm algo) {
  require_min_aggregate(s);
  return algo == ClosureAlgorithm::TripleLoop ? closure_triple_loop(g, s)
                                              : closure_per_source(g, s);
}

ClosureMatrix proximity_closure(const DistanceGraph& g,
                                const ProximityStructure& p) {
  if (!p.tnorm_is_min || !p.tconorm_is_max) {
    throw Error(ErrorCode::UnsupportedPair,
                "proximity closure supports the (min, max) pair only; got '" +
                    p.name + "'");
  }
  const std::size_t n = g.node_count();
  for (const Edge& e : g.edges()) {
    if (e.weight > 1.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "proximity weights must lie in (0, 1]; edge " +
                      g.label(e.src) + " " + g.label(e.dst) + " has weight " +
                      format_weight(e.weight));
    }
  }
  ClosureMatrix m(g.labels(), p.name, 0.0);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  for (const Edge& e : g.edges()) {
    m.set(e.src, e.dst, e.weight);
    if (!g.directed()) m.set(e.dst, e.src, e.weight);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double ik = m.at(i, k);
      if (ik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        double through = std::min(ik, m.at(k, j));
        if (through > m.at(i, j)) m.set(i, j, through);
      }
    }
  }
  return m;
}

CommutationReport verify_phi_commutation(const DistanceGraph& proximity_graph,
                                         const ProximityStructure& p,
                                         const IsomorphismMap& m, double tol) {
  ClosureMatrix prox = proximity_closure(proximity_graph, p);

  DistanceGraph mapped(proximity_graph.directed());
  for (const auto& label : proximity_graph.labels()) mapped.add_node(label);
  for (const Edge& e : proximity_graph.edges()) {
    double d = m.forward(e.weight);
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + proximity_graph.label(e.src) + " " +
                      proximity_graph.label(e.dst) +
                      " maps to a non-positive or infinite distance; "
                      "proximity weights must lie strictly inside (0, 1)");
    }
    mapped.add_edge(e.src, e.dst, d);
  }

  DistanceStructure induced = induce_distance_structure(p, m);
  ClosureMatrix dist = distance_closure(mapped, induced);

  CommutationReport report;
  report.tolerance = tol;
  const std::size_t n = prox.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double lhs = m.forward(prox.at(i, j));
      double rhs = dist.at(i, j);
      double dev;
      if (std::isinf(lhs) || std::isinf(rhs)) {
        dev = (lhs == rhs) ? 0.0 : kInf;
      } else {
        dev = std::abs(lhs - rhs);
      }
      report.max_deviation = std::max(report.max_deviation, dev);
    }
  }
  report.pass = report.max_deviation < tol;
  return report;
}

bool closure_idempotent(const ClosureMatrix& c, const DistanceStructure& s) {
  require_min_aggregate(s);
  const std::size_t n = c.size();
  ClosureMatrix again = c;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double ik = again.at(i, k);
      if (std::isinf(ik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        double kj = again.at(k, j);
        if (std::isinf(kj)) continue;
        double through = s.combine(ik, kj);
        if (through < again.at(i, j)) again.set(i, j, through);
      }
    }
  }
  return again == c;
}

}  // namespace netbone
