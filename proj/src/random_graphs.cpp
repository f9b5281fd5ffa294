#include "netbone/random_graphs.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace netbone {

namespace {

std::string node_label(int i) { return "n" + std::to_string(i); }

class WeightDrawer {
 public:
  WeightDrawer(std::mt19937_64& rng, const RandomGraphSpec& spec,
               std::size_t edge_budget)
      : rng_(rng), spec_(spec) {
    if (spec.weights == WeightModel::DistinctInt) {
      distinct_.resize(edge_budget);
      for (std::size_t i = 0; i < edge_budget; ++i) {
        distinct_[i] = static_cast<int>(i) + 1;
      }
      std::shuffle(distinct_.begin(), distinct_.end(), rng_);
    }
  }

  // Returns (binary weight, exact text for integer models).
  std::pair<double, std::string> next() {
    switch (spec_.weights) {
      case WeightModel::UniformInt: {
        int w = std::uniform_int_distribution<int>(spec_.weight_lo,
                                                   spec_.weight_hi)(rng_);
        return {static_cast<double>(w), std::to_string(w)};
      }
      case WeightModel::DistinctInt: {
        int w = distinct_.at(cursor_++);
        return {static_cast<double>(w), std::to_string(w)};
      }
      case WeightModel::UniformReal: {
        double w = std::uniform_real_distribution<double>(0.1, 10.0)(rng_);
        return {w, {}};
      }
      case WeightModel::DyadicRational: {
        // k/8 with k in [1, 128]: sums of dozens of these stay exact.
        int k = std::uniform_int_distribution<int>(1, 128)(rng_);
        return {static_cast<double>(k) / 8.0, {}};
      }
    }
    return {1.0, "1"};
  }

 private:
  std::mt19937_64& rng_;
  const RandomGraphSpec& spec_;
  std::vector<int> distinct_;
  std::size_t cursor_ = 0;
};

}  // namespace

DistanceGraph random_connected_undirected(std::mt19937_64& rng,
                                          const RandomGraphSpec& spec) {
  const int n = spec.nodes;
  DistanceGraph g(false);
  for (int i = 0; i < n; ++i) g.add_node(node_label(i));

  std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  WeightDrawer draw(rng, spec, max_edges);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<std::pair<NodeIndex, NodeIndex>> chosen;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    chosen.push_back({static_cast<NodeIndex>(parent), static_cast<NodeIndex>(v)});
  }
  for (NodeIndex u = 0; u < static_cast<NodeIndex>(n); ++u) {
    for (NodeIndex v = u + 1; v < static_cast<NodeIndex>(n); ++v) {
      bool is_tree_edge = false;
      for (auto [a, b] : chosen) {
        if ((a == u && b == v) || (a == v && b == u)) {
          is_tree_edge = true;
          break;
        }
      }
      if (!is_tree_edge && coin(rng) < spec.extra_edge_prob) {
        chosen.push_back({u, v});
      }
    }
  }
  for (auto [u, v] : chosen) {
    auto [w, text] = draw.next();
    g.add_edge(u, v, w, std::move(text));
  }
  return g;
}

DistanceGraph random_undirected(std::mt19937_64& rng,
                                const RandomGraphSpec& spec) {
  const int n = spec.nodes;
  DistanceGraph g(false);
  for (int i = 0; i < n; ++i) g.add_node(node_label(i));
  std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  WeightDrawer draw(rng, spec, max_edges);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (NodeIndex u = 0; u < static_cast<NodeIndex>(n); ++u) {
    for (NodeIndex v = u + 1; v < static_cast<NodeIndex>(n); ++v) {
      if (coin(rng) < spec.edge_prob) {
        auto [w, text] = draw.next();
        g.add_edge(u, v, w, std::move(text));
      }
    }
  }
  return g;
}

DistanceGraph random_disconnected_undirected(std::mt19937_64& rng,
                                             const RandomGraphSpec& spec,
                                             int component_count) {
  DistanceGraph g(false);
  int next_label = 0;
  for (int c = 0; c < component_count; ++c) {
    RandomGraphSpec part = spec;
    part.nodes = 2 + static_cast<int>(rng() % 3);  // 2..4 nodes per component
    DistanceGraph piece = random_connected_undirected(rng, part);
    std::vector<NodeIndex> remap;
    remap.reserve(piece.node_count());
    for (std::size_t i = 0; i < piece.node_count(); ++i) {
      remap.push_back(g.add_node(node_label(next_label++)));
    }
    for (const Edge& e : piece.edges()) {
      g.add_edge(remap[e.src], remap[e.dst], e.weight, e.weight_text);
    }
  }
  return g;
}

DistanceGraph random_directed(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  const int n = spec.nodes;
  DistanceGraph g(true);
  for (int i = 0; i < n; ++i) g.add_node(node_label(i));
  std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1);
  WeightDrawer draw(rng, spec, max_edges);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (NodeIndex u = 0; u < static_cast<NodeIndex>(n); ++u) {
    for (NodeIndex v = 0; v < static_cast<NodeIndex>(n); ++v) {
      if (u != v && coin(rng) < spec.edge_prob) {
        auto [w, text] = draw.next();
        g.add_edge(u, v, w, std::move(text));
      }
    }
  }
  return g;
}

DistanceGraph random_proximity_graph(std::mt19937_64& rng, int nodes,
                                     double edge_prob, bool directed) {
  DistanceGraph g(directed);
  for (int i = 0; i < nodes; ++i) g.add_node(node_label(i));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.05, 0.95);
  for (NodeIndex u = 0; u < static_cast<NodeIndex>(nodes); ++u) {
    NodeIndex v0 = directed ? 0 : u + 1;
    for (NodeIndex v = v0; v < static_cast<NodeIndex>(nodes); ++v) {
      if (u != v && coin(rng) < edge_prob) {
        g.add_edge(u, v, weight(rng));
      }
    }
  }
  return g;
}

}  // namespace netbone
