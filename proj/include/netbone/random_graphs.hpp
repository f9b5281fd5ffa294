#pragma once

#include <random>

#include "netbone/graph.hpp"

namespace netbone {

// Edge weight models for the randomized suites. Integer weights keep sums
// exact in doubles, which the exact-equality checks rely on; Distinct forces
// a unique MST; UniformReal exercises comparison-only paths.
enum class WeightModel { UniformInt, DistinctInt, UniformReal, DyadicRational };

struct RandomGraphSpec {
  int nodes = 5;
  double extra_edge_prob = 0.35;  // beyond the spanning tree, when connected
  double edge_prob = 0.4;         // otherwise
  WeightModel weights = WeightModel::UniformInt;
  int weight_lo = 1;  // integer models
  int weight_hi = 4;
};

// Connected undirected graph: a random spanning tree plus random extra edges.
DistanceGraph random_connected_undirected(std::mt19937_64& rng,
                                          const RandomGraphSpec& spec);

// Undirected graph with independent edges; may be disconnected.
DistanceGraph random_undirected(std::mt19937_64& rng,
                                const RandomGraphSpec& spec);

// Union of 2..3 independently generated connected components.
DistanceGraph random_disconnected_undirected(std::mt19937_64& rng,
                                             const RandomGraphSpec& spec,
                                             int component_count);

// Directed graph with independent arcs.
DistanceGraph random_directed(std::mt19937_64& rng, const RandomGraphSpec& spec);

// Proximity graph with weights drawn strictly inside (0, 1).
DistanceGraph random_proximity_graph(std::mt19937_64& rng, int nodes,
                                     double edge_prob, bool directed);

}  // namespace netbone
