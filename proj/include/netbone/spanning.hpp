#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netbone/graph.hpp"

namespace netbone {

// A spanning subgraph: a minimum spanning tree or forest, or the union of
// all of them. Edges are kept in canonical order.
struct SpanningSet {
  enum class Kind { Tree, Forest, Union };
  Kind kind = Kind::Forest;
  std::vector<Edge> edges;
  double total_weight = 0.0;
  std::size_t component_count = 0;
};

// Deterministic Kruskal: edges scanned in ascending weight, ties in
// canonical edge order. Returns one minimum spanning forest (a tree when the
// graph is connected).
SpanningSet kruskal_msf(const DistanceGraph& g);

// Exhaustive oracle: every minimum spanning forest, found by enumerating all
// acyclic edge subsets of size n - c. Throws TooLarge when the number of
// candidate subsets exceeds `limit`. Results are in deterministic
// (combination-lexicographic) order.
std::vector<SpanningSet> enumerate_all_msts(const DistanceGraph& g,
                                            std::uint64_t limit = 1000000);

// The union of all minimum spanning forests without enumeration, by the cut
// rule: scanning weight classes in ascending order, an edge belongs to the
// union iff its endpoints are still in different components after merging
// every strictly lighter edge.
SpanningSet mst_union(const DistanceGraph& g);

// Three-way equality witness between the ultrametric backbone, the cut-rule
// union, and the union of exhaustively enumerated forests.
struct UnionTheoremReport {
  bool ok = false;
  std::vector<Edge> backbone_edges;
  std::vector<Edge> cut_union_edges;
  std::vector<Edge> enumerated_union_edges;
  std::string mismatch;  // empty when ok
};

UnionTheoremReport verify_union_theorem(const DistanceGraph& g,
                                        std::uint64_t limit = 1000000);

// Checks the cycle property on one cycle, given as consecutive edges by
// endpoint labels: when the cycle has a unique maximum edge, that edge must
// be absent from every enumerated minimum spanning forest.
struct CycleCheckReport {
  bool has_unique_max = false;
  Edge max_edge;
  bool holds = false;  // vacuously true without a unique maximum
  std::size_t forests_checked = 0;
};

CycleCheckReport cycle_property_check(
    const DistanceGraph& g,
    const std::vector<std::pair<std::string, std::string>>& cycle,
    std::uint64_t limit = 1000000);

}  // namespace netbone
