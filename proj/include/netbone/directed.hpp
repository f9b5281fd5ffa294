#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netbone/graph.hpp"
#include "netbone/spanning.hpp"

namespace netbone {

// A minimum spanning arborescence rooted at `root`, spanning exactly the
// nodes reachable from the root (unreachable nodes are excluded).
struct Arborescence {
  NodeIndex root = 0;
  std::vector<Edge> edges;          // canonical order
  double total_weight = 0.0;
  std::vector<NodeIndex> spanned;   // reachable set, ascending node index
};

// Chu-Liu/Edmonds with canonical tie-breaking; deterministic output.
Arborescence min_arborescence(const DistanceGraph& g, std::string_view root_label);

// Exhaustive oracle: all minimum-weight arborescences at the root, found by
// trying every combination of one in-edge per reachable non-root node.
// Throws TooLarge when the number of combinations exceeds `limit`.
std::vector<Arborescence> enumerate_min_arborescences(
    const DistanceGraph& g, std::string_view root_label,
    std::uint64_t limit = 1000000);

// A reachability-preserving edge subset of minimum total weight.
struct EquivalentGraph {
  std::vector<Edge> edges;  // canonical order
  double total_weight = 0.0;
};

// All minimum equivalent graphs, by branch-and-bound subset search. Guarded
// by an edge-count bound (the search is exponential).
std::vector<EquivalentGraph> min_equivalent_graphs(const DistanceGraph& g,
                                                   std::size_t max_edges = 20);

// Union over every root of every minimum spanning arborescence at that root.
SpanningSet msa_union(const DistanceGraph& g, std::uint64_t limit = 1000000);

enum class UnionKind { Meg, Msa };

const char* to_string(UnionKind kind) noexcept;

// Set comparison between the directed ultrametric backbone and an MST-analog
// union. The divergence pattern holds when both difference sets are
// non-empty.
struct RemarkReport {
  UnionKind kind = UnionKind::Msa;
  bool exhibits_both = false;
  std::vector<Edge> backbone_only;  // in the backbone, missing from the union
  std::vector<Edge> union_only;     // in the union, missing from the backbone
  std::vector<Edge> backbone_edges;
  std::vector<Edge> union_edges;
};

RemarkReport verify_remark(const DistanceGraph& g, UnionKind kind,
                           std::size_t meg_max_edges = 20,
                           std::uint64_t arb_limit = 1000000);

struct CounterexampleReport {
  DistanceGraph graph;
  UnionKind kind = UnionKind::Msa;
  Edge backbone_only_witness;
  Edge union_only_witness;
  std::uint64_t candidates_tried = 0;
};

// Seeded random search over small directed graphs with integer weights for a
// graph whose ultrametric backbone and MST-analog union differ in both
// directions. Both witnesses are re-certified: backbone membership by
// brute-force path enumeration, the union by recomputation. Throws
// BudgetExhausted with search statistics when no witness turns up.
CounterexampleReport find_counterexample(UnionKind kind, std::uint64_t budget,
                                         std::uint64_t seed);

// Brute-force backbone membership: an edge survives the ultrametric closure
// iff no path between its endpoints uses only strictly smaller edges.
bool edge_in_ultrametric_backbone_bruteforce(const DistanceGraph& g,
                                             const Edge& e);

// Edges lying on at least one minimum-sum shortest path from some source,
// computed from per-source closure rows. Coincides with the metric backbone;
// kept as an independently computed route for cross-checking.
std::vector<Edge> shortest_path_dag_union(const DistanceGraph& g);

}  // namespace netbone
