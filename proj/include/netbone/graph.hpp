#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netbone/error.hpp"

namespace netbone {

using NodeIndex = std::uint32_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// One weighted edge. For undirected graphs the stored (src, dst) orientation
// is the first one seen; lookups treat both orientations as the same entry.
// weight_text keeps the exact token the weight was parsed from so that
// serialization round-trips byte-for-byte; it is empty for edges built in
// code, in which case the shortest round-trip decimal is emitted instead.
struct Edge {
  NodeIndex src = 0;
  NodeIndex dst = 0;
  double weight = 0.0;
  std::string weight_text;
};

// Weighted graph with strictly positive, finite edge weights. A missing edge
// stands for an infinite distance; infinity is never stored. Self-loops are
// rejected. Nodes keep their insertion order, which fixes the index space
// used by every other module; edge-level tie-breaks instead use the canonical
// (label-lexicographic) edge order so they do not depend on insertion order.
//
// Instances are treated as immutable once built; all algorithms take a const
// reference and may run concurrently against a shared graph.
class DistanceGraph {
 public:
  explicit DistanceGraph(bool directed = false) : directed_(directed) {}

  bool directed() const noexcept { return directed_; }
  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Adds a node with a fresh label. Labels must be non-empty, contain no
  // whitespace, not start with '#' (which would collide with the edge-list
  // comment syntax), and be unique within the graph.
  NodeIndex add_node(std::string label);

  // Returns the existing index for `label`, adding the node if absent.
  NodeIndex ensure_node(std::string_view label);

  std::optional<NodeIndex> find_node(std::string_view label) const;
  const std::string& label(NodeIndex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Adds an edge, creating endpoints as needed. Throws SelfLoop,
  // NonPositiveWeight, or DuplicateEdge when the input breaks an invariant.
  void add_edge(std::string_view src, std::string_view dst, double weight,
                std::string weight_text = {});
  void add_edge(NodeIndex src, NodeIndex dst, double weight,
                std::string weight_text = {});

  // Direction-aware lookup; for undirected graphs both orientations match.
  bool has_edge(NodeIndex src, NodeIndex dst) const;
  std::optional<double> edge_weight(NodeIndex src, NodeIndex dst) const;

  // Edges in insertion order with their stored orientation.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Edges with canonical endpoints (undirected edges oriented so the smaller
  // label comes first), sorted lexicographically by (src label, dst label).
  // This is the serialization order and the tie-break order everywhere.
  std::vector<Edge> canonical_edges() const;

  // Canonical endpoint labels for a single edge of this graph.
  std::pair<std::string_view, std::string_view> canonical_endpoints(
      const Edge& e) const;

  // Out-neighbour lists indexed by node; undirected edges appear in both
  // directions. Each list is sorted by (neighbour index, weight).
  std::vector<std::vector<std::pair<NodeIndex, double>>> out_adjacency() const;
  std::vector<std::vector<std::pair<NodeIndex, double>>> in_adjacency() const;

  // Structural equality: same directedness, same label set, same canonical
  // edges with equal binary weights. Node insertion order is not compared.
  bool operator==(const DistanceGraph& other) const;
  bool operator!=(const DistanceGraph& other) const { return !(*this == other); }

 private:
  std::uint64_t edge_key(NodeIndex a, NodeIndex b) const;

  bool directed_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_by_key_;
};

enum class ComponentKind { Weak, Strong };

struct Component {
  std::vector<NodeIndex> members;  // sorted by label
  ComponentKind kind = ComponentKind::Weak;
};

// Partitions the node set into weakly or strongly connected components.
// On undirected graphs the two notions coincide. Components are ordered by
// their smallest member label; members are sorted by label.
std::vector<Component> components(const DistanceGraph& g, ComponentKind kind);

// Shortest round-trip decimal representation of a finite weight
// ("inf" for infinity); the inverse of the edge-list weight parser.
std::string format_weight(double w);

}  // namespace netbone
