#include "netbone/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stack>

#include "netbone/detail/union_find.hpp"

namespace netbone {

namespace {

void validate_label(std::string_view label) {
  if (label.empty()) {
    throw Error(ErrorCode::InvalidArgument, "node label must be non-empty");
  }
  if (label.front() == '#') {
    throw Error(ErrorCode::InvalidArgument,
                "node label '" + std::string(label) +
                    "' must not start with '#' (reserved for comments)");
  }
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidArgument,
                  "node label '" + std::string(label) +
                      "' must not contain whitespace");
    }
  }
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NoSuchNode: return "NoSuchNode";
    case ErrorCode::UnknownStructure: return "UnknownStructure";
    case ErrorCode::MapNotBijective: return "MapNotBijective";
    case ErrorCode::MonoidAxiomViolation: return "MonoidAxiomViolation";
    case ErrorCode::UnsupportedAggregator: return "UnsupportedAggregator";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::DirectedInput: return "DirectedInput";
    case ErrorCode::UndirectedInput: return "UndirectedInput";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

std::string format_weight(double w) {
  if (std::isinf(w)) return "inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  (void)ec;
  return std::string(buf, ptr);
}

NodeIndex DistanceGraph::add_node(std::string label) {
  validate_label(label);
  if (index_.count(label)) {
    throw Error(ErrorCode::InvalidArgument,
                "duplicate node label '" + label + "'");
  }
  NodeIndex id = static_cast<NodeIndex>(labels_.size());
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  return id;
}

NodeIndex DistanceGraph::ensure_node(std::string_view label) {
  auto it = index_.find(std::string(label));
  if (it != index_.end()) return it->second;
  return add_node(std::string(label));
}

std::optional<NodeIndex> DistanceGraph::find_node(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t DistanceGraph::edge_key(NodeIndex a, NodeIndex b) const {
  if (!directed_ && a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void DistanceGraph::add_edge(std::string_view src, std::string_view dst,
                             double weight, std::string weight_text) {
  NodeIndex u = ensure_node(src);
  NodeIndex v = ensure_node(dst);
  add_edge(u, v, weight, std::move(weight_text));
}

void DistanceGraph::add_edge(NodeIndex src, NodeIndex dst, double weight,
                             std::string weight_text) {
  if (src >= labels_.size() || dst >= labels_.size()) {
    throw Error(ErrorCode::NoSuchNode, "edge endpoint index out of range");
  }
  if (src == dst) {
    throw Error(ErrorCode::SelfLoop,
                "self-loop on node '" + labels_[src] + "'");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::NonPositiveWeight,
                "edge weight must be a positive finite real, got " +
                    format_weight(weight));
  }
  std::uint64_t key = edge_key(src, dst);
  if (edge_by_key_.count(key)) {
    throw Error(ErrorCode::DuplicateEdge,
                "duplicate edge " + labels_[src] +
                    (directed_ ? " -> " : " -- ") + labels_[dst]);
  }
  edge_by_key_.emplace(key, edges_.size());
  edges_.push_back(Edge{src, dst, weight, std::move(weight_text)});
}

bool DistanceGraph::has_edge(NodeIndex src, NodeIndex dst) const {
  if (src >= labels_.size() || dst >= labels_.size() || src == dst) return false;
  return edge_by_key_.count(edge_key(src, dst)) != 0;
}

std::optional<double> DistanceGraph::edge_weight(NodeIndex src,
                                                 NodeIndex dst) const {
  if (src >= labels_.size() || dst >= labels_.size() || src == dst) {
    return std::nullopt;
  }
  auto it = edge_by_key_.find(edge_key(src, dst));
  if (it == edge_by_key_.end()) return std::nullopt;
  return edges_[it->second].weight;
}

std::pair<std::string_view, std::string_view> DistanceGraph::canonical_endpoints(
    const Edge& e) const {
  std::string_view a = labels_.at(e.src);
  std::string_view b = labels_.at(e.dst);
  if (!directed_ && b < a) std::swap(a, b);
  return {a, b};
}

std::vector<Edge> DistanceGraph::canonical_edges() const {
  std::vector<Edge> out = edges_;
  if (!directed_) {
    for (Edge& e : out) {
      if (labels_[e.dst] < labels_[e.src]) std::swap(e.src, e.dst);
    }
  }
  std::sort(out.begin(), out.end(), [this](const Edge& x, const Edge& y) {
    if (labels_[x.src] != labels_[y.src]) return labels_[x.src] < labels_[y.src];
    return labels_[x.dst] < labels_[y.dst];
  });
  return out;
}

std::vector<std::vector<std::pair<NodeIndex, double>>>
DistanceGraph::out_adjacency() const {
  std::vector<std::vector<std::pair<NodeIndex, double>>> adj(labels_.size());
  for (const Edge& e : edges_) {
    adj[e.src].emplace_back(e.dst, e.weight);
    if (!directed_) adj[e.dst].emplace_back(e.src, e.weight);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::vector<std::pair<NodeIndex, double>>>
DistanceGraph::in_adjacency() const {
  std::vector<std::vector<std::pair<NodeIndex, double>>> adj(labels_.size());
  for (const Edge& e : edges_) {
    adj[e.dst].emplace_back(e.src, e.weight);
    if (!directed_) adj[e.src].emplace_back(e.dst, e.weight);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool DistanceGraph::operator==(const DistanceGraph& other) const {
  if (directed_ != other.directed_) return false;
  if (labels_.size() != other.labels_.size()) return false;
  if (edges_.size() != other.edges_.size()) return false;

  std::vector<std::string> a = labels_, b = other.labels_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;

  auto ea = canonical_edges();
  auto eb = other.canonical_edges();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    auto [as, ad] = canonical_endpoints(ea[i]);
    auto [bs, bd] = other.canonical_endpoints(eb[i]);
    if (as != bs || ad != bd || ea[i].weight != eb[i].weight) return false;
  }
  return true;
}

namespace {

// Kosaraju: first pass records finish order, second pass sweeps the
// transposed graph in reverse finish order. Iterative to keep the stack flat.
std::vector<std::vector<NodeIndex>> strong_partition(const DistanceGraph& g) {
  const std::size_t n = g.node_count();
  auto out = g.out_adjacency();
  auto in = g.in_adjacency();

  std::vector<NodeIndex> finish;
  finish.reserve(n);
  std::vector<char> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // (node, next-child cursor)
    std::stack<std::pair<NodeIndex, std::size_t>> st;
    st.push({static_cast<NodeIndex>(root), 0});
    seen[root] = 1;
    while (!st.empty()) {
      auto& [u, cursor] = st.top();
      if (cursor < out[u].size()) {
        NodeIndex v = out[u][cursor++].first;
        if (!seen[v]) {
          seen[v] = 1;
          st.push({v, 0});
        }
      } else {
        finish.push_back(u);
        st.pop();
      }
    }
  }

  std::vector<std::vector<NodeIndex>> parts;
  std::fill(seen.begin(), seen.end(), 0);
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (seen[*it]) continue;
    std::vector<NodeIndex> part;
    std::stack<NodeIndex> st;
    st.push(*it);
    seen[*it] = 1;
    while (!st.empty()) {
      NodeIndex u = st.top();
      st.pop();
      part.push_back(u);
      for (auto [v, w] : in[u]) {
        (void)w;
        if (!seen[v]) {
          seen[v] = 1;
          st.push(v);
        }
      }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<std::vector<NodeIndex>> weak_partition(const DistanceGraph& g) {
  const std::size_t n = g.node_count();
  detail::UnionFind uf(n);
  for (const Edge& e : g.edges()) uf.unite(e.src, e.dst);
  std::vector<std::vector<NodeIndex>> by_root(n);
  for (std::size_t v = 0; v < n; ++v) {
    by_root[uf.find(v)].push_back(static_cast<NodeIndex>(v));
  }
  std::vector<std::vector<NodeIndex>> parts;
  for (auto& part : by_root) {
    if (!part.empty()) parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

std::vector<Component> components(const DistanceGraph& g, ComponentKind kind) {
  auto parts = (kind == ComponentKind::Strong && g.directed())
                   ? strong_partition(g)
                   : weak_partition(g);

  std::vector<Component> result;
  result.reserve(parts.size());
  for (auto& part : parts) {
    std::sort(part.begin(), part.end(), [&g](NodeIndex a, NodeIndex b) {
      return g.label(a) < g.label(b);
    });
    result.push_back(Component{std::move(part), kind});
  }
  std::sort(result.begin(), result.end(),
            [&g](const Component& a, const Component& b) {
              return g.label(a.members.front()) < g.label(b.members.front());
            });
  return result;
}

}  // namespace netbone
