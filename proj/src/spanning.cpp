#include "netbone/spanning.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "netbone/backbone.hpp"
#include "netbone/detail/union_find.hpp"

namespace netbone {

namespace {

void require_undirected(const DistanceGraph& g, const char* op) {
  if (g.directed()) {
    throw Error(ErrorCode::DirectedInput,
                std::string(op) + " requires an undirected graph");
  }
}

std::size_t weak_component_count(const DistanceGraph& g) {
  detail::UnionFind uf(g.node_count());
  std::size_t merges = 0;
  for (const Edge& e : g.edges()) merges += uf.unite(e.src, e.dst);
  return g.node_count() - merges;
}

double edge_sum(const std::vector<Edge>& edges) {
  double total = 0.0;
  for (const Edge& e : edges) total += e.weight;
  return total;
}

// Number of k-subsets of m items, saturating at cap + 1.
std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t k,
                              std::uint64_t cap) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  long double acc = 1.0L;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(m - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc + 0.5L);
}

std::pair<std::string_view, std::string_view> sort_key(const DistanceGraph& g,
                                                       const Edge& e) {
  return g.canonical_endpoints(e);
}

}  // namespace

SpanningSet kruskal_msf(const DistanceGraph& g) {
  require_undirected(g, "kruskal_msf");
  auto edges = g.canonical_edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.weight < b.weight; });

  detail::UnionFind uf(g.node_count());
  SpanningSet result;
  for (const Edge& e : edges) {
    if (uf.unite(e.src, e.dst)) result.edges.push_back(e);
  }
  std::sort(result.edges.begin(), result.edges.end(),
            [&g](const Edge& a, const Edge& b) { return sort_key(g, a) < sort_key(g, b); });
  result.component_count = g.node_count() - result.edges.size();
  result.kind = (result.component_count == 1) ? SpanningSet::Kind::Tree
                                              : SpanningSet::Kind::Forest;
  result.total_weight = edge_sum(result.edges);
  return result;
}

std::vector<SpanningSet> enumerate_all_msts(const DistanceGraph& g,
                                            std::uint64_t limit) {
  require_undirected(g, "enumerate_all_msts");
  const std::size_t n = g.node_count();
  const std::size_t c = weak_component_count(g);
  const std::size_t k = n - c;
  const auto edges = g.canonical_edges();
  const std::size_t m = edges.size();

  std::uint64_t candidates = binomial_capped(m, k, limit);
  if (candidates > limit) {
    throw Error(ErrorCode::TooLarge,
                "enumeration would scan more than " + std::to_string(limit) +
                    " edge subsets");
  }

  auto make_set = [&](const std::vector<std::size_t>& pick,
                      double weight) {
    SpanningSet s;
    s.kind = (c == 1) ? SpanningSet::Kind::Tree : SpanningSet::Kind::Forest;
    for (std::size_t idx : pick) s.edges.push_back(edges[idx]);
    s.total_weight = weight;
    s.component_count = c;
    return s;
  };

  std::vector<std::vector<std::size_t>> best_picks;
  double best_weight = kInf;

  if (k == 0) {
    best_picks.push_back({});
    best_weight = 0.0;
  } else {
    // Lexicographic combinations of edge indices; any acyclic subset of
    // size n - c is automatically a spanning forest.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      detail::UnionFind uf(n);
      bool acyclic = true;
      double weight = 0.0;
      for (std::size_t i : idx) {
        if (!uf.unite(edges[i].src, edges[i].dst)) {
          acyclic = false;
          break;
        }
        weight += edges[i].weight;
      }
      if (acyclic) {
        if (weight < best_weight) {
          best_weight = weight;
          best_picks.clear();
          best_picks.push_back(idx);
        } else if (weight == best_weight) {
          best_picks.push_back(idx);
        }
      }
      // advance combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (best_picks.empty()) {
      // cannot happen: Kruskal always finds an acyclic subset of size n - c
      throw Error(ErrorCode::InvalidArgument, "no spanning forest exists");
    }
  }

  std::vector<SpanningSet> result;
  result.reserve(best_picks.size());
  for (const auto& pick : best_picks) result.push_back(make_set(pick, best_weight));
  return result;
}

SpanningSet mst_union(const DistanceGraph& g) {
  require_undirected(g, "mst_union");
  auto edges = g.canonical_edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.weight < b.weight; });

  detail::UnionFind uf(g.node_count());
  SpanningSet result;
  result.kind = SpanningSet::Kind::Union;
  std::size_t i = 0;
  while (i < edges.size()) {
    std::size_t j = i;
    while (j < edges.size() && edges[j].weight == edges[i].weight) ++j;
    // Edges of one weight class are tested against the components formed by
    // strictly lighter edges only, then merged together.
    for (std::size_t t = i; t < j; ++t) {
      if (!uf.connected(edges[t].src, edges[t].dst)) {
        result.edges.push_back(edges[t]);
      }
    }
    for (std::size_t t = i; t < j; ++t) uf.unite(edges[t].src, edges[t].dst);
    i = j;
  }
  std::sort(result.edges.begin(), result.edges.end(),
            [&g](const Edge& a, const Edge& b) { return sort_key(g, a) < sort_key(g, b); });
  result.total_weight = edge_sum(result.edges);
  result.component_count = weak_component_count(g);
  return result;
}

namespace {

std::set<std::pair<std::string_view, std::string_view>> key_set(
    const DistanceGraph& g, const std::vector<Edge>& edges) {
  std::set<std::pair<std::string_view, std::string_view>> keys;
  for (const Edge& e : edges) keys.insert(g.canonical_endpoints(e));
  return keys;
}

}  // namespace

UnionTheoremReport verify_union_theorem(const DistanceGraph& g,
                                        std::uint64_t limit) {
  require_undirected(g, "verify_union_theorem");
  UnionTheoremReport report;

  BackboneReport ub = extract_backbone(g, builtin_structure("ultrametric"));
  report.backbone_edges = ub.backbone.canonical_edges();
  // Re-anchor endpoints in g's index space (identical by construction).
  report.cut_union_edges = mst_union(g).edges;

  auto forests = enumerate_all_msts(g, limit);
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (const auto& f : forests) {
    for (const Edge& e : f.edges) {
      if (seen.insert(g.canonical_endpoints(e)).second) {
        report.enumerated_union_edges.push_back(e);
      }
    }
  }
  std::sort(report.enumerated_union_edges.begin(),
            report.enumerated_union_edges.end(),
            [&g](const Edge& a, const Edge& b) { return sort_key(g, a) < sort_key(g, b); });

  auto a = key_set(g, report.backbone_edges);
  auto b = key_set(g, report.cut_union_edges);
  auto c = key_set(g, report.enumerated_union_edges);
  report.ok = (a == b) && (b == c);
  if (!report.ok) {
    auto describe = [](const char* name,
                       const std::pair<std::string_view, std::string_view>& e) {
      return std::string(name) + " contains " + std::string(e.first) + " -- " +
             std::string(e.second) + " but another set does not";
    };
    for (const auto& e : a) {
      if (!b.count(e) || !c.count(e)) {
        report.mismatch = describe("ultrametric backbone", e);
        break;
      }
    }
    if (report.mismatch.empty()) {
      for (const auto& e : b) {
        if (!a.count(e) || !c.count(e)) {
          report.mismatch = describe("cut-rule union", e);
          break;
        }
      }
    }
    if (report.mismatch.empty()) {
      for (const auto& e : c) {
        if (!a.count(e) || !b.count(e)) {
          report.mismatch = describe("enumerated union", e);
          break;
        }
      }
    }
  }
  return report;
}

CycleCheckReport cycle_property_check(
    const DistanceGraph& g,
    const std::vector<std::pair<std::string, std::string>>& cycle,
    std::uint64_t limit) {
  require_undirected(g, "cycle_property_check");
  if (cycle.size() < 3) {
    throw Error(ErrorCode::NotACycle,
                "a cycle needs at least 3 edges, got " +
                    std::to_string(cycle.size()));
  }

  std::vector<Edge> cycle_edges;
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  std::map<NodeIndex, std::size_t> degree;
  for (const auto& [a, b] : cycle) {
    auto u = g.find_node(a);
    auto v = g.find_node(b);
    if (!u || !v) {
      throw Error(ErrorCode::NotACycle,
                  "cycle references unknown node '" + (u ? b : a) + "'");
    }
    auto w = g.edge_weight(*u, *v);
    if (!w) {
      throw Error(ErrorCode::NotACycle,
                  "cycle references missing edge " + a + " -- " + b);
    }
    std::pair<NodeIndex, NodeIndex> key = std::minmax(*u, *v);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::NotACycle, "cycle repeats edge " + a + " -- " + b);
    }
    cycle_edges.push_back(Edge{*u, *v, *w, {}});
    ++degree[*u];
    ++degree[*v];
  }
  for (const auto& [node, deg] : degree) {
    if (deg != 2) {
      throw Error(ErrorCode::NotACycle,
                  "node '" + g.label(node) + "' has degree " +
                      std::to_string(deg) + " in the cycle");
    }
  }
  // degree-2 everywhere means a disjoint union of cycles; require one.
  detail::UnionFind uf(g.node_count());
  std::size_t merges = 0;
  for (const Edge& e : cycle_edges) merges += uf.unite(e.src, e.dst);
  if (merges != cycle_edges.size() - 1) {
    throw Error(ErrorCode::NotACycle, "edges do not form a single cycle");
  }

  CycleCheckReport report;
  const Edge* max_edge = &cycle_edges.front();
  for (const Edge& e : cycle_edges) {
    if (e.weight > max_edge->weight) max_edge = &e;
  }
  std::size_t max_count = 0;
  for (const Edge& e : cycle_edges) max_count += (e.weight == max_edge->weight);
  report.has_unique_max = (max_count == 1);
  report.max_edge = *max_edge;
  if (!report.has_unique_max) {
    report.holds = true;  // the cycle property's hypothesis is unmet
    return report;
  }

  auto forests = enumerate_all_msts(g, limit);
  report.forests_checked = forests.size();
  auto key = g.canonical_endpoints(*max_edge);
  report.holds = true;
  for (const auto& f : forests) {
    for (const Edge& e : f.edges) {
      if (g.canonical_endpoints(e) == key) {
        report.holds = false;
        return report;
      }
    }
  }
  return report;
}

}  // namespace netbone
