#include "netbone/directed.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "netbone/backbone.hpp"
#include "netbone/closure.hpp"

namespace netbone {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void require_directed(const DistanceGraph& g, const char* op) {
  if (!g.directed()) {
    throw Error(ErrorCode::UndirectedInput,
                std::string(op) + " requires a directed graph");
  }
}

std::vector<NodeIndex> reachable_from(const DistanceGraph& g, NodeIndex root) {
  auto adj = g.out_adjacency();
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeIndex> order;
  std::queue<NodeIndex> queue;
  queue.push(root);
  seen[root] = 1;
  while (!queue.empty()) {
    NodeIndex u = queue.front();
    queue.pop();
    order.push_back(u);
    for (auto [v, w] : adj[u]) {
      (void)w;
      if (!seen[v]) {
        seen[v] = 1;
        queue.push(v);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

void sort_canonical(const DistanceGraph& g, std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [&g](const Edge& a, const Edge& b) {
    return g.canonical_endpoints(a) < g.canonical_endpoints(b);
  });
}

double edge_sum(const std::vector<Edge>& edges) {
  double total = 0.0;
  for (const Edge& e : edges) total += e.weight;
  return total;
}

// Edge in the (possibly contracted) working space. `rank` is the canonical
// rank of the underlying original edge and breaks weight ties at every
// contraction level; `parent` indexes the previous level's edge vector.
struct WorkEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double w = 0.0;
  std::size_t rank = 0;
  std::size_t parent = kNone;
};

// Chu-Liu/Edmonds selection. Nodes are 0..n-1, every non-root node is
// reachable from the root. Returns indices into `edges` that form a minimum
// arborescence.
std::vector<std::size_t> edmonds_select(std::size_t n, std::size_t root,
                                        const std::vector<WorkEdge>& edges) {
  std::vector<std::size_t> best(n, kNone);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const WorkEdge& e = edges[i];
    if (e.v == root || e.u == e.v) continue;
    if (best[e.v] == kNone || e.w < edges[best[e.v]].w ||
        (e.w == edges[best[e.v]].w && e.rank < edges[best[e.v]].rank)) {
      best[e.v] = i;
    }
  }

  // Find a cycle among the best in-edges, if any.
  std::vector<int> state(n, 0);  // 0 fresh, 1 on current walk, 2 done
  std::vector<std::size_t> cycle;
  for (std::size_t start = 0; start < n && cycle.empty(); ++start) {
    std::size_t v = start;
    std::vector<std::size_t> walk;
    while (v != kNone && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = (v == root || best[v] == kNone) ? kNone : edges[best[v]].u;
    }
    if (v != kNone && state[v] == 1) {
      auto it = std::find(walk.begin(), walk.end(), v);
      cycle.assign(it, walk.end());
    }
    for (std::size_t w : walk) state[w] = 2;
  }

  if (cycle.empty()) {
    std::vector<std::size_t> picked;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != root && best[v] != kNone) picked.push_back(best[v]);
    }
    return picked;
  }

  std::vector<char> in_cycle(n, 0);
  for (std::size_t v : cycle) in_cycle[v] = 1;

  // Contract the cycle into one supernode.
  std::vector<std::size_t> remap(n, kNone);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_cycle[v]) remap[v] = next++;
  }
  std::size_t super = next++;
  for (std::size_t v : cycle) remap[v] = super;

  std::vector<WorkEdge> contracted;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const WorkEdge& e = edges[i];
    std::size_t mu = remap[e.u];
    std::size_t mv = remap[e.v];
    if (mu == mv) continue;
    double w = e.w;
    if (in_cycle[e.v]) w -= edges[best[e.v]].w;
    contracted.push_back(WorkEdge{mu, mv, w, e.rank, i});
  }

  auto sub = edmonds_select(next, remap[root], contracted);

  std::vector<std::size_t> picked;
  std::size_t entry_node = kNone;
  for (std::size_t s : sub) {
    std::size_t original = contracted[s].parent;
    picked.push_back(original);
    if (in_cycle[edges[original].v]) entry_node = edges[original].v;
  }
  // All cycle in-edges stay except the one displaced by the entering edge.
  for (std::size_t v : cycle) {
    if (v != entry_node) picked.push_back(best[v]);
  }
  return picked;
}

struct RootedProblem {
  std::vector<NodeIndex> reachable;
  std::vector<std::size_t> to_local;   // node index -> local id or kNone
  std::vector<Edge> canonical;         // canonical edges of g
  std::vector<WorkEdge> work;          // edges inside the reachable set
};

RootedProblem build_rooted_problem(const DistanceGraph& g, NodeIndex root) {
  RootedProblem problem;
  problem.reachable = reachable_from(g, root);
  problem.to_local.assign(g.node_count(), kNone);
  for (std::size_t i = 0; i < problem.reachable.size(); ++i) {
    problem.to_local[problem.reachable[i]] = i;
  }
  problem.canonical = g.canonical_edges();
  for (std::size_t i = 0; i < problem.canonical.size(); ++i) {
    const Edge& e = problem.canonical[i];
    std::size_t lu = problem.to_local[e.src];
    std::size_t lv = problem.to_local[e.dst];
    if (lu == kNone || lv == kNone) continue;
    problem.work.push_back(WorkEdge{lu, lv, e.weight, i, i});
  }
  return problem;
}

NodeIndex resolve_node(const DistanceGraph& g, std::string_view label) {
  auto idx = g.find_node(label);
  if (!idx) {
    throw Error(ErrorCode::NoSuchNode,
                "no node labelled '" + std::string(label) + "'");
  }
  return *idx;
}

std::set<std::pair<std::string_view, std::string_view>> key_set(
    const DistanceGraph& g, const std::vector<Edge>& edges) {
  std::set<std::pair<std::string_view, std::string_view>> keys;
  for (const Edge& e : edges) keys.insert(g.canonical_endpoints(e));
  return keys;
}

}  // namespace

const char* to_string(UnionKind kind) noexcept {
  return kind == UnionKind::Meg ? "meg" : "msa";
}

Arborescence min_arborescence(const DistanceGraph& g,
                              std::string_view root_label) {
  require_directed(g, "min_arborescence");
  NodeIndex root = resolve_node(g, root_label);
  RootedProblem problem = build_rooted_problem(g, root);

  auto picked = edmonds_select(problem.reachable.size(),
                               problem.to_local[root], problem.work);
  Arborescence result;
  result.root = root;
  result.spanned = problem.reachable;
  for (std::size_t i : picked) {
    // `parent` of a top-level work edge is its canonical index.
    result.edges.push_back(problem.canonical[problem.work[i].parent]);
  }
  sort_canonical(g, result.edges);
  result.total_weight = edge_sum(result.edges);
  return result;
}

std::vector<Arborescence> enumerate_min_arborescences(
    const DistanceGraph& g, std::string_view root_label, std::uint64_t limit) {
  require_directed(g, "enumerate_min_arborescences");
  NodeIndex root = resolve_node(g, root_label);
  RootedProblem problem = build_rooted_problem(g, root);
  const std::size_t k = problem.reachable.size();
  const std::size_t local_root = problem.to_local[root];

  // One in-edge choice per non-root reachable node.
  std::vector<std::vector<std::size_t>> choices(k);
  for (std::size_t i = 0; i < problem.work.size(); ++i) {
    const WorkEdge& e = problem.work[i];
    if (e.v != local_root) choices[e.v].push_back(i);
  }
  std::uint64_t combos = 1;
  for (std::size_t v = 0; v < k; ++v) {
    if (v == local_root) continue;
    combos *= choices[v].size();
    if (combos > limit) {
      throw Error(ErrorCode::TooLarge,
                  "arborescence enumeration exceeds " + std::to_string(limit) +
                      " candidate combinations");
    }
  }

  std::vector<std::size_t> slots;  // nodes needing an in-edge
  for (std::size_t v = 0; v < k; ++v) {
    if (v != local_root) slots.push_back(v);
  }

  std::vector<Arborescence> minima;
  double best = kInf;
  std::vector<std::size_t> parent_edge(k, kNone);

  auto is_arborescence = [&]() {
    // Each non-root node has one parent; acyclicity makes it a tree on the
    // reachable set.
    std::vector<int> state(k, 0);
    for (std::size_t start = 0; start < k; ++start) {
      std::size_t v = start;
      std::vector<std::size_t> walk;
      while (state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        if (v == local_root) break;
        v = problem.work[parent_edge[v]].u;
      }
      bool cyclic = (state[v] == 1 && v != local_root);
      for (std::size_t w : walk) state[w] = 2;
      if (cyclic) return false;
    }
    return true;
  };

  auto emit = [&]() {
    if (!is_arborescence()) return;
    double weight = 0.0;
    for (std::size_t v : slots) weight += problem.work[parent_edge[v]].w;
    if (weight > best) return;
    if (weight < best) {
      best = weight;
      minima.clear();
    }
    Arborescence a;
    a.root = root;
    a.spanned = problem.reachable;
    for (std::size_t v : slots) {
      a.edges.push_back(problem.canonical[problem.work[parent_edge[v]].parent]);
    }
    sort_canonical(g, a.edges);
    a.total_weight = weight;
    minima.push_back(std::move(a));
  };

  // Depth-first product over the per-node candidate lists.
  std::vector<std::size_t> cursor(slots.size(), 0);
  std::size_t depth = 0;
  if (slots.empty()) {
    emit();  // root alone: the empty arborescence
  } else {
    while (true) {
      if (cursor[depth] < choices[slots[depth]].size()) {
        parent_edge[slots[depth]] = choices[slots[depth]][cursor[depth]];
        if (depth + 1 == slots.size()) {
          emit();
          ++cursor[depth];
        } else {
          ++depth;
          cursor[depth] = 0;
        }
      } else {
        if (depth == 0) break;
        --depth;
        ++cursor[depth];
      }
    }
  }
  return minima;
}

std::vector<EquivalentGraph> min_equivalent_graphs(const DistanceGraph& g,
                                                   std::size_t max_edges) {
  require_directed(g, "min_equivalent_graphs");
  const auto edges = g.canonical_edges();
  const std::size_t m = edges.size();
  if (m > max_edges) {
    throw Error(ErrorCode::TooLarge,
                "minimum equivalent graph search limited to " +
                    std::to_string(max_edges) + " edges, graph has " +
                    std::to_string(m));
  }
  const std::size_t n = g.node_count();

  // Reachability is preserved iff every original edge's endpoints stay
  // connected, so only those pairs need checking.
  std::vector<char> included(m, 1);
  auto reaches = [&](NodeIndex from, NodeIndex to) {
    std::vector<char> seen(n, 0);
    std::vector<NodeIndex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      if (u == to) return true;
      for (std::size_t i = 0; i < m; ++i) {
        if (included[i] && edges[i].src == u && !seen[edges[i].dst]) {
          seen[edges[i].dst] = 1;
          stack.push_back(edges[i].dst);
        }
      }
    }
    return false;
  };
  auto preserves_all = [&]() {
    for (const Edge& e : edges) {
      if (!reaches(e.src, e.dst)) return false;
    }
    return true;
  };

  double best = kInf;
  std::vector<std::vector<char>> minima;

  // Depth-first include/exclude over edges. Weights are positive, so a
  // partial sum already above the incumbent cannot recover; excluding an
  // edge whose endpoints are disconnected even using every remaining edge
  // cannot recover either.
  auto search = [&](auto&& self, std::size_t i, double weight) -> void {
    if (weight > best) return;
    if (i == m) {
      if (!preserves_all()) return;
      if (weight < best) {
        best = weight;
        minima.clear();
      }
      minima.push_back(included);
      return;
    }
    included[i] = 1;
    self(self, i + 1, weight + edges[i].weight);
    included[i] = 0;
    if (reaches(edges[i].src, edges[i].dst)) {
      self(self, i + 1, weight);
    }
    included[i] = 1;
  };
  search(search, 0, 0.0);

  std::vector<EquivalentGraph> result;
  result.reserve(minima.size());
  for (const auto& mask : minima) {
    EquivalentGraph eg;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask[i]) eg.edges.push_back(edges[i]);
    }
    eg.total_weight = edge_sum(eg.edges);
    result.push_back(std::move(eg));
  }
  return result;
}

SpanningSet msa_union(const DistanceGraph& g, std::uint64_t limit) {
  require_directed(g, "msa_union");
  SpanningSet result;
  result.kind = SpanningSet::Kind::Union;
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (NodeIndex r = 0; r < g.node_count(); ++r) {
    for (const auto& arb : enumerate_min_arborescences(g, g.label(r), limit)) {
      for (const Edge& e : arb.edges) {
        if (seen.insert(g.canonical_endpoints(e)).second) {
          result.edges.push_back(e);
        }
      }
    }
  }
  sort_canonical(g, result.edges);
  result.total_weight = edge_sum(result.edges);
  result.component_count = components(g, ComponentKind::Weak).size();
  return result;
}

bool edge_in_ultrametric_backbone_bruteforce(const DistanceGraph& g,
                                             const Edge& e) {
  // Depth-first search over edges strictly smaller than e, ignoring e's own
  // entry. Works for directed and undirected graphs alike.
  auto adj = g.out_adjacency();
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeIndex> stack{e.src};
  seen[e.src] = 1;
  while (!stack.empty()) {
    NodeIndex u = stack.back();
    stack.pop_back();
    for (auto [v, w] : adj[u]) {
      if (w >= e.weight || seen[v]) continue;
      if (v == e.dst) return false;  // smaller-edge path found; edge removed
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  return true;
}

std::vector<Edge> shortest_path_dag_union(const DistanceGraph& g) {
  ClosureMatrix closure = distance_closure(g, builtin_structure("metric"));
  std::vector<Edge> result;
  for (const Edge& e : g.canonical_edges()) {
    bool on_some_shortest_path = false;
    for (std::size_t s = 0; s < g.node_count() && !on_some_shortest_path; ++s) {
      double to_src = closure.at(s, e.src);
      if (std::isinf(to_src)) continue;
      if (to_src + e.weight == closure.at(s, e.dst)) {
        on_some_shortest_path = true;
      }
      if (!g.directed() && !on_some_shortest_path) {
        double to_dst = closure.at(s, e.dst);
        if (!std::isinf(to_dst) && to_dst + e.weight == closure.at(s, e.src)) {
          on_some_shortest_path = true;
        }
      }
    }
    if (on_some_shortest_path) result.push_back(e);
  }
  return result;
}

RemarkReport verify_remark(const DistanceGraph& g, UnionKind kind,
                           std::size_t meg_max_edges, std::uint64_t arb_limit) {
  require_directed(g, "verify_remark");
  RemarkReport report;
  report.kind = kind;

  BackboneReport ub = extract_backbone(g, builtin_structure("ultrametric"));
  report.backbone_edges = ub.backbone.canonical_edges();

  if (kind == UnionKind::Meg) {
    std::set<std::pair<std::string_view, std::string_view>> seen;
    for (const auto& meg : min_equivalent_graphs(g, meg_max_edges)) {
      for (const Edge& e : meg.edges) {
        if (seen.insert(g.canonical_endpoints(e)).second) {
          report.union_edges.push_back(e);
        }
      }
    }
    sort_canonical(g, report.union_edges);
  } else {
    report.union_edges = msa_union(g, arb_limit).edges;
  }

  auto backbone_keys = key_set(g, report.backbone_edges);
  auto union_keys = key_set(g, report.union_edges);
  for (const Edge& e : report.backbone_edges) {
    if (!union_keys.count(g.canonical_endpoints(e))) {
      report.backbone_only.push_back(e);
    }
  }
  for (const Edge& e : report.union_edges) {
    if (!backbone_keys.count(g.canonical_endpoints(e))) {
      report.union_only.push_back(e);
    }
  }
  report.exhibits_both = !report.backbone_only.empty() && !report.union_only.empty();
  return report;
}

namespace {

DistanceGraph random_candidate(std::mt19937_64& rng, UnionKind kind) {
  std::uniform_int_distribution<int> n_dist(4, 6);
  std::uniform_int_distribution<int> w_dist(1, 6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = n_dist(rng);
  // Keep candidates sparse enough that the exhaustive unions stay cheap.
  const double p = (kind == UnionKind::Meg) ? 0.40 : 0.50;
  DistanceGraph g(true);
  for (int i = 1; i <= n; ++i) g.add_node("x" + std::to_string(i));
  for (NodeIndex u = 0; u < static_cast<NodeIndex>(n); ++u) {
    for (NodeIndex v = 0; v < static_cast<NodeIndex>(n); ++v) {
      if (u == v) continue;
      if (coin(rng) < p) {
        int w = w_dist(rng);
        g.add_edge(u, v, static_cast<double>(w), std::to_string(w));
      }
    }
  }
  return g;
}

}  // namespace

CounterexampleReport find_counterexample(UnionKind kind, std::uint64_t budget,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t tried = 0;
  std::uint64_t skipped = 0;
  while (tried < budget) {
    DistanceGraph g = random_candidate(rng, kind);
    ++tried;
    if (kind == UnionKind::Meg && g.edge_count() > 16) {
      ++skipped;
      continue;
    }
    RemarkReport remark;
    try {
      remark = verify_remark(g, kind);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TooLarge) {
        ++skipped;
        continue;
      }
      throw;
    }
    if (!remark.exhibits_both) continue;

    // Re-certify both witnesses independently of the closure pipeline.
    const Edge& in_backbone = remark.backbone_only.front();
    const Edge& in_union = remark.union_only.front();
    bool certified =
        edge_in_ultrametric_backbone_bruteforce(g, in_backbone) &&
        !edge_in_ultrametric_backbone_bruteforce(g, in_union);
    // The whole backbone must agree with the brute-force membership rule.
    auto backbone_keys = key_set(g, remark.backbone_edges);
    for (const Edge& e : g.canonical_edges()) {
      bool brute = edge_in_ultrametric_backbone_bruteforce(g, e);
      bool closed = backbone_keys.count(g.canonical_endpoints(e)) > 0;
      if (brute != closed) certified = false;
    }
    if (!certified) {
      throw Error(ErrorCode::InvalidArgument,
                  "internal witness certification failed; closure and "
                  "brute-force backbones disagree");
    }

    CounterexampleReport report;
    report.graph = g;
    report.kind = kind;
    report.backbone_only_witness = in_backbone;
    report.union_only_witness = in_union;
    report.candidates_tried = tried;
    return report;
  }
  throw Error(ErrorCode::BudgetExhausted,
              "no " + std::string(to_string(kind)) +
                  " counterexample found: tried " + std::to_string(tried) +
                  " candidates (" + std::to_string(skipped) +
                  " skipped as too large), budget " + std::to_string(budget));
}

}  // namespace netbone
