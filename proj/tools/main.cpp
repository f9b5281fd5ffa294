// netbone: distance closures, distance backbones, and spanning-structure
// verification on weighted graphs.

#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "netbone/backbone.hpp"
#include "netbone/closure.hpp"
#include "netbone/directed.hpp"
#include "netbone/io.hpp"
#include "netbone/spanning.hpp"
#include "netbone/stats.hpp"
#include "netbone/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    netbone::write_text_file(out_path, text);
  }
}

ordered_json edge_json(const netbone::DistanceGraph& g, const netbone::Edge& e) {
  auto [src, dst] = g.canonical_endpoints(e);
  return ordered_json{{"src", std::string(src)},
                      {"dst", std::string(dst)},
                      {"w", e.weight}};
}

ordered_json edges_json(const netbone::DistanceGraph& g,
                        const std::vector<netbone::Edge>& edges) {
  auto arr = ordered_json::array();
  for (const auto& e : edges) arr.push_back(edge_json(g, e));
  return arr;
}

// All of g's nodes plus the given edges, e.g. a backbone or spanning set.
netbone::DistanceGraph subgraph(const netbone::DistanceGraph& g,
                                const std::vector<netbone::Edge>& edges) {
  netbone::DistanceGraph sub(g.directed());
  for (const auto& label : g.labels()) sub.add_node(label);
  for (const auto& e : edges) sub.add_edge(e.src, e.dst, e.weight, e.weight_text);
  return sub;
}

std::string spanning_set_text(const netbone::DistanceGraph& g,
                              const netbone::SpanningSet& set,
                              const std::string& format) {
  if (format == "json") {
    const char* kind = set.kind == netbone::SpanningSet::Kind::Tree    ? "tree"
                       : set.kind == netbone::SpanningSet::Kind::Forest ? "forest"
                                                                        : "union";
    ordered_json doc{{"kind", kind},
                     {"component_count", set.component_count},
                     {"total_weight", set.total_weight},
                     {"edges", edges_json(g, set.edges)}};
    return doc.dump(2) + "\n";
  }
  return netbone::serialize_graph(subgraph(g, set.edges),
                                  format == "dot" ? netbone::GraphFormat::Dot
                                                  : netbone::GraphFormat::EdgeList);
}

std::string default_backbone_path(const std::string& input) {
  std::filesystem::path p(input);
  p.replace_extension(".backbone.edges");
  return p.string();
}

struct CommonArgs {
  std::string input;
  std::string out;
  std::string structure = "ultrametric";
  std::string format = "edges";
  std::string algorithm = "sssp";
  std::string kind = "msa";
  std::string root;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
  std::uint64_t trials = 1000;
  int n_max = 7;
  bool disconnected = false;
  std::size_t meg_max_edges = 20;
};

netbone::UnionKind parse_kind(const std::string& kind) {
  if (kind == "meg") return netbone::UnionKind::Meg;
  if (kind == "msa") return netbone::UnionKind::Msa;
  throw netbone::Error(netbone::ErrorCode::InvalidArgument,
                       "--kind must be 'meg' or 'msa', got '" + kind + "'");
}

int run_closure(const CommonArgs& args) {
  auto g = netbone::load_graph_file(args.input);
  auto s = netbone::builtin_structure(args.structure);
  auto algo = [&] {
    if (args.algorithm == "fw") return netbone::ClosureAlgorithm::TripleLoop;
    if (args.algorithm == "sssp") return netbone::ClosureAlgorithm::PerSource;
    throw netbone::Error(netbone::ErrorCode::InvalidArgument,
                         "--algorithm must be 'fw' or 'sssp', got '" +
                             args.algorithm + "'");
  }();
  auto closure = netbone::distance_closure(g, s, algo);

  ordered_json doc;
  doc["structure"] = closure.structure_name();
  doc["nodes"] = closure.node_labels();
  auto& rows = doc["rows"] = ordered_json::array();
  for (std::size_t i = 0; i < closure.size(); ++i) {
    auto row = ordered_json::array();
    for (std::size_t j = 0; j < closure.size(); ++j) {
      double v = closure.at(i, j);
      if (std::isinf(v)) {
        row.push_back("inf");
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  emit(doc.dump(2) + "\n", args.out);
  return kExitOk;
}

int run_backbone(const CommonArgs& args) {
  auto g = netbone::load_graph_file(args.input);
  auto s = netbone::builtin_structure(args.structure);
  auto report = netbone::extract_backbone(g, s);

  std::string backbone_path =
      args.out.empty() ? default_backbone_path(args.input) : args.out;
  netbone::write_text_file(backbone_path,
                           netbone::serialize_graph(report.backbone));

  ordered_json doc;
  doc["structure"] = report.structure_name;
  doc["backbone_file"] = backbone_path;
  auto kept = ordered_json::array();
  auto removed = ordered_json::array();
  for (const auto& c : report.classes) {
    if (c.cls == netbone::EdgeClass::Triangular) {
      kept.push_back(edge_json(g, c.edge));
    } else {
      removed.push_back(ordered_json{{"edge", edge_json(g, c.edge)},
                                     {"distortion", c.distortion}});
    }
  }
  doc["kept"] = std::move(kept);
  doc["removed"] = std::move(removed);
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int run_mst(const CommonArgs& args, bool union_mode) {
  auto g = netbone::load_graph_file(args.input);
  auto set = union_mode ? netbone::mst_union(g) : netbone::kruskal_msf(g);
  emit(spanning_set_text(g, set, args.format), args.out);
  return kExitOk;
}

int run_arborescence(const CommonArgs& args) {
  auto g = netbone::load_graph_file(args.input);
  auto arb = netbone::min_arborescence(g, args.root);

  if (args.format == "json") {
    auto spanned = ordered_json::array();
    for (auto v : arb.spanned) spanned.push_back(g.label(v));
    ordered_json doc{{"root", g.label(arb.root)},
                     {"spanned", spanned},
                     {"spanned_count", arb.spanned.size()},
                     {"node_count", g.node_count()},
                     {"total_weight", arb.total_weight},
                     {"edges", edges_json(g, arb.edges)}};
    emit(doc.dump(2) + "\n", args.out);
    return kExitOk;
  }
  if (args.format == "dot") {
    emit(netbone::serialize_graph(subgraph(g, arb.edges), netbone::GraphFormat::Dot),
         args.out);
    return kExitOk;
  }
  std::ostringstream out;
  out << "directed\n";
  out << "# arborescence rooted at " << g.label(arb.root) << "\n";
  out << "# spans " << arb.spanned.size() << " of " << g.node_count()
      << " nodes; nodes unreachable from the root are excluded\n";
  auto text = netbone::serialize_graph(subgraph(g, arb.edges));
  out << text.substr(text.find('\n') + 1);
  emit(out.str(), args.out);
  return kExitOk;
}

int run_meg(const CommonArgs& args) {
  auto g = netbone::load_graph_file(args.input);
  auto megs = netbone::min_equivalent_graphs(g, args.meg_max_edges);
  ordered_json doc;
  doc["count"] = megs.size();
  doc["total_weight"] = megs.empty() ? 0.0 : megs.front().total_weight;
  auto arr = ordered_json::array();
  for (const auto& meg : megs) arr.push_back(edges_json(g, meg.edges));
  doc["graphs"] = std::move(arr);
  emit(doc.dump(2) + "\n", args.out);
  return kExitOk;
}

int run_verify(const CommonArgs& args) {
  auto summary = netbone::run_union_theorem_suite(args.trials, args.n_max,
                                                  args.disconnected, args.seed);
  std::ostringstream out;
  out << "union theorem (" << (args.disconnected ? "disconnected" : "connected")
      << ", n in [3," << args.n_max << "], seed " << args.seed << "): "
      << summary.passed << "/" << summary.trials << " passed\n";
  for (const auto& f : summary.failures) {
    out << "trial " << f.trial << " FAILED: " << f.detail << "\n"
        << f.graph_edge_list;
  }
  emit(out.str(), args.out);
  return summary.ok() ? kExitOk : kExitVerificationFailed;
}

int run_verify_remark(const CommonArgs& args) {
  auto g = netbone::load_graph_file(args.input);
  auto report = netbone::verify_remark(g, parse_kind(args.kind),
                                       args.meg_max_edges);
  ordered_json doc{{"kind", netbone::to_string(report.kind)},
                   {"exhibits_both", report.exhibits_both},
                   {"backbone_only", edges_json(g, report.backbone_only)},
                   {"union_only", edges_json(g, report.union_only)},
                   {"backbone_edges", edges_json(g, report.backbone_edges)},
                   {"union_edges", edges_json(g, report.union_edges)}};
  emit(doc.dump(2) + "\n", args.out);
  return report.exhibits_both ? kExitOk : kExitVerificationFailed;
}

int run_counterexample(const CommonArgs& args) {
  auto report =
      netbone::find_counterexample(parse_kind(args.kind), args.budget, args.seed);
  netbone::write_text_file(args.out, netbone::serialize_graph(report.graph));
  ordered_json doc{
      {"kind", netbone::to_string(report.kind)},
      {"candidates_tried", report.candidates_tried},
      {"witness_file", args.out},
      {"backbone_only_witness", edge_json(report.graph, report.backbone_only_witness)},
      {"union_only_witness", edge_json(report.graph, report.union_only_witness)}};
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int run_convert(const CommonArgs& args) {
  auto g = netbone::load_graph_file(args.input);
  emit(netbone::serialize_graph(g, netbone::parse_format_name(args.format)),
       args.out);
  return kExitOk;
}

int run_stats(const CommonArgs& args) {
  auto g = netbone::load_graph_file(args.input);
  auto s = netbone::graph_stats(g);
  ordered_json doc{{"nodes", s.nodes},
                   {"edges", s.edges},
                   {"directed", s.directed},
                   {"weak_components", s.weak_components},
                   {"strong_components", s.strong_components},
                   {"weight_min", s.min_weight},
                   {"weight_max", s.max_weight},
                   {"metric_backbone_edges", s.metric_backbone_edges},
                   {"ultrametric_backbone_edges", s.ultrametric_backbone_edges},
                   {"metric_retention", s.metric_retention},
                   {"ultrametric_retention", s.ultrametric_retention}};
  emit(doc.dump(2) + "\n", args.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance closures, distance backbones, and spanning subgraphs"};
  app.require_subcommand(1);
  CommonArgs args;
  std::function<int()> handler;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", args.input, "input graph (edge-list format)")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", args.out, "write output to this file");
  };
  auto add_structure = [&](CLI::App* cmd) {
    cmd->add_option("--structure", args.structure,
                    "distance structure: metric or ultrametric")
        ->default_str("ultrametric");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "output format: edges, json, or dot")
        ->default_str("edges");
  };

  auto* closure = app.add_subcommand("closure", "all-pairs distance closure");
  add_input(closure);
  add_out(closure);
  add_structure(closure);
  closure->add_option("--algorithm", args.algorithm,
                      "fw (triple loop) or sssp (per-source search)")
      ->default_str("sssp");
  closure->callback([&] { handler = [&] { return run_closure(args); }; });

  auto* backbone =
      app.add_subcommand("backbone", "distance backbone and edge classification");
  add_input(backbone);
  add_structure(backbone);
  backbone->add_option("--out", args.out,
                       "backbone edge-list path (default: <input>.backbone.edges)");
  backbone->callback([&] { handler = [&] { return run_backbone(args); }; });

  auto* mst = app.add_subcommand("mst", "minimum spanning forest (Kruskal)");
  add_input(mst);
  add_out(mst);
  add_format(mst);
  mst->callback([&] { handler = [&] { return run_mst(args, false); }; });

  auto* mst_union =
      app.add_subcommand("mst-union", "union of all minimum spanning forests");
  add_input(mst_union);
  add_out(mst_union);
  add_format(mst_union);
  mst_union->callback([&] { handler = [&] { return run_mst(args, true); }; });

  auto* arb = app.add_subcommand("arborescence",
                                 "minimum spanning arborescence at a root");
  add_input(arb);
  add_out(arb);
  add_format(arb);
  arb->add_option("--root", args.root, "root node label")->required();
  arb->callback([&] { handler = [&] { return run_arborescence(args); }; });

  auto* meg = app.add_subcommand("meg", "all minimum equivalent graphs");
  add_input(meg);
  add_out(meg);
  meg->add_option("--max-edges", args.meg_max_edges,
                  "edge-count guard for the exhaustive search")
      ->default_str("20");
  meg->callback([&] { handler = [&] { return run_meg(args); }; });

  auto* verify = app.add_subcommand(
      "verify", "randomized union-theorem suite (backbone = union of MSFs)");
  std::string theorem = "union";
  verify->add_option("--theorem", theorem, "theorem to check (union)")
      ->default_str("union");
  verify->add_option("--n-max", args.n_max, "largest node count")->default_str("7");
  verify->add_option("--trials", args.trials, "number of random graphs")
      ->default_str("1000");
  verify->add_option("--seed", args.seed, "random seed")->default_str("0");
  verify->add_flag("--disconnected", args.disconnected,
                   "sample 2-3 component graphs (forest statement)");
  add_out(verify);
  verify->callback([&] {
    if (theorem != "union") {
      throw netbone::Error(netbone::ErrorCode::InvalidArgument,
                           "--theorem supports 'union' only, got '" + theorem +
                               "'");
    }
    handler = [&] { return run_verify(args); };
  });

  auto* vremark = app.add_subcommand(
      "verify-remark", "check a graph for the backbone/union divergence pattern");
  add_input(vremark);
  add_out(vremark);
  vremark->add_option("--kind", args.kind, "union kind: meg or msa")->required();
  vremark->callback([&] { handler = [&] { return run_verify_remark(args); }; });

  auto* counter = app.add_subcommand(
      "counterexample", "search for a backbone/union divergence witness");
  counter->add_option("--kind", args.kind, "union kind: meg or msa")->required();
  counter->add_option("--budget", args.budget, "candidate graphs to try")
      ->default_str("100000");
  counter->add_option("--seed", args.seed, "random seed")->default_str("0");
  counter->add_option("--out", args.out, "witness edge-list path")->required();
  counter->callback([&] { handler = [&] { return run_counterexample(args); }; });

  auto* convert = app.add_subcommand("convert", "convert between graph formats");
  add_input(convert);
  add_out(convert);
  add_format(convert);
  convert->callback([&] { handler = [&] { return run_convert(args); }; });

  auto* stats = app.add_subcommand("stats", "graph and backbone summary");
  add_input(stats);
  add_out(stats);
  stats->callback([&] { handler = [&] { return run_stats(args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const netbone::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return handler();
  } catch (const netbone::Error& e) {
    std::cerr << "error (" << netbone::to_string(e.code()) << "): " << e.what()
              << "\n";
    return e.code() == netbone::ErrorCode::BudgetExhausted
               ? kExitVerificationFailed
               : kExitUsage;
  }
}
