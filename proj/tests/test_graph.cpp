#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "netbone/graph.hpp"
#include "netbone/io.hpp"
#include "netbone/random_graphs.hpp"
#include "test_support.hpp"

using namespace netbone;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse: minimal valid input") {
  auto g = parse_graph("undirected\na b 1.0");
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(!g.directed());
  CHECK(g.edge_weight(0, 1) == 1.0);
}

TEST_CASE("parse: directed three-node graph round-trips") {
  auto g = parse_graph("directed\nx1 x2 1\nx2 x3 1\nx1 x3 5");
  CHECK(g.directed());
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge_weight(*g.find_node("x1"), *g.find_node("x3")) == 5.0);
  CHECK(!g.has_edge(*g.find_node("x3"), *g.find_node("x1")));
  CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("parse: comments and blank lines are skipped") {
  auto g = parse_graph("undirected\n# a comment\n\na b 2.5\n");
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_weight(0, 1) == 2.5);
}

TEST_CASE("parse: error cases name the offending line") {
  CHECK(code_of([] { parse_graph("undirected\na a 1.0"); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { parse_graph("undirected\na b 0"); }) ==
        ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { parse_graph("undirected\na b -2"); }) ==
        ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { parse_graph("undirected\na b inf"); }) ==
        ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { parse_graph("undirected\na b nan"); }) ==
        ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { parse_graph("undirected\na b x"); }) ==
        ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_graph("undirected\na b"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_graph("undirected\na  b 1"); }) ==
        ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_graph("undirected\na b 1 2"); }) ==
        ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_graph("graph\na b 1"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_graph(""); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_graph("undirected\na b 1\na b 1"); }) ==
        ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse_graph("directed\na b 1\na b 2"); }) ==
        ErrorCode::DuplicateEdge);

  try {
    parse_graph("undirected\na b 1\nb c 2\nc c 3");
    FAIL("expected SelfLoop");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("parse: reversed undirected restatement collapses or rejects") {
  auto g = parse_graph("undirected\na b 1.5\nb a 1.5");
  CHECK(g.edge_count() == 1);
  CHECK(code_of([] { parse_graph("undirected\na b 1\nb a 2"); }) ==
        ErrorCode::DuplicateEdge);
  // directed graphs keep both orientations as distinct edges
  auto d = parse_graph("directed\na b 1\nb a 2");
  CHECK(d.edge_count() == 2);
}

TEST_CASE("serialize: empty graph is only the header") {
  CHECK(serialize_graph(parse_graph("undirected\n")) == "undirected\n");
  CHECK(serialize_graph(parse_graph("directed")) == "directed\n");
}

TEST_CASE("serialize: complete triangle with equal weights") {
  auto g = test::make_graph(false, {{"b", "c", 1.0}, {"c", "a", 1.0}, {"a", "b", 1.0}});
  CHECK(serialize_graph(g) == "undirected\na b 1\na c 1\nb c 1\n");
}

TEST_CASE("serialize: weight text is preserved byte-for-byte") {
  std::string text = "undirected\na b 1.50\nb c 0.25\n";
  auto g = parse_graph(text);
  CHECK(serialize_graph(g) == text);
}

TEST_CASE("serialize: canonical output is insertion-order independent") {
  auto g1 = parse_graph("undirected\nb c 2\na b 1");
  auto g2 = parse_graph("undirected\na b 1\nb c 2");
  CHECK(g1 == g2);
  CHECK(serialize_graph(g1) == serialize_graph(g2));
}

TEST_CASE("serialize: json and dot formats") {
  auto g = test::make_graph(true, {{"a", "b", 1.5}});
  CHECK(serialize_graph(g, GraphFormat::Json) ==
        "{\n  \"directed\": true,\n  \"nodes\": [\n    \"a\",\n    \"b\"\n  ],\n"
        "  \"edges\": [\n    {\n      \"src\": \"a\",\n      \"dst\": \"b\",\n"
        "      \"w\": 1.5\n    }\n  ]\n}\n");
  CHECK(serialize_graph(g, GraphFormat::Dot) ==
        "digraph G {\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\" [label=\"1.5\"];\n}\n");
}

TEST_CASE("round-trip property: parse after serialize is the identity") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    RandomGraphSpec spec;
    spec.nodes = 2 + static_cast<int>(rng() % 9);
    spec.edge_prob = 0.5;
    spec.weights =
        (trial % 2 == 0) ? WeightModel::UniformInt : WeightModel::UniformReal;
    DistanceGraph sampled = (trial % 3 == 0) ? random_directed(rng, spec)
                                             : random_undirected(rng, spec);
    // The edge-list format carries nodes through their edges, so the
    // round-trip identity is stated on graphs without isolated nodes.
    DistanceGraph g(sampled.directed());
    for (const Edge& e : sampled.edges()) {
      g.add_edge(sampled.label(e.src), sampled.label(e.dst), e.weight,
                 e.weight_text);
    }
    std::string text = serialize_graph(g);
    DistanceGraph back = parse_graph(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
  }
}

TEST_CASE("components: weak and strong") {
  auto k3 = test::make_graph(false,
                             {{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 1.0}});
  CHECK(components(k3, ComponentKind::Weak).size() == 1);

  auto two = test::make_graph(false, {{"a", "b", 1.0}, {"c", "d", 1.0}});
  auto weak = components(two, ComponentKind::Weak);
  REQUIRE(weak.size() == 2);
  CHECK(two.label(weak[0].members[0]) == "a");
  CHECK(two.label(weak[1].members[0]) == "c");

  auto path = test::make_graph(true, {{"x1", "x2", 1.0}, {"x2", "x3", 1.0}});
  CHECK(components(path, ComponentKind::Strong).size() == 3);
  CHECK(components(path, ComponentKind::Weak).size() == 1);

  auto cycle = test::make_graph(true, {{"a", "b", 1.0}, {"b", "a", 1.0}});
  CHECK(components(cycle, ComponentKind::Strong).size() == 1);
}

TEST_CASE("components: undirected strong equals weak") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    RandomGraphSpec spec;
    spec.nodes = 2 + static_cast<int>(rng() % 8);
    spec.edge_prob = 0.35;
    auto g = random_undirected(rng, spec);
    auto weak = components(g, ComponentKind::Weak);
    auto strong = components(g, ComponentKind::Strong);
    REQUIRE(weak.size() == strong.size());
    for (std::size_t i = 0; i < weak.size(); ++i) {
      CHECK(weak[i].members == strong[i].members);
    }
  }
}

TEST_CASE("components partition the node set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    RandomGraphSpec spec;
    spec.nodes = 3 + static_cast<int>(rng() % 7);
    spec.edge_prob = 0.4;
    auto g = random_directed(rng, spec);
    for (auto kind : {ComponentKind::Weak, ComponentKind::Strong}) {
      auto parts = components(g, kind);
      std::set<NodeIndex> all;
      for (const auto& part : parts) {
        for (auto v : part.members) CHECK(all.insert(v).second);
      }
      CHECK(all.size() == g.node_count());
    }
  }
}

TEST_CASE("graph invariants: programmatic construction") {
  DistanceGraph g(false);
  CHECK_THROWS_AS(g.add_node("has space"), Error);
  CHECK_THROWS_AS(g.add_node(""), Error);
  CHECK_THROWS_AS(g.add_node("#hash"), Error);
  g.add_node("a");
  CHECK_THROWS_AS(g.add_node("a"), Error);
  g.add_edge("a", "b", 1.0);
  CHECK(code_of([&] { g.add_edge("b", "a", 1.0); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([&] { g.add_edge("a", "a", 1.0); }) == ErrorCode::SelfLoop);
  CHECK(code_of([&] { g.add_edge("a", "c", 0.0); }) == ErrorCode::NonPositiveWeight);
}
