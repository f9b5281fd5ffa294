#include "doctest.h"

#include "netbone/io.hpp"
#include "netbone/stats.hpp"
#include "test_support.hpp"

using namespace netbone;

TEST_CASE("stats: equal-weight triangle retains everything") {
  auto g = test::make_graph(false,
                            {{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 1.0}});
  auto s = graph_stats(g);
  CHECK(s.nodes == 3);
  CHECK(s.edges == 3);
  CHECK(s.ultrametric_backbone_edges == 3);
  CHECK(s.ultrametric_retention == 1.0);
  CHECK(s.metric_retention == 1.0);
  CHECK(s.weak_components == 1);
}

TEST_CASE("stats: K3 {1,1,2} splits the two structures") {
  auto g = test::make_graph(false,
                            {{"a", "b", 1.0}, {"a", "c", 1.0}, {"b", "c", 2.0}});
  auto s = graph_stats(g);
  CHECK(s.ultrametric_backbone_edges == 2);
  CHECK(s.metric_backbone_edges == 3);
  CHECK(s.ultrametric_retention == doctest::Approx(2.0 / 3.0));
  CHECK(s.metric_retention == 1.0);
  CHECK(s.min_weight == 1.0);
  CHECK(s.max_weight == 2.0);
}

TEST_CASE("stats: empty graph is all zeros") {
  auto s = graph_stats(parse_graph("undirected\n"));
  CHECK(s.nodes == 0);
  CHECK(s.edges == 0);
  CHECK(s.weak_components == 0);
  CHECK(s.min_weight == 0.0);
  CHECK(s.max_weight == 0.0);
  CHECK(s.metric_retention == 0.0);
  CHECK(s.ultrametric_retention == 0.0);
}

TEST_CASE("stats: directed graph reports strong components") {
  auto g = test::make_graph(true, {{"x1", "x2", 1.0}, {"x2", "x3", 1.0}});
  auto s = graph_stats(g);
  CHECK(s.directed);
  CHECK(s.weak_components == 1);
  CHECK(s.strong_components == 3);
}
