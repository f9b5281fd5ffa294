#include "doctest.h"

#include <cmath>
#include <random>

#include "netbone/algebra.hpp"
#include "netbone/graph.hpp"

using namespace netbone;

TEST_CASE("builtin structures: metric and ultrametric operations") {
  auto metric = builtin_structure("metric");
  auto ultra = builtin_structure("ultrametric");
  CHECK(ultra.combine(3.0, 5.0) == 5.0);
  CHECK(ultra.aggregate(3.0, 5.0) == 3.0);
  CHECK(metric.combine(3.0, 5.0) == 8.0);
  CHECK(metric.aggregate(3.0, 5.0) == 3.0);
  CHECK_THROWS_AS(builtin_structure("euclidean"), Error);
}

TEST_CASE("builtin structures: monoid identities on sampled values") {
  auto metric = builtin_structure("metric");
  auto ultra = builtin_structure("ultrametric");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    double x = dist(rng);
    for (const auto& s : {metric, ultra}) {
      CHECK(s.combine(x, 0.0) == x);
      CHECK(s.aggregate(x, kInf) == x);
    }
  }
  // saturation at the top value
  CHECK(metric.combine(3.0, kInf) == kInf);
  CHECK(ultra.combine(3.0, kInf) == kInf);
}

TEST_CASE("monoid checker: builtins pass with 10^4 samples") {
  CHECK(check_monoid_pair(builtin_structure("ultrametric"), 10000).ok());
  CHECK(check_monoid_pair(builtin_structure("metric"), 10000).ok());
}

TEST_CASE("monoid checker: subtraction fails commutativity with a witness") {
  DistanceStructure bad;
  bad.name = "broken";
  bad.aggregate = [](double a, double b) { return std::min(a, b); };
  bad.combine = [](double a, double b) { return a - b; };
  bad.aggregate_is_min = true;
  auto report = check_monoid_pair(bad, 2000);
  CHECK(!report.ok());
  bool saw_commutativity = false;
  for (const auto& v : report.violations) {
    if (v.op == "combine" && v.axiom == "commutative") {
      saw_commutativity = true;
      CHECK(v.lhs != v.rhs);
    }
  }
  CHECK(saw_commutativity);
}

TEST_CASE("proximity checker: standard pair satisfies De Morgan exactly") {
  auto report = check_proximity_pair(maxmin_proximity(), 10000, 99, 0.0);
  CHECK(report.ok());
}

TEST_CASE("reciprocal map: endpoints and inversion error") {
  auto m = reciprocal_map();
  CHECK(m.forward(0.0) == kInf);
  CHECK(m.forward(1.0) == 0.0);
  CHECK(m.inverse(kInf) == 0.0);
  CHECK(m.inverse(0.0) == 1.0);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(1e-6, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 5000; ++i) {
    double p = dist(rng);
    worst = std::max(worst, std::abs(m.inverse(m.forward(p)) - p));
  }
  CHECK(worst <= 1e-12);
  // strictly decreasing on sampled ordered pairs
  for (int i = 0; i < 1000; ++i) {
    double p = dist(rng);
    double q = dist(rng);
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    CHECK(m.forward(p) > m.forward(q));
  }
}

TEST_CASE("induced structure: maxmin pair through the reciprocal map") {
  auto induced = induce_distance_structure(maxmin_proximity(), reciprocal_map());
  CHECK(induced.aggregate_is_min);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(0.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double a = dist(rng);
    double b = dist(rng);
    worst = std::max(worst, std::abs(induced.aggregate(a, b) - std::min(a, b)));
    worst = std::max(worst, std::abs(induced.combine(a, b) - std::max(a, b)));
  }
  CHECK(worst <= 1e-12);
  // identity behaviour survives the conjugation
  for (int i = 0; i < 200; ++i) {
    double a = dist(rng);
    CHECK(std::abs(induced.combine(a, 0.0) - a) <= 1e-12 * std::max(1.0, a));
    CHECK(induced.aggregate(a, kInf) == doctest::Approx(a).epsilon(1e-12));
  }
  CHECK(induced.combine(3.0, kInf) == kInf);
}

TEST_CASE("induced structure: a broken map is rejected") {
  IsomorphismMap bad;
  bad.name = "affine";
  bad.forward = [](double p) { return 1.0 - p; };  // lands in [0,1], not [0,inf]
  bad.inverse = [](double d) { return 1.0 - d; };
  try {
    induce_distance_structure(maxmin_proximity(), bad);
    FAIL("expected MapNotBijective");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MapNotBijective);
  }

  IsomorphismMap skewed = reciprocal_map();
  skewed.inverse = [](double d) { return 1.0 / (d + 2.0); };  // not the inverse
  try {
    induce_distance_structure(maxmin_proximity(), skewed);
    FAIL("expected MapNotBijective");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MapNotBijective);
  }
}
