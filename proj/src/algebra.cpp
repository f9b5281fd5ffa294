#include "netbone/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "netbone/graph.hpp"

namespace netbone {

namespace {

constexpr double kInfV = std::numeric_limits<double>::infinity();

bool near(double x, double y, double tol) {
  if (std::isinf(x) || std::isinf(y)) return x == y;
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

// Mix of bulk values and the endpoints that drive saturation behaviour.
double sample_extended(std::mt19937_64& rng, double hi) {
  switch (rng() % 8) {
    case 0: return 0.0;
    case 1: return kInfV;
    case 2: return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    default: return std::uniform_real_distribution<double>(0.0, hi)(rng);
  }
}

// Dyadic rationals k/4096: exact under negation 1 - x, so involution and
// De Morgan checks on exact pairs like (min, max, 1 - a) hold with zero
// tolerance while inexact pairs still get caught.
double sample_unit(std::mt19937_64& rng) {
  switch (rng() % 8) {
    case 0: return 0.0;
    case 1: return 1.0;
    default:
      return static_cast<double>(rng() % 4097) / 4096.0;
  }
}

class AxiomChecker {
 public:
  AxiomChecker(MonoidCheckReport& report, double tol)
      : report_(report), tol_(tol) {}

  void check_op(const BinaryOp& f, const char* op_name, double identity,
                double a, double b, double c) {
    expect(f, op_name, "commutative", a, b, 0.0, f(a, b), f(b, a));
    expect(f, op_name, "associative", a, b, c, f(f(a, b), c), f(a, f(b, c)));
    expect(f, op_name, "identity", a, identity, 0.0, f(a, identity), a);
    // Monotone in each argument: enlarging one operand never shrinks the
    // result beyond tolerance.
    double lo = std::min(a, b);
    double hi = std::max(a, b);
    double left = f(lo, c);
    double right = f(hi, c);
    if (right < left && !near(left, right, tol_)) {
      record(op_name, "monotone", lo, hi, c, left, right);
    }
  }

  void expect(const BinaryOp& f, const char* op_name, const char* axiom,
              double a, double b, double c, double lhs, double rhs) {
    (void)f;
    if (!near(lhs, rhs, tol_)) record(op_name, axiom, a, b, c, lhs, rhs);
  }

  void record(const char* op_name, const char* axiom, double a, double b,
              double c, double lhs, double rhs) {
    ++report_.total_violations;
    if (report_.violations.size() < 16) {
      report_.violations.push_back(
          AxiomViolation{op_name, axiom, a, b, c, lhs, rhs});
    }
  }

 private:
  MonoidCheckReport& report_;
  double tol_;
};

}  // namespace

DistanceStructure builtin_structure(std::string_view name) {
  if (name == "metric") {
    DistanceStructure s;
    s.name = "metric";
    s.aggregate = [](double a, double b) { return std::min(a, b); };
    // IEEE addition already saturates: x + inf = inf for x >= 0.
    s.combine = [](double a, double b) { return a + b; };
    s.aggregate_is_min = true;
    s.combine_kind = CombineKind::Sum;
    return s;
  }
  if (name == "ultrametric") {
    DistanceStructure s;
    s.name = "ultrametric";
    s.aggregate = [](double a, double b) { return std::min(a, b); };
    s.combine = [](double a, double b) { return std::max(a, b); };
    s.aggregate_is_min = true;
    s.combine_kind = CombineKind::Max;
    return s;
  }
  throw Error(ErrorCode::UnknownStructure,
              "unknown structure '" + std::string(name) +
                  "'; expected 'metric' or 'ultrametric'");
}

ProximityStructure maxmin_proximity() {
  ProximityStructure p;
  p.name = "maxmin";
  p.tnorm = [](double a, double b) { return std::min(a, b); };
  p.tconorm = [](double a, double b) { return std::max(a, b); };
  p.negation = [](double a) { return 1.0 - a; };
  p.tnorm_is_min = true;
  p.tconorm_is_max = true;
  return p;
}

IsomorphismMap reciprocal_map() {
  IsomorphismMap m;
  m.name = "reciprocal";
  // 1/0 - 1 = inf and 1/1 - 1 = 0, so the endpoints need no special case.
  m.forward = [](double p) { return 1.0 / p - 1.0; };
  m.inverse = [](double d) { return 1.0 / (d + 1.0); };
  return m;
}

DistanceStructure induce_distance_structure(const ProximityStructure& p,
                                            const IsomorphismMap& m) {
  // Bijectivity and orientation checks on a fixed grid plus random points.
  if (!(m.forward(0.0) == kInfV)) {
    throw Error(ErrorCode::MapNotBijective, "map must send 0 to inf");
  }
  if (!(std::abs(m.forward(1.0)) <= 1e-9)) {
    throw Error(ErrorCode::MapNotBijective, "map must send 1 to 0");
  }
  std::vector<double> grid = {1e-6, 1e-3, 0.01, 0.1, 0.25,
                              0.5,  0.75, 0.9,  0.99, 1.0};
  std::mt19937_64 rng(0x5bd1e995u);
  for (int i = 0; i < 200; ++i) {
    grid.push_back(std::uniform_real_distribution<double>(1e-6, 1.0)(rng));
  }
  for (double x : grid) {
    double back = m.inverse(m.forward(x));
    if (!(std::abs(back - x) <= 1e-9)) {
      throw Error(ErrorCode::MapNotBijective,
                  "inverse(forward(" + format_weight(x) + ")) = " +
                      format_weight(back) + " deviates beyond 1e-9");
    }
  }
  std::sort(grid.begin(), grid.end());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i - 1] == grid[i]) continue;
    if (!(m.forward(grid[i - 1]) > m.forward(grid[i]))) {
      throw Error(ErrorCode::MapNotBijective,
                  "map is not strictly decreasing near " +
                      format_weight(grid[i]));
    }
  }

  DistanceStructure s;
  s.name = "induced-" + p.name + "-" + m.name;
  // The decreasing map swaps the roles of the operations: the T-conorm
  // (identity 0 = inverse image of inf) becomes the path aggregator and the
  // T-norm (identity 1 = inverse image of 0) becomes the edge combiner.
  UnaryOp fwd = m.forward;
  UnaryOp inv = m.inverse;
  BinaryOp tc = p.tconorm;
  BinaryOp tn = p.tnorm;
  s.aggregate = [fwd, inv, tc](double a, double b) {
    return fwd(tc(inv(a), inv(b)));
  };
  s.combine = [fwd, inv, tn](double a, double b) {
    return fwd(tn(inv(a), inv(b)));
  };
  s.aggregate_is_min = p.tconorm_is_max;
  s.combine_kind = CombineKind::Custom;

  auto report = check_monoid_pair(s, 512);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::MonoidAxiomViolation,
                "induced structure violates " + v.axiom + " for " + v.op +
                    " at (" + format_weight(v.a) + ", " + format_weight(v.b) +
                    ", " + format_weight(v.c) + ")");
  }
  return s;
}

MonoidCheckReport check_monoid_pair(const DistanceStructure& s,
                                    std::size_t samples, std::uint64_t seed,
                                    double tol) {
  MonoidCheckReport report;
  report.samples = samples;
  report.tolerance = tol;
  AxiomChecker checker(report, tol);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    double a = sample_extended(rng, 100.0);
    double b = sample_extended(rng, 100.0);
    double c = sample_extended(rng, 1000.0);
    checker.check_op(s.aggregate, "aggregate", kInfV, a, b, c);
    checker.check_op(s.combine, "combine", 0.0, a, b, c);
  }
  return report;
}

MonoidCheckReport check_proximity_pair(const ProximityStructure& p,
                                       std::size_t samples, std::uint64_t seed,
                                       double tol) {
  MonoidCheckReport report;
  report.samples = samples;
  report.tolerance = tol;
  AxiomChecker checker(report, tol);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    double a = sample_unit(rng);
    double b = sample_unit(rng);
    double c = sample_unit(rng);
    checker.check_op(p.tnorm, "tnorm", 1.0, a, b, c);
    checker.check_op(p.tconorm, "tconorm", 0.0, a, b, c);
    if (p.negation) {
      checker.expect(p.tnorm, "negation", "involution", a, 0.0, 0.0,
                     p.negation(p.negation(a)), a);
      checker.expect(p.tconorm, "negation", "de-morgan", a, b, 0.0,
                     p.tconorm(a, b),
                     p.negation(p.tnorm(p.negation(a), p.negation(b))));
    }
  }
  return report;
}

}  // namespace netbone
