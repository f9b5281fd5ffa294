#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "netbone/error.hpp"

namespace netbone {

using BinaryOp = std::function<double(double, double)>;
using UnaryOp = std::function<double(double)>;

enum class CombineKind { Sum, Max, Custom };

// A monoid pair on [0, inf] selecting how node-to-node distances are
// computed: `combine` accumulates edge weights along a path into a path
// length (identity 0), `aggregate` folds path lengths into a distance
// (identity inf). The closure algorithms support aggregate = min only;
// `aggregate_is_min` declares that, and `combine_kind` tells the numeric
// layers whether exact comparison semantics apply (Max) or a tolerance is
// needed (Sum / Custom).
struct DistanceStructure {
  std::string name;
  BinaryOp aggregate;  // identity inf
  BinaryOp combine;    // identity 0
  bool aggregate_is_min = false;
  CombineKind combine_kind = CombineKind::Custom;
};

// A monoid pair on [0, 1]: a T-norm (identity 1) and T-conorm (identity 0),
// optionally with an involutive negation making them De Morgan duals.
// The closure of a proximity graph combines edges with the T-norm and
// aggregates paths with the T-conorm.
struct ProximityStructure {
  std::string name;
  BinaryOp tnorm;    // identity 1
  BinaryOp tconorm;  // identity 0
  UnaryOp negation;  // may be empty
  bool tnorm_is_min = false;
  bool tconorm_is_max = false;
};

// A strictly decreasing bijection [0,1] -> [0,inf] and its inverse,
// carrying proximity structures over to distance structures.
struct IsomorphismMap {
  std::string name;
  UnaryOp forward;
  UnaryOp inverse;
};

// "metric" -> (min, +) with saturating sums; "ultrametric" -> (min, max).
DistanceStructure builtin_structure(std::string_view name);

// The standard pair (tnorm = min, tconorm = max) with negation 1 - a.
ProximityStructure maxmin_proximity();

// phi(p) = 1/p - 1, with phi(0) = inf and phi(1) = 0.
IsomorphismMap reciprocal_map();

// Conjugates the proximity operations through the map: the path aggregator
// is phi . tconorm . phi^-1 and the edge combiner is phi . tnorm . phi^-1,
// so their identities come out as inf and 0 respectively. The map is checked
// for bijectivity on sampled points and the result is re-verified against
// the monoid axioms by sampling.
DistanceStructure induce_distance_structure(const ProximityStructure& p,
                                            const IsomorphismMap& m);

struct AxiomViolation {
  std::string op;     // "aggregate" or "combine"
  std::string axiom;  // "associative", "commutative", "monotone", "identity"
  double a = 0.0, b = 0.0, c = 0.0;
  double lhs = 0.0, rhs = 0.0;
};

struct MonoidCheckReport {
  std::size_t samples = 0;
  double tolerance = 0.0;
  std::size_t total_violations = 0;
  std::vector<AxiomViolation> violations;  // first few witnesses
  bool ok() const noexcept { return total_violations == 0; }
};

// Randomized verification of associativity, commutativity, monotonicity, and
// the identities of both operations, on samples from [0, inf] including the
// endpoints. Violations are report content, not errors. The tolerance is
// relative with an absolute floor of `tol`, so float-valued operations such
// as saturating sums pass while genuine axiom breaks are caught.
MonoidCheckReport check_monoid_pair(const DistanceStructure& s,
                                    std::size_t samples = 10000,
                                    std::uint64_t seed = 0x9e3779b97f4a7c15ULL,
                                    double tol = 1e-9);

// Same checks for a proximity structure on [0, 1]; also verifies, when a
// negation is present, that it is involutive and that the De Morgan duality
// a v b = !(!a ^ !b) holds on sampled pairs.
MonoidCheckReport check_proximity_pair(const ProximityStructure& p,
                                       std::size_t samples = 10000,
                                       std::uint64_t seed = 0x9e3779b97f4a7c15ULL,
                                       double tol = 1e-9);

}  // namespace netbone
