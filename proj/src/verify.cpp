#include "netbone/verify.hpp"

#include <random>

#include "netbone/io.hpp"
#include "netbone/random_graphs.hpp"
#include "netbone/spanning.hpp"

namespace netbone {

TheoremRunSummary run_union_theorem_suite(std::size_t trials, int n_max,
                                          bool disconnected, std::uint64_t seed,
                                          std::uint64_t enum_limit) {
  if (n_max < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "n-max must be at least 3, got " + std::to_string(n_max));
  }
  TheoremRunSummary summary;
  summary.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RandomGraphSpec spec;
    spec.nodes = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                  std::max(1, n_max - 2)));
    spec.weights = WeightModel::UniformInt;
    spec.weight_lo = 1;
    spec.weight_hi = 4;
    spec.extra_edge_prob = 0.35;
    DistanceGraph g =
        disconnected
            ? random_disconnected_undirected(rng, spec,
                                             2 + static_cast<int>(rng() % 2))
            : random_connected_undirected(rng, spec);
    UnionTheoremReport report = verify_union_theorem(g, enum_limit);
    if (report.ok) {
      ++summary.passed;
    } else {
      summary.failures.push_back(TheoremTrialFailure{
          t, serialize_graph(g, GraphFormat::EdgeList), report.mismatch});
    }
  }
  return summary;
}

}  // namespace netbone
