#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netbone/graph.hpp"

namespace netbone {

struct TheoremTrialFailure {
  std::size_t trial = 0;
  std::string graph_edge_list;  // the failing graph, serialized
  std::string detail;
};

struct TheoremRunSummary {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<TheoremTrialFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// Randomized suite for the union theorem: seeded random undirected graphs
// with small integer weights (chosen to force ties), each checked for
// three-way equality between the ultrametric backbone, the cut-rule union,
// and the union of exhaustively enumerated minimum spanning forests.
// `disconnected` switches the ensemble to 2-3 component graphs, exercising
// the forest statement.
TheoremRunSummary run_union_theorem_suite(std::size_t trials, int n_max,
                                          bool disconnected, std::uint64_t seed,
                                          std::uint64_t enum_limit = 4000000);

}  // namespace netbone
