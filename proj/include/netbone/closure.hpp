#pragma once

#include <string>
#include <vector>

#include "netbone/algebra.hpp"
#include "netbone/graph.hpp"

namespace netbone {

// All-pairs distance matrix of a graph under a distance structure. Rows and
// columns follow the graph's node order. Entries are inf exactly for pairs
// with no connecting path; the diagonal is 0 (1 for proximity closures).
class ClosureMatrix {
 public:
  ClosureMatrix(std::vector<std::string> labels, std::string structure_name,
                double fill);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& node_labels() const noexcept { return labels_; }
  const std::string& structure_name() const noexcept { return structure_; }

  double at(std::size_t i, std::size_t j) const {
    return entries_[i * labels_.size() + j];
  }
  void set(std::size_t i, std::size_t j, double v) {
    entries_[i * labels_.size() + j] = v;
  }
  const std::vector<double>& entries() const noexcept { return entries_; }

  bool operator==(const ClosureMatrix& other) const;

 private:
  std::vector<std::string> labels_;
  std::string structure_;
  std::vector<double> entries_;
};

enum class ClosureAlgorithm {
  TripleLoop,  // generalized Floyd-Warshall relaxation
  PerSource,   // generalized Dijkstra per source node
};

// Distance closure: entry (i, j) is the minimum over paths i -> j of the
// combine-fold of the path's edge weights. Requires aggregate = min; both
// algorithms produce identical matrices for combine in {sum, max}.
ClosureMatrix distance_closure(const DistanceGraph& g,
                               const DistanceStructure& s,
                               ClosureAlgorithm algo = ClosureAlgorithm::PerSource);

// Proximity closure on weights in (0, 1]: entry (i, j) is the maximum over
// paths of the minimum edge weight along the path (the max-min closure).
// Diagonal entries are 1; unreachable pairs are 0. Requires the standard
// (min, max) pair.
ClosureMatrix proximity_closure(const DistanceGraph& g,
                                const ProximityStructure& p);

struct CommutationReport {
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Checks that mapping edge weights through phi and closing in distance space
// matches applying phi to the proximity closure, elementwise within tol.
CommutationReport verify_phi_commutation(const DistanceGraph& proximity_graph,
                                         const ProximityStructure& p,
                                         const IsomorphismMap& m, double tol);

// True when re-closing the matrix (viewed as a complete graph per component)
// reproduces it exactly; every matrix produced by distance_closure is a
// fixed point.
bool closure_idempotent(const ClosureMatrix& c, const DistanceStructure& s);

}  // namespace netbone
