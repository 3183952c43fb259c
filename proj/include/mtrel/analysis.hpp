#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtrel/engine.hpp"
#include "mtrel/error.hpp"
#include "mtrel/network.hpp"

namespace mtrel {

/// R(subset). Throws std::invalid_argument for fewer than two distinct nodes
/// and std::out_of_range for node ids >= n.
double subset_reliability(const ReliabilityTable& table, std::span<const NodeId> subset);

/// Row-major n x n pair reliabilities; the diagonal is 1.
std::vector<std::vector<double>> all_pair_view(const ReliabilityTable& table);

/// Mean of R over every subset of exactly k nodes, 2 <= k <= n.
double size_stratified_average(const ReliabilityTable& table, std::size_t k);

struct MonotonicityViolation {
  SubsetLabel subset;
  SubsetLabel superset;
  double subset_reliability = 0.0;
  double superset_reliability = 0.0;
};

/// Every pair subset ⊂ superset (subset of >= 2 nodes) with
/// R(superset) > R(subset) + tolerance. Visits all such pairs, O(3^n).
std::vector<MonotonicityViolation> monotonicity_audit(const ReliabilityTable& table,
                                                      double tolerance = 1e-12);

/// Raised when a node permutation does not map the arc set onto itself.
class NotAnAutomorphism : public Error {
 public:
  NotAnAutomorphism(const std::string& message, Arc arc, NodeId image_u, NodeId image_v)
      : Error(message), arc_(arc), image_u_(image_u), image_v_(image_v) {}

  const Arc& arc() const noexcept { return arc_; }
  NodeId image_u() const noexcept { return image_u_; }
  NodeId image_v() const noexcept { return image_v_; }

 private:
  Arc arc_;
  NodeId image_u_;
  NodeId image_v_;
};

struct SymmetryMismatch {
  SubsetLabel label;
  SubsetLabel image;
  double difference = 0.0;
};

struct SymmetryReport {
  std::size_t labels_checked = 0;
  double max_difference = 0.0;
  std::vector<SymmetryMismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Checks R(σ(ζ)) = R(ζ) for every label, where permutation[v] = σ(v).
/// The permutation must be a bijection mapping each arc onto an arc of equal
/// reliability; otherwise NotAnAutomorphism (or std::invalid_argument for a
/// non-bijection) is thrown before any table entry is read.
SymmetryReport symmetry_check(const Network& network, std::span<const NodeId> permutation,
                              const ReliabilityTable& table, double tolerance = 1e-12);

/// Mean full-graph degree over the nodes of `subset`.
double average_degree(const Network& network, std::span<const NodeId> subset);

}  // namespace mtrel
