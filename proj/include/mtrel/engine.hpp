#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mtrel/bat.hpp"
#include "mtrel/connectivity.hpp"
#include "mtrel/network.hpp"

namespace mtrel {

/// Node subset encoded as the sum of 2^v over its nodes.
class SubsetLabel {
 public:
  constexpr SubsetLabel() = default;
  constexpr explicit SubsetLabel(std::uint64_t value) : value_(value) {}

  /// Throws std::out_of_range for node ids >= 64. Duplicates collapse.
  static SubsetLabel from_nodes(std::span<const NodeId> nodes);

  constexpr std::uint64_t value() const noexcept { return value_; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(value_));
  }
  constexpr bool contains(NodeId v) const noexcept { return v < 64 && ((value_ >> v) & 1U); }
  constexpr bool is_subset_of(SubsetLabel other) const noexcept {
    return (value_ & ~other.value_) == 0;
  }
  std::vector<NodeId> nodes() const;

  friend constexpr auto operator<=>(SubsetLabel, SubsetLabel) = default;

 private:
  std::uint64_t value_ = 0;
};

/// R(subset) for every subset label 0 .. 2^n - 1. Labels of fewer than two
/// nodes stay at zero.
class ReliabilityTable {
 public:
  ReliabilityTable(std::size_t node_count, std::uint64_t network_fingerprint);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t network_fingerprint() const noexcept { return fingerprint_; }

  double operator[](SubsetLabel label) const { return entries_.at(label.value()); }
  std::span<const double> entries() const noexcept { return entries_; }
  std::span<double> entries() noexcept { return entries_; }

  /// Elementwise sum; tables must have the same node count.
  ReliabilityTable& operator+=(const ReliabilityTable& other);

 private:
  std::size_t node_count_;
  std::uint64_t fingerprint_;
  std::vector<double> entries_;
};

/// Calls fn(label) for every subset of `component` with at least two nodes.
/// Subsets are produced by a node-based binary-addition walk over the
/// component's coordinates (component[k] is coordinate k); the label is kept
/// in step with each carry instead of being recomputed per vector.
template <typename Fn>
void for_each_proper_subset_label(std::span<const NodeId> component, Fn&& fn) {
  const std::size_t k = component.size();
  if (k < 2) return;
  std::uint64_t coordinates = 0;
  std::uint64_t label = 0;
  std::size_t ones = 0;
  while (true) {
    std::size_t i = 0;
    while (i < k && ((coordinates >> i) & 1U)) {
      coordinates &= ~(std::uint64_t{1} << i);
      label &= ~(std::uint64_t{1} << component[i]);
      --ones;
      ++i;
    }
    if (i == k) return;
    coordinates |= std::uint64_t{1} << i;
    label |= std::uint64_t{1} << component[i];
    ++ones;
    if (ones >= 2) fn(SubsetLabel(label));
  }
}

/// Labels of every >= 2-node subset of `component`, in node-based
/// enumeration order over the ascending node list. Yields 2^k - k - 1 labels.
std::vector<SubsetLabel> proper_subset_labels(std::span<const NodeId> component,
                                              std::size_t node_count);

/// One state's contribution: its probability and the labels it credits.
struct StateCredit {
  StateVector state;
  double probability = 0.0;
  std::vector<SubsetLabel> credited_labels;
};

/// `partition` must be tlsa_components of the state's subgraph.
StateCredit credit_state(const Network& network, const StateVector& state,
                         const ComponentPartition& partition);

struct EngineOptions {
  std::size_t max_nodes = 20;
  std::size_t max_arcs = 26;
  std::size_t workers = 1;
  Direction direction = Direction::forward;
  /// Neumaier-compensated accumulation per table entry.
  bool compensated = false;
};

/// Hard ceilings regardless of EngineOptions.
inline constexpr std::size_t kNodeCeiling = 30;
inline constexpr std::size_t kArcCeiling = 62;

/// Throws GuardError if the network exceeds the options' limits.
void check_engine_guards(const Network& network, const EngineOptions& options);

/// Sums Pr(X) into every label whose nodes share a component of G(X), over
/// all 2^m states. With workers > 1 the state range is split into contiguous
/// shards, each accumulated into a private table and merged in shard order,
/// so a given worker count always yields the same bits.
ReliabilityTable compute_all_multiterminal(const Network& network,
                                           const EngineOptions& options = {});

/// Accumulates the emission range [begin, end) of the chosen direction into
/// `table`. Building block for compute_all_multiterminal.
void accumulate_states(const Network& network, Direction direction, std::uint64_t begin,
                       std::uint64_t end, ReliabilityTable& table, bool compensated = false);

}  // namespace mtrel
