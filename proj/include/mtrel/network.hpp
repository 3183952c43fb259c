#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtrel/state_vector.hpp"

namespace mtrel {

using NodeId = std::uint32_t;
using ArcId = std::size_t;

struct Arc {
  ArcId id = 0;
  NodeId u = 0;
  NodeId v = 0;
  double reliability = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Arc as supplied to the Network constructor; its id is its position.
struct ArcSpec {
  NodeId u = 0;
  NodeId v = 0;
  double reliability = 0.0;
};

/// Undirected binary-state network with perfect nodes. Immutable once built.
///
/// Arc order is significant: arc i is coordinate i of every StateVector.
class Network {
 public:
  /// Throws ValidationError on loops, parallel arcs, reliabilities outside
  /// [0,1] (including NaN), endpoints >= node_count, or node_count == 0.
  Network(std::size_t node_count, std::span<const ArcSpec> arcs);
  Network(std::size_t node_count, std::initializer_list<ArcSpec> arcs)
      : Network(node_count, std::span<const ArcSpec>(arcs.begin(), arcs.size())) {}

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_.at(id); }

  /// Number of arcs incident to `node` in the full graph.
  std::size_t degree(NodeId node) const;

  /// Arc joining the unordered pair {a, b}, or arc_count() if none.
  ArcId find_arc(NodeId a, NodeId b) const noexcept;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t node_count_;
  std::vector<Arc> arcs_;
};

/// Parses the line-oriented network format:
///
///     # comment
///     nodes <n>
///     arc <u> <v> <p>
///
/// `nodes` must be the first directive and appear once. Throws ParseError for
/// malformed lines and ValidationError (with the line number in the message)
/// for invariant violations.
Network parse_network(std::string_view text);

/// Reads and parses a file. Throws Error if it cannot be opened.
Network load_network(const std::filesystem::path& path);

/// Canonical rendering. Reliabilities use the shortest round-trip decimal
/// form, so parse_network(emit_network(n)) == n.
std::string emit_network(const Network& network);

/// Copy of `network` with every arc reliability set to `p`.
Network with_uniform_reliability(const Network& network, double p);

/// FNV-1a hash of the canonical rendering.
std::uint64_t fingerprint(const Network& network);

/// G(X): the network restricted to the arcs whose state coordinate is 1.
/// Holds a reference to the network, which must outlive it.
class Subgraph {
 public:
  Subgraph(const Network& network, std::vector<ArcId> active);

  const Network& network() const noexcept { return *network_; }
  std::size_t node_count() const noexcept { return network_->node_count(); }
  const std::vector<ArcId>& active_arcs() const noexcept { return active_; }

  /// Neighbours of `node` through active arcs, ascending.
  std::span<const NodeId> neighbors(NodeId node) const;
  bool adjacent(NodeId a, NodeId b) const;

 private:
  const Network* network_;
  std::vector<ArcId> active_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

/// Throws std::invalid_argument if state.size() != network.arc_count().
Subgraph realize_subgraph(const Network& network, const StateVector& state);

}  // namespace mtrel
