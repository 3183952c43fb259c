#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mtrel/network.hpp"

namespace mtrel {

/// Layers of one layered search. layers[0] is the seed; each later layer
/// holds the not-yet-reached neighbours of the previous one, ascending. The
/// last layer is either the one containing the target or an empty layer.
struct LayerTrace {
  std::vector<std::vector<NodeId>> layers;

  friend bool operator==(const LayerTrace&, const LayerTrace&) = default;
};

struct PlsaResult {
  bool connected = false;
  LayerTrace trace;
};

/// Layered search from s, stopping as soon as a layer contains t or a layer
/// comes out empty. s == t is connected with the single layer {s}.
PlsaResult plsa_connected(const Subgraph& subgraph, NodeId s, NodeId t);

/// Symmetric n x n connectivity relation, reflexive by convention.
class ConnectivityMatrix {
 public:
  explicit ConnectivityMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) cells_[i * n + i] = 1;
  }

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j) != 0; }
  void set(std::size_t i, std::size_t j, bool value) {
    cells_.at(i * n_ + j) = value;
    cells_.at(j * n_ + i) = value;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

/// One layered search per unordered pair. Quadratic in pairs; kept as a
/// reference for differential tests.
ConnectivityMatrix repeated_plsa(const Subgraph& subgraph);

/// Connected-component partition plus the layer trace of each sweep.
/// components[k] is the node set reached by sweep k, ascending; sweep k is
/// seeded with the smallest node not covered by sweeps 0..k-1.
struct ComponentPartition {
  std::vector<std::vector<NodeId>> components;
  std::vector<LayerTrace> sweeps;
};

/// Repeated layered sweeps, each seeded at the smallest unvisited node and
/// removing its component from the unvisited set. Every node is placed in
/// exactly one layer of one sweep.
ComponentPartition tlsa_components(const Subgraph& subgraph);

using NodeMask = std::uint64_t;

/// Bitmask form of tlsa_components for networks with at most 64 nodes.
/// adjacency[v] holds the active neighbours of v. Writes one mask per
/// component into `out` (which must have room for adjacency.size() masks) in
/// sweep order and returns the component count.
inline std::size_t tlsa_component_masks(std::span<const NodeMask> adjacency,
                                        std::span<NodeMask> out) noexcept {
  const std::size_t n = adjacency.size();
  NodeMask unvisited = n == 64 ? ~NodeMask{0} : (NodeMask{1} << n) - 1;
  std::size_t count = 0;
  while (unvisited != 0) {
    const NodeMask seed = unvisited & (~unvisited + 1);
    NodeMask component = seed;
    NodeMask layer = seed;
    while (layer != 0) {
      NodeMask next = 0;
      for (NodeMask rest = layer; rest != 0; rest &= rest - 1) {
        next |= adjacency[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      layer = next & ~component;
      component |= layer;
    }
    out[count++] = component;
    unvisited &= ~component;
  }
  return count;
}

}  // namespace mtrel
