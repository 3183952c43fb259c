#include "mtrel/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtrel {

namespace {

// Expands `frontier` by one layer. `reached` marks every node already placed
// in a layer; newly reached nodes are marked and returned ascending.
std::vector<NodeId> next_layer(const Subgraph& subgraph, const std::vector<NodeId>& frontier,
                               std::vector<std::uint8_t>& reached) {
  std::vector<NodeId> layer;
  for (NodeId u : frontier) {
    for (NodeId v : subgraph.neighbors(u)) {
      if (!reached[v]) {
        reached[v] = 1;
        layer.push_back(v);
      }
    }
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

PlsaResult plsa_connected(const Subgraph& subgraph, NodeId s, NodeId t) {
  const std::size_t n = subgraph.node_count();
  if (s >= n || t >= n) throw std::out_of_range("node id out of range");

  PlsaResult result;
  std::vector<std::uint8_t> reached(n, 0);
  reached[s] = 1;
  result.trace.layers.push_back({s});
  if (s == t) {
    result.connected = true;
    return result;
  }
  while (true) {
    auto layer = next_layer(subgraph, result.trace.layers.back(), reached);
    const bool empty = layer.empty();
    result.trace.layers.push_back(std::move(layer));
    if (reached[t]) {
      result.connected = true;
      return result;
    }
    if (empty) return result;
  }
}

ConnectivityMatrix repeated_plsa(const Subgraph& subgraph) {
  const std::size_t n = subgraph.node_count();
  ConnectivityMatrix conn(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      conn.set(i, j,
               plsa_connected(subgraph, static_cast<NodeId>(i), static_cast<NodeId>(j)).connected);
    }
  }
  return conn;
}

ComponentPartition tlsa_components(const Subgraph& subgraph) {
  const std::size_t n = subgraph.node_count();
  ComponentPartition partition;
  std::vector<std::uint8_t> reached(n, 0);
  NodeId seed = 0;
  while (true) {
    while (seed < n && reached[seed]) ++seed;
    if (seed == n) break;

    reached[seed] = 1;
    LayerTrace trace;
    trace.layers.push_back({seed});
    std::vector<NodeId> component{seed};
    while (!trace.layers.back().empty()) {
      auto layer = next_layer(subgraph, trace.layers.back(), reached);
      component.insert(component.end(), layer.begin(), layer.end());
      trace.layers.push_back(std::move(layer));
    }
    std::sort(component.begin(), component.end());
    partition.components.push_back(std::move(component));
    partition.sweeps.push_back(std::move(trace));
  }
  return partition;
}

}  // namespace mtrel
