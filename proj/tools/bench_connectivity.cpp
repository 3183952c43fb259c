// Compares per-state cost of pairwise layered search against component
// sweeps (list and bitmask forms) on random subgraphs.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mtrel/connectivity.hpp"

namespace {

mtrel::Network random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<mtrel::NodeId, mtrel::NodeId>> pairs;
  for (mtrel::NodeId u = 0; u < n; ++u) {
    for (mtrel::NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<mtrel::ArcSpec> arcs;
  for (std::size_t i = 0; i < std::min(m, pairs.size()); ++i) {
    arcs.push_back({pairs[i].first, pairs[i].second, 0.5});
  }
  return mtrel::Network(n, arcs);
}

mtrel::Subgraph half_active(const mtrel::Network& net) {
  std::vector<mtrel::ArcId> active;
  for (mtrel::ArcId i = 0; i < net.arc_count(); i += 2) active.push_back(i);
  return mtrel::Subgraph(net, active);
}

void BM_RepeatedPlsa(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto net = random_graph(n, 2 * n, 1);
  const auto g = half_active(net);
  for (auto _ : state) benchmark::DoNotOptimize(mtrel::repeated_plsa(g));
}

void BM_TlsaComponents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto net = random_graph(n, 2 * n, 1);
  const auto g = half_active(net);
  for (auto _ : state) benchmark::DoNotOptimize(mtrel::tlsa_components(g));
}

void BM_TlsaMasks(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto net = random_graph(n, 2 * n, 1);
  const auto g = half_active(net);
  std::vector<mtrel::NodeMask> adjacency(n, 0), out(n);
  for (mtrel::NodeId v = 0; v < n; ++v) {
    for (mtrel::NodeId w : g.neighbors(v)) adjacency[v] |= mtrel::NodeMask{1} << w;
  }
  for (auto _ : state) benchmark::DoNotOptimize(mtrel::tlsa_component_masks(adjacency, out));
}

BENCHMARK(BM_RepeatedPlsa)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_TlsaComponents)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_TlsaMasks)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
