#include "mtrel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mtrel/error.hpp"

namespace mtrel::oracle {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ReliabilityTable brute_force_table(const Network& network) {
  const std::size_t n = network.node_count();
  const std::size_t m = network.arc_count();
  if (m > kMaxArcs || n > kMaxNodes) {
    throw GuardError("brute-force oracle is limited to " + std::to_string(kMaxNodes) +
                     " nodes and " + std::to_string(kMaxArcs) + " arcs");
  }
  ReliabilityTable table(n, fingerprint(network));
  auto entries = table.entries();
  DisjointSets sets(n);
  std::vector<std::uint64_t> masks(n);

  for (std::uint64_t state = 0; state < (std::uint64_t{1} << m); ++state) {
    double pr = 1.0;
    sets.reset();
    for (const Arc& arc : network.arcs()) {
      if ((state >> arc.id) & 1U) {
        pr *= arc.reliability;
        sets.unite(arc.u, arc.v);
      } else {
        pr *= 1.0 - arc.reliability;
      }
    }
    std::fill(masks.begin(), masks.end(), 0);
    for (std::size_t v = 0; v < n; ++v) masks[sets.find(v)] |= std::uint64_t{1} << v;
    for (std::uint64_t component : masks) {
      if (std::popcount(component) < 2) continue;
      for (std::uint64_t sub = component; sub != 0; sub = (sub - 1) & component) {
        if (std::popcount(sub) >= 2) entries[sub] += pr;
      }
    }
  }
  return table;
}

McEstimate monte_carlo_estimate(const Network& network, std::span<const NodeId> subset,
                                std::uint64_t samples, std::uint64_t seed, std::size_t workers) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  std::vector<NodeId> terminals(subset.begin(), subset.end());
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.size() < 2) throw std::invalid_argument("subset needs at least two nodes");
  if (terminals.back() >= network.node_count()) throw std::out_of_range("subset node out of range");

  const std::uint64_t blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<std::uint64_t> hits(blocks, 0);

  auto run_block = [&](std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    DisjointSets sets(network.node_count());
    const std::uint64_t first = block * kSamplesPerBlock;
    const std::uint64_t count = std::min(kSamplesPerBlock, samples - first);
    std::uint64_t local = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      sets.reset();
      for (const Arc& arc : network.arcs()) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < arc.reliability) sets.unite(arc.u, arc.v);
      }
      const std::size_t root = sets.find(terminals[0]);
      bool together = true;
      for (std::size_t i = 1; i < terminals.size() && together; ++i) {
        together = sets.find(terminals[i]) == root;
      }
      local += together ? 1 : 0;
    }
    hits[block] = local;
  };

  const std::size_t threads_wanted = std::clamp<std::uint64_t>(workers, 1, blocks);
  if (threads_wanted == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < threads_wanted; ++w) {
      threads.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += threads_wanted) run_block(b);
      });
    }
  }

  const std::uint64_t total = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  McEstimate estimate;
  estimate.samples = samples;
  estimate.seed = seed;
  estimate.mean = static_cast<double>(total) / static_cast<double>(samples);
  estimate.std_error =
      std::sqrt(estimate.mean * (1.0 - estimate.mean) / static_cast<double>(samples));
  return estimate;
}

double bridge_two_terminal_closed_form(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double p4 = p3 * p;
  const double p5 = p4 * p;
  return 2 * p2 + 2 * p3 - 5 * p4 + 2 * p5;
}

}  // namespace mtrel::oracle
