#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "mtrel/engine.hpp"
#include "mtrel/network.hpp"

namespace mtrel::oracle {

// Ground truth for the engine. Nothing here uses the binary-addition cursor
// or the layered search: states come from a plain counter and components
// from union-find.

inline constexpr std::size_t kMaxArcs = 22;
inline constexpr std::size_t kMaxNodes = 16;

/// Same table contract as compute_all_multiterminal. Throws GuardError above
/// kMaxArcs arcs or kMaxNodes nodes.
ReliabilityTable brute_force_table(const Network& network);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Samples per independently seeded block. Block b draws from a
/// std::mt19937_64 seeded through std::seed_seq with (seed, b), and an arc
/// works when the top 53 bits of a draw, read as a fraction in [0,1), fall
/// below its reliability. The estimate therefore depends only on
/// (network, subset, samples, seed), never on the worker count.
inline constexpr std::uint64_t kSamplesPerBlock = 1U << 14;

/// Fraction of sampled states in which every node of `subset` lies in one
/// component. Throws std::invalid_argument for fewer than two distinct nodes
/// or zero samples, std::out_of_range for unknown nodes.
McEstimate monte_carlo_estimate(const Network& network, std::span<const NodeId> subset,
                                std::uint64_t samples, std::uint64_t seed,
                                std::size_t workers = 1);

/// Two-terminal reliability between opposite corners of the 4-node, 5-arc
/// bridge network with every arc at reliability p: 2p^2 + 2p^3 - 5p^4 + 2p^5.
double bridge_two_terminal_closed_form(double p);

}  // namespace mtrel::oracle
