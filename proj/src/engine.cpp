#include "mtrel/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "mtrel/error.hpp"

namespace mtrel {

SubsetLabel SubsetLabel::from_nodes(std::span<const NodeId> nodes) {
  std::uint64_t value = 0;
  for (NodeId v : nodes) {
    if (v >= 64) throw std::out_of_range("node id too large for a subset label");
    value |= std::uint64_t{1} << v;
  }
  return SubsetLabel(value);
}

std::vector<NodeId> SubsetLabel::nodes() const {
  std::vector<NodeId> out;
  for (std::uint64_t rest = value_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<NodeId>(std::countr_zero(rest)));
  }
  return out;
}

ReliabilityTable::ReliabilityTable(std::size_t node_count, std::uint64_t network_fingerprint)
    : node_count_(node_count), fingerprint_(network_fingerprint) {
  if (node_count > kNodeCeiling) {
    throw GuardError("a table over " + std::to_string(node_count) + " nodes is too large");
  }
  entries_.assign(std::size_t{1} << node_count, 0.0);
}

ReliabilityTable& ReliabilityTable::operator+=(const ReliabilityTable& other) {
  if (other.node_count_ != node_count_) throw std::invalid_argument("table size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

std::vector<SubsetLabel> proper_subset_labels(std::span<const NodeId> component,
                                              std::size_t node_count) {
  if (component.empty()) throw std::invalid_argument("component must be nonempty");
  std::vector<NodeId> sorted(component.begin(), component.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= node_count || sorted.back() >= 64) {
    throw std::out_of_range("component node out of range");
  }
  std::vector<SubsetLabel> labels;
  for_each_proper_subset_label(sorted, [&](SubsetLabel label) { labels.push_back(label); });
  return labels;
}

StateCredit credit_state(const Network& network, const StateVector& state,
                         const ComponentPartition& partition) {
  StateCredit credit{state, state_probability(network, state), {}};
  for (const auto& component : partition.components) {
    if (component.size() < 2) continue;
    for_each_proper_subset_label(component, [&](SubsetLabel label) {
      credit.credited_labels.push_back(label);
    });
  }
  std::sort(credit.credited_labels.begin(), credit.credited_labels.end());
  return credit;
}

void check_engine_guards(const Network& network, const EngineOptions& options) {
  const std::size_t node_limit = std::min(options.max_nodes, kNodeCeiling);
  const std::size_t arc_limit = std::min(options.max_arcs, kArcCeiling);
  if (network.node_count() > node_limit) {
    throw GuardError("network has " + std::to_string(network.node_count()) +
                     " nodes; limit is " + std::to_string(node_limit));
  }
  if (network.arc_count() > arc_limit) {
    throw GuardError("network has " + std::to_string(network.arc_count()) +
                     " arcs; limit is " + std::to_string(arc_limit));
  }
}

void accumulate_states(const Network& network, Direction direction, std::uint64_t begin,
                       std::uint64_t end, ReliabilityTable& table, bool compensated) {
  const std::size_t n = network.node_count();
  const std::size_t m = network.arc_count();
  if (table.node_count() != n) throw std::invalid_argument("table does not match network");
  if (m == 0 || begin == end) return;

  std::vector<double> up(m), down(m);
  std::vector<NodeMask> arc_mask_u(m), arc_mask_v(m);
  for (const Arc& arc : network.arcs()) {
    up[arc.id] = arc.reliability;
    down[arc.id] = 1.0 - arc.reliability;
    arc_mask_u[arc.id] = NodeMask{1} << arc.u;
    arc_mask_v[arc.id] = NodeMask{1} << arc.v;
  }

  std::vector<NodeMask> adjacency(n, 0);
  auto toggle = [&](std::uint64_t changed) {
    for (; changed != 0; changed &= changed - 1) {
      const auto id = static_cast<std::size_t>(std::countr_zero(changed));
      const Arc& arc = network.arcs()[id];
      adjacency[arc.u] ^= arc_mask_v[id];
      adjacency[arc.v] ^= arc_mask_u[id];
    }
  };

  std::span<double> entries = table.entries();
  std::vector<double> carry(compensated ? entries.size() : 0, 0.0);
  auto add = [&](std::uint64_t label, double value) {
    if (!compensated) {
      entries[label] += value;
      return;
    }
    // Neumaier summation.
    const double sum = entries[label] + value;
    if (std::abs(entries[label]) >= std::abs(value)) {
      carry[label] += (entries[label] - sum) + value;
    } else {
      carry[label] += (value - sum) + entries[label];
    }
    entries[label] = sum;
  };

  std::vector<NodeMask> components(n);
  std::array<NodeId, 64> members{};

  BatCursor cursor(m, direction, begin, end);
  std::uint64_t previous = cursor.current().bits();
  toggle(previous);
  while (!cursor.exhausted()) {
    const std::uint64_t bits = cursor.current().bits();
    toggle(bits ^ previous);
    previous = bits;

    double pr = 1.0;
    for (std::size_t i = 0; i < m; ++i) pr *= ((bits >> i) & 1U) ? up[i] : down[i];

    const std::size_t count = tlsa_component_masks(adjacency, components);
    for (std::size_t c = 0; c < count; ++c) {
      if (std::popcount(components[c]) < 2) continue;
      std::size_t k = 0;
      for (NodeMask rest = components[c]; rest != 0; rest &= rest - 1) {
        members[k++] = static_cast<NodeId>(std::countr_zero(rest));
      }
      for_each_proper_subset_label(std::span<const NodeId>(members.data(), k),
                                   [&](SubsetLabel label) { add(label.value(), pr); });
    }
    cursor.advance();
  }

  if (compensated) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += carry[i];
  }
}

ReliabilityTable compute_all_multiterminal(const Network& network, const EngineOptions& options) {
  check_engine_guards(network, options);
  ReliabilityTable table(network.node_count(), fingerprint(network));
  const std::size_t m = network.arc_count();
  if (m == 0) return table;

  const std::uint64_t total = state_count(m);
  const std::size_t workers =
      static_cast<std::size_t>(std::clamp<std::uint64_t>(options.workers, 1, total));
  if (workers == 1) {
    accumulate_states(network, options.direction, 0, total, table, options.compensated);
    return table;
  }

  std::vector<ReliabilityTable> partials(workers, ReliabilityTable(network.node_count(), 0));
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
      threads.emplace_back([&, w, begin, end] {
        accumulate_states(network, options.direction, begin, end, partials[w],
                          options.compensated);
      });
    }
  }
  for (const auto& partial : partials) table += partial;
  return table;
}

}  // namespace mtrel
