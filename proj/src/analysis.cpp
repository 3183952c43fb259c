#include "mtrel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mtrel {

namespace {

SubsetLabel checked_label(const ReliabilityTable& table, std::span<const NodeId> subset) {
  for (NodeId v : subset) {
    if (v >= table.node_count()) {
      throw std::out_of_range("node " + std::to_string(v) + " is not in the network");
    }
  }
  return SubsetLabel::from_nodes(subset);
}

}  // namespace

double subset_reliability(const ReliabilityTable& table, std::span<const NodeId> subset) {
  const SubsetLabel label = checked_label(table, subset);
  if (label.size() < 2) throw std::invalid_argument("a multi-terminal needs at least two nodes");
  return table[label];
}

std::vector<std::vector<double>> all_pair_view(const ReliabilityTable& table) {
  const std::size_t n = table.node_count();
  std::vector<std::vector<double>> view(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = table[SubsetLabel((std::uint64_t{1} << i) | (std::uint64_t{1} << j))];
      view[i][j] = r;
      view[j][i] = r;
    }
  }
  return view;
}

double size_stratified_average(const ReliabilityTable& table, std::size_t k) {
  if (k < 2 || k > table.node_count()) {
    throw std::invalid_argument("subset size must lie in [2, n]");
  }
  double sum = 0.0;
  std::size_t count = 0;
  const auto entries = table.entries();
  for (std::size_t label = 0; label < entries.size(); ++label) {
    if (static_cast<std::size_t>(std::popcount(label)) == k) {
      sum += entries[label];
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

std::vector<MonotonicityViolation> monotonicity_audit(const ReliabilityTable& table,
                                                      double tolerance) {
  std::vector<MonotonicityViolation> violations;
  const auto entries = table.entries();
  for (std::uint64_t super = 0; super < entries.size(); ++super) {
    if (std::popcount(super) < 3) continue;
    for (std::uint64_t sub = (super - 1) & super; sub != 0; sub = (sub - 1) & super) {
      if (std::popcount(sub) < 2) continue;
      if (entries[super] > entries[sub] + tolerance) {
        violations.push_back({SubsetLabel(sub), SubsetLabel(super), entries[sub], entries[super]});
      }
    }
  }
  return violations;
}

SymmetryReport symmetry_check(const Network& network, std::span<const NodeId> permutation,
                              const ReliabilityTable& table, double tolerance) {
  const std::size_t n = network.node_count();
  if (table.node_count() != n) throw std::invalid_argument("table does not match network");
  if (permutation.size() != n) throw std::invalid_argument("permutation must cover every node");
  std::vector<std::uint8_t> hit(n, 0);
  for (NodeId image : permutation) {
    if (image >= n || hit[image]) throw std::invalid_argument("permutation is not a bijection");
    hit[image] = 1;
  }

  for (const Arc& arc : network.arcs()) {
    const NodeId iu = permutation[arc.u];
    const NodeId iv = permutation[arc.v];
    const ArcId target = network.find_arc(iu, iv);
    const std::string where = "arc (" + std::to_string(arc.u) + "," + std::to_string(arc.v) +
                              ") maps to ";
    const std::string image = "(" + std::to_string(iu) + "," + std::to_string(iv) + ")";
    if (target == network.arc_count()) {
      throw NotAnAutomorphism(where + "nonexistent " + image, arc, iu, iv);
    }
    if (network.arc(target).reliability != arc.reliability) {
      throw NotAnAutomorphism(where + image + " with a different reliability", arc, iu, iv);
    }
  }

  SymmetryReport report;
  const auto entries = table.entries();
  for (std::uint64_t label = 0; label < entries.size(); ++label) {
    std::uint64_t image = 0;
    for (std::uint64_t rest = label; rest != 0; rest &= rest - 1) {
      image |= std::uint64_t{1} << permutation[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    const double diff = std::abs(entries[label] - entries[image]);
    report.max_difference = std::max(report.max_difference, diff);
    if (diff > tolerance) report.mismatches.push_back({SubsetLabel(label), SubsetLabel(image), diff});
    ++report.labels_checked;
  }
  return report;
}

double average_degree(const Network& network, std::span<const NodeId> subset) {
  if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
  double total = 0.0;
  for (NodeId v : subset) total += static_cast<double>(network.degree(v));
  return total / static_cast<double>(subset.size());
}

}  // namespace mtrel
