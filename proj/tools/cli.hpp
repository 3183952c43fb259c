#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mtrel/engine.hpp"
#include "mtrel/network.hpp"

namespace mtrel::cli {

enum class OutputFormat { csv, json };

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kGuardExceeded = 3,
  kVerificationMismatch = 4,
};

struct RunConfig {
  std::filesystem::path input;
  std::optional<double> uniform_p;
  OutputFormat format = OutputFormat::csv;
  int decimals = 12;
  bool nonzero_only = false;
  std::optional<std::vector<NodeId>> subset;
  std::string state;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::size_t max_nodes = 20;
  std::size_t max_arcs = 26;
};

/// Fixed-point rendering with `decimals` digits, independent of locale.
/// Rounds the exact binary value to nearest, ties to even.
std::string format_fixed(double value, int decimals);

/// Parses "0,3,5". Throws std::invalid_argument on anything else.
std::vector<NodeId> parse_subset(const std::string& text);

using EngineFn = std::function<ReliabilityTable(const Network&, const EngineOptions&)>;

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err);
/// `engine` is injectable so the mismatch path can be exercised.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const EngineFn& engine = EngineFn(compute_all_multiterminal));
int cmd_mc(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches to a subcommand, and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtrel::cli
