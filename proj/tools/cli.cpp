#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

#include "mtrel/analysis.hpp"
#include "mtrel/bat.hpp"
#include "mtrel/connectivity.hpp"
#include "mtrel/error.hpp"
#include "mtrel/oracle.hpp"

namespace mtrel::cli {

namespace {

constexpr double kVerifyTolerance = 1e-12;

Network load(const RunConfig& config) {
  Network network = load_network(config.input);
  if (config.uniform_p) network = with_uniform_reliability(network, *config.uniform_p);
  return network;
}

EngineOptions engine_options(const RunConfig& config) {
  EngineOptions options;
  options.max_nodes = config.max_nodes;
  options.max_arcs = config.max_arcs;
  options.workers = config.workers;
  return options;
}

void check_config(const RunConfig& config) {
  if (config.decimals < 1 || config.decimals > 17) {
    throw std::invalid_argument("--decimals must lie in [1, 17]");
  }
  if (config.max_nodes == 0 || config.max_arcs == 0) {
    throw std::invalid_argument("guards must be positive");
  }
}

std::string join_nodes(const std::vector<NodeId>& nodes, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(nodes[i]);
  }
  return out;
}

std::string braced(const std::vector<NodeId>& nodes) { return "{" + join_nodes(nodes, ", ") + "}"; }

// Runs `body`, mapping library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

double parse_double(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad number '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) throw std::invalid_argument("value cannot be formatted");
  return std::string(buf, ptr);
}

std::vector<NodeId> parse_subset(const std::string& text) {
  std::vector<NodeId> nodes;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        std::string_view(text).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    NodeId node = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), node);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad subset '" + text + "'; expected e.g. 0,3");
    }
    nodes.push_back(node);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return nodes;
}

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config);
    const Network network = load(config);
    if (config.subset) {
      // Validate before the exponential part.
      SubsetLabel::from_nodes(*config.subset);
      for (NodeId v : *config.subset) {
        if (v >= network.node_count()) throw std::out_of_range("subset node out of range");
      }
    }
    const ReliabilityTable table = compute_all_multiterminal(network, engine_options(config));

    if (config.subset) {
      out << format_fixed(subset_reliability(table, *config.subset), config.decimals) << "\n";
      return int{kSuccess};
    }

    nlohmann::json rows = nlohmann::json::array();
    if (config.format == OutputFormat::csv) out << "label,nodes,size,reliability\n";
    for (std::uint64_t raw = 0; raw < table.size(); ++raw) {
      const SubsetLabel label(raw);
      if (config.nonzero_only && label.size() < 2) continue;
      const std::string value = format_fixed(table[label], config.decimals);
      const auto nodes = label.nodes();
      if (config.format == OutputFormat::csv) {
        out << raw << ",\"" << join_nodes(nodes, " ") << "\"," << label.size() << "," << value
            << "\n";
      } else {
        rows.push_back({{"label", raw},
                        {"nodes", nodes},
                        {"size", label.size()},
                        {"reliability", parse_double(value)}});
      }
    }
    if (config.format == OutputFormat::json) {
      char hex[17];
      auto [ptr, ec] = std::to_chars(hex, hex + sizeof hex, table.network_fingerprint(), 16);
      nlohmann::json doc = {{"nodes", network.node_count()},
                            {"arcs", network.arc_count()},
                            {"fingerprint", std::string(hex, ptr)},
                            {"decimals", config.decimals},
                            {"rows", std::move(rows)}};
      out << doc.dump(2) << "\n";
    }
    return int{kSuccess};
  });
}

int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config);
    const Network network = load(config);
    const StateVector state = StateVector::from_string(config.state);
    if (state.size() != network.arc_count()) {
      throw std::invalid_argument("state has " + std::to_string(state.size()) +
                                  " coordinates; the network has " +
                                  std::to_string(network.arc_count()) + " arcs");
    }
    const Subgraph subgraph = realize_subgraph(network, state);
    const ComponentPartition partition = tlsa_components(subgraph);
    const StateCredit credit = credit_state(network, state, partition);

    out << "state " << state.to_string() << "\n";
    out << "weight " << weight_forward(state) << "\n";
    out << "probability " << format_fixed(credit.probability, config.decimals) << "\n";
    out << "components " << partition.components.size() << "\n";
    for (std::size_t k = 0; k < partition.components.size(); ++k) {
      out << "component " << k << " " << braced(partition.components[k]) << "\n";
      const auto& layers = partition.sweeps[k].layers;
      for (std::size_t h = 0; h < layers.size(); ++h) {
        out << "  layer " << h << " " << braced(layers[h]) << "\n";
      }
    }
    out << "credited " << credit.credited_labels.size();
    for (SubsetLabel label : credit.credited_labels) out << " " << label.value();
    out << "\n";
    return int{kSuccess};
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const EngineFn& engine) {
  return guarded(err, [&] {
    check_config(config);
    const Network network = load(config);
    const EngineOptions options = engine_options(config);
    check_engine_guards(network, options);
    const ReliabilityTable expected = oracle::brute_force_table(network);
    const ReliabilityTable actual = engine(network, options);
    if (actual.size() != expected.size()) {
      out << "result mismatch\n";
      err << "error: engine table has " << actual.size() << " entries, oracle has "
          << expected.size() << "\n";
      return int{kVerificationMismatch};
    }

    double max_diff = 0.0;
    std::uint64_t worst = 0;
    for (std::uint64_t i = 0; i < expected.size(); ++i) {
      const double diff = std::abs(expected.entries()[i] - actual.entries()[i]);
      // NaN must count as a mismatch.
      if (!(diff <= max_diff)) {
        max_diff = std::isnan(diff) ? INFINITY : diff;
        worst = i;
      }
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, max_diff, std::chars_format::scientific, 3);
    const bool ok = max_diff <= kVerifyTolerance;
    out << "entries " << expected.size() << "\n";
    out << "max_abs_difference " << std::string(buf, ptr) << "\n";
    out << "worst_label " << worst << "\n";
    out << "result " << (ok ? "match" : "mismatch") << "\n";
    return int{ok ? kSuccess : kVerificationMismatch};
  });
}

int cmd_mc(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config);
    if (!config.subset) throw std::invalid_argument("--subset is required");
    if (config.samples == 0) throw std::invalid_argument("--samples must be positive");
    const Network network = load(config);
    const oracle::McEstimate estimate = oracle::monte_carlo_estimate(
        network, *config.subset, config.samples, config.seed, config.workers);
    out << "subset " << join_nodes(*config.subset, ",") << "\n";
    out << "mean " << format_fixed(estimate.mean, config.decimals) << "\n";
    out << "std_error " << format_fixed(estimate.std_error, config.decimals) << "\n";
    out << "samples " << estimate.samples << "\n";
    out << "seed " << estimate.seed << "\n";
    return int{kSuccess};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact all-multiterminal reliability of binary-state networks", "mtrel"};
  app.require_subcommand(1);

  RunConfig config;
  std::string subset_text;
  std::string format_text = "csv";

  auto add_network = [&](CLI::App* cmd) {
    cmd->add_option("--input", config.input, "Network file")->required();
    cmd->add_option("--uniform-p", config.uniform_p, "Override every arc reliability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--decimals", config.decimals, "Digits after the decimal point")
        ->check(CLI::Range(1, 17));
  };
  auto add_engine = [&](CLI::App* cmd) {
    cmd->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--max-nodes", config.max_nodes, "Node guard")->check(CLI::PositiveNumber);
    cmd->add_option("--max-arcs", config.max_arcs, "Arc guard")->check(CLI::PositiveNumber);
  };

  auto* compute = app.add_subcommand("compute", "Print the reliability of every node subset");
  add_network(compute);
  add_engine(compute);
  compute->add_option("--format", format_text, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_flag("--nonzero-only", config.nonzero_only, "Skip subsets of fewer than 2 nodes");
  compute->add_option("--subset", subset_text, "Print only this subset, e.g. 0,3");

  auto* trace = app.add_subcommand("trace", "Show components and credits for one arc state");
  add_network(trace);
  trace->add_option("--state", config.state, "Bitstring, arc 0 leftmost")->required();

  auto* verify = app.add_subcommand("verify", "Compare the engine against the brute-force oracle");
  add_network(verify);
  add_engine(verify);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate for one subset");
  add_network(mc);
  mc->add_option("--subset", subset_text, "Terminal nodes, e.g. 0,1,2,3")->required();
  mc->add_option("--samples", config.samples, "Sample count");
  mc->add_option("--seed", config.seed, "Generator seed");
  mc->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kSuccess} : int{kInputError};
  }

  config.format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!subset_text.empty()) {
    try {
      config.subset = parse_subset(subset_text);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }

  if (compute->parsed()) return cmd_compute(config, out, err);
  if (trace->parsed()) return cmd_trace(config, out, err);
  if (verify->parsed()) return cmd_verify(config, out, err);
  return cmd_mc(config, out, err);
}

}  // namespace mtrel::cli
