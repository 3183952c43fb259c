// Acceptance suite. Each criterion prints one PASS/FAIL line; the exit code
// is nonzero if any selected criterion fails.
//
//   acceptance                 run every criterion
//   acceptance --criterion 7   run one

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "mtrel/analysis.hpp"
#include "mtrel/bat.hpp"
#include "mtrel/connectivity.hpp"
#include "mtrel/engine.hpp"
#include "mtrel/oracle.hpp"
#include "../test_support.hpp"

namespace {

using namespace mtrel;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double v, int precision = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

double max_diff(const ReliabilityTable& a, const ReliabilityTable& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

Verdict table8_entries() {
  Verdict v;
  const auto start = Clock::now();
  const Network net = with_uniform_reliability(load_network(testing::fixture("bridge.net")), 0.9);
  const auto table = compute_all_multiterminal(net);
  const double elapsed = seconds_since(start);
  const std::pair<std::uint64_t, double> expected[] = {{7, 0.98658},  {9, 0.97848},  {11, 0.97767},
                                                       {13, 0.97767}, {14, 0.98658}, {15, 0.97686}};
  for (auto [label, value] : expected) {
    const double got = table[SubsetLabel(label)];
    v.require(std::abs(got - value) <= 1e-9, "R_" + std::to_string(label) + " = " + num(got));
  }
  v.require(elapsed < 1.0, "runtime " + num(elapsed) + " s");
  if (v.pass) v.detail = "6 entries within 1e-9, " + num(elapsed, 3) + " s";
  return v;
}

Verdict errata_entries() {
  Verdict v;
  const Network net = testing::bridge(0.9);
  const auto engine = compute_all_multiterminal(net);
  const auto oracle_table = oracle::brute_force_table(net);
  const double single_arc = state_probability(net, StateVector::from_string("10000"));
  v.require(std::abs(single_arc - 0.00009) <= 1e-15, "single-arc Pr = " + num(single_arc));
  const std::tuple<std::uint64_t, double, double> expected[] = {
      {3, 0.98829, 0.98820}, {5, 0.98829, 0.98820}, {10, 0.98829, 0.98820},
      {12, 0.98829, 0.98820}, {6, 0.99639, 0.99630}};
  for (auto [label, exact, printed] : expected) {
    const double got = engine[SubsetLabel(label)];
    const double ref = oracle_table[SubsetLabel(label)];
    const std::string name = "R_" + std::to_string(label);
    v.require(std::abs(got - exact) <= 1e-9, name + " = " + num(got));
    v.require(std::abs((got - printed) - 0.00009) <= 1e-9, name + " gap " + num(got - printed));
    v.require(std::abs(ref - got) <= 1e-12, name + " oracle disagrees with engine");
    v.require(std::abs(ref - printed) > 1e-9, name + " oracle agrees with printed value");
  }
  if (v.pass) v.detail = "5 pair entries exceed printed values by Pr(single-arc state) = 0.00009";
  return v;
}

Verdict normalization() {
  Verdict v;
  auto total = [](const Network& net) {
    double sum = 0.0;
    for (auto c = enumerate_forward(net.arc_count()); !c.exhausted(); c.advance()) {
      sum += state_probability(net, c.current());
    }
    return sum;
  };
  const double bridge_sum = total(testing::bridge(0.9));
  v.require(std::abs(bridge_sum - 1.0) <= 1e-12, "bridge sum " + num(bridge_sum, 17));
  std::mt19937_64 rng(3001);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 16;
    const Network net = testing::random_network(rng, 6 + rng() % 3, m);
    worst = std::max(worst, std::abs(total(net) - 1.0));
  }
  v.require(worst <= 1e-12, "random worst deviation " + num(worst));
  if (v.pass) v.detail = "bridge |sum-1| = " + num(std::abs(bridge_sum - 1)) + ", 100 random worst " + num(worst);
  return v;
}

Verdict enumeration_order() {
  Verdict v;
  std::uint64_t k = 0;
  for (auto c = enumerate_forward(5); !c.exhausted(); c.advance(), ++k) {
    v.require(weight_forward(c.current()) == k, "weight mismatch at " + std::to_string(k));
    if (k == 7) v.require(c.current().to_string() == "11100", "X_7 = " + c.current().to_string());
    if (k == 31) v.require(c.current().to_string() == "11111", "X_31 = " + c.current().to_string());
  }
  v.require(k == 32, "emitted " + std::to_string(k));
  auto back = enumerate_backward(5);
  while (back.index() < 7) back.advance();
  v.require(back.current().to_string() == "00111", "backward 7 = " + back.current().to_string());
  if (v.pass) v.detail = "32 vectors, W_f(X_k) = k, X_7 = 11100, X_31 = 11111, backward 7 = 00111";
  return v;
}

Verdict closed_form() {
  Verdict v;
  const std::vector<NodeId> terminals{0, 3};
  double worst = 0.0;
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double engine = subset_reliability(compute_all_multiterminal(testing::bridge(p)), terminals);
    const double formula = oracle::bridge_two_terminal_closed_form(p);
    worst = std::max(worst, std::abs(engine - formula));
    if (p == 0.9) {
      v.require(std::abs(engine - 0.97848) <= 1e-12 && std::abs(formula - 0.97848) <= 1e-12,
                "p=0.9 engine " + num(engine) + " formula " + num(formula));
    }
  }
  v.require(worst <= 1e-12, "max difference " + num(worst));
  if (v.pass) v.detail = "max |engine - polynomial| = " + num(worst);
  return v;
}

Verdict partition_differential() {
  Verdict v;
  std::mt19937_64 rng(6006);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Network net = testing::random_network(rng, 1 + rng() % 12, rng() % 21);
    const std::size_t m = net.arc_count();
    const std::uint64_t state = m ? rng() & ((std::uint64_t{1} << m) - 1) : 0;
    const auto partition = tlsa_components(realize_subgraph(net, StateVector(m, state)));
    std::set<std::set<NodeId>> got;
    for (const auto& c : partition.components) got.emplace(c.begin(), c.end());
    if (got != testing::dsu_partition(net, state)) ++mismatches;
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " of 1000 partitions differ");

  const Network fig = load_network(testing::fixture("layered8.net"));
  const auto partition =
      tlsa_components(realize_subgraph(fig, StateVector(fig.arc_count(), (1U << fig.arc_count()) - 1)));
  using Layers = std::vector<std::vector<NodeId>>;
  v.require(partition.components == Layers{{0, 1, 2, 4}, {3, 5, 6, 7}}, "fixture components");
  v.require(partition.sweeps.size() == 2 &&
                partition.sweeps[0].layers == Layers{{0}, {1, 2}, {4}, {}} &&
                partition.sweeps[1].layers == Layers{{3}, {6}, {5}, {7}, {}},
            "fixture layer traces");
  if (v.pass) v.detail = "1000/1000 partitions equal; traces {0},{1,2},{4},{} and {3},{6},{5},{7},{}";
  return v;
}

Verdict oracle_sweep() {
  Verdict v;
  std::mt19937_64 rng(7007);
  const auto start = Clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = testing::random_network(rng, 1 + rng() % 8, rng() % 15);
    worst = std::max(worst, max_diff(compute_all_multiterminal(net), oracle::brute_force_table(net)));
  }
  const double elapsed = seconds_since(start);
  v.require(worst <= 1e-12, "max entry difference " + num(worst));
  v.require(elapsed < 300.0, "sweep took " + num(elapsed) + " s");
  if (v.pass) v.detail = "200 networks, max diff " + num(worst) + ", " + num(elapsed, 3) + " s";
  return v;
}

Verdict properties() {
  Verdict v;
  std::vector<Network> fixtures{testing::bridge(0.9), load_network(testing::fixture("bridge.net")),
                                load_network(testing::fixture("layered8.net")),
                                load_network(testing::fixture("layered5.net")),
                                load_network(testing::fixture("isolated.net"))};
  std::size_t audited = 0;
  for (const auto& net : fixtures) {
    const auto violations = monotonicity_audit(compute_all_multiterminal(net));
    v.require(violations.empty(), "fixture monotonicity violations: " + std::to_string(violations.size()));
    ++audited;
  }
  std::mt19937_64 rng(8008);
  for (int trial = 0; trial < 100; ++trial) {
    const Network net = testing::random_network(rng, 2 + rng() % 8, rng() % 15);
    const auto violations = monotonicity_audit(compute_all_multiterminal(net));
    v.require(violations.empty(), "random monotonicity violation");
    ++audited;
  }

  const Network bridge = testing::bridge(0.9);
  const auto table = compute_all_multiterminal(bridge);
  for (const std::vector<NodeId>& perm : {std::vector<NodeId>{0, 2, 1, 3}, std::vector<NodeId>{3, 1, 2, 0}}) {
    const auto report = symmetry_check(bridge, perm, table);
    v.require(report.passed() && report.max_difference <= 1e-12,
              "symmetry max difference " + num(report.max_difference));
  }
  v.require(std::abs(table[SubsetLabel(7)] - table[SubsetLabel(14)]) <= 1e-12, "R{0,1,2} != R{1,2,3}");
  v.require(std::abs(table[SubsetLabel(11)] - table[SubsetLabel(13)]) <= 1e-12, "R{0,1,3} != R{0,2,3}");
  if (v.pass) {
    v.detail = std::to_string(audited) + " tables monotone; (1 2) and (0 3) symmetric within 1e-12";
  }
  return v;
}

Verdict stratified_averages() {
  Verdict v;
  const auto table = compute_all_multiterminal(testing::bridge(0.9));
  const std::pair<std::size_t, double> expected[] = {{2, 0.988005}, {3, 0.982125}, {4, 0.976860}};
  for (auto [k, value] : expected) {
    const double got = size_stratified_average(table, k);
    v.require(std::abs(got - value) <= 1e-9, "k=" + std::to_string(k) + " average " + num(got));
  }
  if (v.pass) v.detail = "k=2 0.988005, k=3 0.982125, k=4 0.976860 within 1e-9";
  return v;
}

Verdict monte_carlo() {
  Verdict v;
  const std::vector<NodeId> all{0, 1, 2, 3};
  const auto est = oracle::monte_carlo_estimate(testing::bridge(0.9), all, 1'000'000, 42);
  const double gap = std::abs(est.mean - 0.97686);
  v.require(gap <= 3 * est.std_error, "mean " + num(est.mean) + " is " + num(gap / est.std_error, 3) + " sigma away");

  cli::RunConfig config;
  config.input = testing::fixture("bridge.net");
  config.uniform_p = 0.9;
  config.subset = all;
  config.samples = 1'000'000;
  config.seed = 42;
  std::ostringstream first, second, err;
  v.require(cli::cmd_mc(config, first, err) == 0 && cli::cmd_mc(config, second, err) == 0, "mc command failed");
  v.require(first.str() == second.str(), "repeated seed produced different bytes");
  if (v.pass) {
    v.detail = "mean " + num(est.mean, 7) + ", " + num(gap / est.std_error, 3) + " sigma; repeat byte-identical";
  }
  return v;
}

Verdict scale_and_speedup() {
  Verdict v;
  std::mt19937_64 rng(1111);
  Network net = testing::random_network(rng, 10, 20);
  while (testing::dsu_partition(net, (std::uint64_t{1} << 20) - 1).size() != 1) {
    net = testing::random_network(rng, 10, 20);
  }

  auto start = Clock::now();
  const auto single = compute_all_multiterminal(net);
  const double t1 = seconds_since(start);

  EngineOptions four;
  four.workers = 4;
  start = Clock::now();
  const auto merged = compute_all_multiterminal(net, four);
  const double t4 = seconds_since(start);

  const double speedup = t1 / t4;
  const double diff = max_diff(single, merged);
  const unsigned cores = std::thread::hardware_concurrency();
  v.require(t1 <= 60.0, "single worker took " + num(t1) + " s");
  v.require(diff <= 1e-9, "merged table differs by " + num(diff));
  v.require(speedup >= 2.5, "speedup " + num(speedup, 3) + "x with 4 workers (" + std::to_string(cores) +
                                " hardware thread(s) available)");
  const std::string timing = "1 worker " + num(t1, 3) + " s, 4 workers " + num(t4, 3) + " s, speedup " +
                             num(speedup, 3) + "x, merge diff " + num(diff);
  v.detail = v.pass ? timing : v.detail + " [" + timing + "]";
  return v;
}

struct Criterion {
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"Table 8 exact entries", table8_entries},
      {"pair-entry errata reproduced", errata_entries},
      {"probability normalization", normalization},
      {"enumeration order", enumeration_order},
      {"bridge closed form", closed_form},
      {"partition differential", partition_differential},
      {"oracle equivalence sweep", oracle_sweep},
      {"monotonicity and symmetry", properties},
      {"size-stratified averages", stratified_averages},
      {"Monte Carlo sanity", monte_carlo},
      {"scale and parallel speedup", scale_and_speedup},
  };

  std::size_t only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::strtoul(argv[2], nullptr, 10);
  if (only > criteria.size() || (argc != 1 && only == 0)) {
    std::fprintf(stderr, "usage: acceptance [--criterion 1..%zu]\n", criteria.size());
    return 2;
  }

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    Verdict verdict;
    try {
      verdict = criteria[i].run();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] AC%zu %s: %s\n", verdict.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                verdict.detail.c_str());
    failures += verdict.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
