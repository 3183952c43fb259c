#include "mtrel/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mtrel/error.hpp"

namespace mtrel {

namespace {

std::string arc_text(std::size_t index, NodeId u, NodeId v) {
  return "arc " + std::to_string(index) + " (" + std::to_string(u) + "," +
         std::to_string(v) + ")";
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') {
      ++end;
    }
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if constexpr (std::is_floating_point_v<T>) {
    auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    return ec == std::errc() && ptr == last;
  } else {
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  }
}

}  // namespace

Network::Network(std::size_t node_count, std::span<const ArcSpec> arcs)
    : node_count_(node_count) {
  if (node_count == 0) throw ValidationError("network must have at least one node");
  arcs_.reserve(arcs.size());
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const ArcSpec& spec = arcs[i];
    if (spec.u >= node_count || spec.v >= node_count) {
      throw ValidationError(arc_text(i, spec.u, spec.v) + ": node id must be < " +
                                std::to_string(node_count),
                            i);
    }
    if (spec.u == spec.v) {
      throw ValidationError(arc_text(i, spec.u, spec.v) + ": loop", i);
    }
    if (!(spec.reliability >= 0.0 && spec.reliability <= 1.0)) {
      throw ValidationError(arc_text(i, spec.u, spec.v) + ": reliability outside [0,1]", i);
    }
    auto key = std::minmax(spec.u, spec.v);
    if (!seen.insert({key.first, key.second}).second) {
      throw ValidationError(arc_text(i, spec.u, spec.v) + ": parallel arc", i);
    }
    arcs_.push_back(Arc{i, spec.u, spec.v, spec.reliability});
  }
}

std::size_t Network::degree(NodeId node) const {
  if (node >= node_count_) throw std::out_of_range("node id out of range");
  return static_cast<std::size_t>(std::count_if(
      arcs_.begin(), arcs_.end(), [node](const Arc& a) { return a.u == node || a.v == node; }));
}

ArcId Network::find_arc(NodeId a, NodeId b) const noexcept {
  for (const Arc& arc : arcs_) {
    if ((arc.u == a && arc.v == b) || (arc.u == b && arc.v == a)) return arc.id;
  }
  return arcs_.size();
}

Network parse_network(std::string_view text) {
  std::size_t node_count = 0;
  bool have_nodes = false;
  std::vector<ArcSpec> arcs;
  std::vector<std::size_t> arc_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "nodes") {
      if (have_nodes) throw ParseError(line_no, "duplicate 'nodes' directive");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'nodes <n>'");
      if (!parse_number(tokens[1], node_count)) {
        throw ParseError(line_no, "invalid node count '" + std::string(tokens[1]) + "'");
      }
      have_nodes = true;
    } else if (tokens[0] == "arc") {
      if (!have_nodes) throw ParseError(line_no, "'nodes' must precede the first arc");
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'arc <u> <v> <p>'");
      ArcSpec spec;
      if (!parse_number(tokens[1], spec.u) || !parse_number(tokens[2], spec.v)) {
        throw ParseError(line_no, "invalid node id");
      }
      if (!parse_number(tokens[3], spec.reliability)) {
        throw ParseError(line_no, "invalid reliability '" + std::string(tokens[3]) + "'");
      }
      arcs.push_back(spec);
      arc_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_nodes) throw ParseError(line_no, "missing 'nodes' directive");

  try {
    return Network(node_count, arcs);
  } catch (const ValidationError& e) {
    if (e.arc()) {
      throw ValidationError("line " + std::to_string(arc_lines[*e.arc()]) + ": " + e.what(),
                            e.arc());
    }
    throw;
  }
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

std::string emit_network(const Network& network) {
  std::string out = "nodes " + std::to_string(network.node_count()) + "\n";
  char buf[64];
  for (const Arc& arc : network.arcs()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, arc.reliability);
    out += "arc " + std::to_string(arc.u) + " " + std::to_string(arc.v) + " " +
           std::string(buf, ptr) + "\n";
  }
  return out;
}

Network with_uniform_reliability(const Network& network, double p) {
  std::vector<ArcSpec> arcs;
  arcs.reserve(network.arc_count());
  for (const Arc& arc : network.arcs()) arcs.push_back({arc.u, arc.v, p});
  return Network(network.node_count(), arcs);
}

std::uint64_t fingerprint(const Network& network) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_network(network)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

Subgraph::Subgraph(const Network& network, std::vector<ArcId> active)
    : network_(&network), active_(std::move(active)) {
  std::sort(active_.begin(), active_.end());
  active_.erase(std::unique(active_.begin(), active_.end()), active_.end());
  const std::size_t n = network.node_count();
  std::vector<std::vector<NodeId>> lists(n);
  for (ArcId id : active_) {
    if (id >= network.arc_count()) throw std::out_of_range("active arc id out of range");
    const Arc& arc = network.arc(id);
    lists[arc.u].push_back(arc.v);
    lists[arc.v].push_back(arc.u);
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(lists[v].begin(), lists[v].end());
    offsets_[v + 1] = offsets_[v] + lists[v].size();
    adjacency_.insert(adjacency_.end(), lists[v].begin(), lists[v].end());
  }
}

std::span<const NodeId> Subgraph::neighbors(NodeId node) const {
  if (node >= node_count()) throw std::out_of_range("node id out of range");
  return std::span<const NodeId>(adjacency_).subspan(offsets_[node],
                                                     offsets_[node + 1] - offsets_[node]);
}

bool Subgraph::adjacent(NodeId a, NodeId b) const {
  const auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Subgraph realize_subgraph(const Network& network, const StateVector& state) {
  if (state.size() != network.arc_count()) {
    throw std::invalid_argument("state length " + std::to_string(state.size()) +
                                " does not match arc count " +
                                std::to_string(network.arc_count()));
  }
  std::vector<ArcId> active;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i]) active.push_back(i);
  }
  return Subgraph(network, std::move(active));
}

}  // namespace mtrel
