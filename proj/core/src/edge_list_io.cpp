#include "fuzzanon/edge_list_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace fuzzanon {

std::string LoadSummary::to_json() const {
  nlohmann::ordered_json j;
  j["nodes"] = node_count;
  j["edges"] = edge_count;
  j["lines_read"] = lines_read;
  j["comment_lines"] = comment_lines;
  j["duplicate_edges"] = duplicate_edges;
  j["self_loops"] = self_loops;
  return j.dump();
}

namespace {

// Packs a canonical (u, v) pair for the dedup set. Node ids stay well below
// 2^32 for any input we can hold in memory.
std::uint64_t pack(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

Graph load_edge_list(std::istream& in, LoadSummary& summary, const LoadOptions& options) {
  summary = LoadSummary{};

  std::unordered_map<std::string, NodeId> label_to_id;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = label_to_id.emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++summary.lines_read;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      ++summary.comment_lines;
      continue;
    }
    if (line[first] == '#' || line[first] == '%') {
      ++summary.comment_lines;
      continue;
    }
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw DataError("malformed edge list line " + std::to_string(line_no) +
                      ": expected two tokens, got '" + line + "'");
    }
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    if (u == v) {
      ++summary.self_loops;
      continue;
    }
    const Edge e(u, v);
    if (!seen.insert(pack(e.u, e.v)).second) {
      ++summary.duplicate_edges;
      continue;
    }
    edges.push_back(e);
  }

  if (labels.empty()) throw DataError("empty edge list: no data lines found");

  Graph g = Graph::from_edges(static_cast<NodeId>(labels.size()), edges);
  if (options.keep_labels) g.set_labels(std::move(labels));
  summary.node_count = g.node_count();
  summary.edge_count = g.edge_count();
  return g;
}

Graph load_edge_list_file(const std::string& path, LoadSummary& summary,
                          const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list file: " + path);
  return load_edge_list(in, summary, options);
}

void save_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open output file: " + path);
  save_edge_list(g, out);
  if (!out.flush()) throw DataError("failed writing edge list: " + path);
}

}  // namespace fuzzanon
