#include "fuzzanon/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzanon {

Graph::Graph(NodeId node_count) : adj_(static_cast<std::size_t>(node_count)) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
}

Graph Graph::from_edges(NodeId node_count, const std::vector<Edge>& edges) {
  Graph g(node_count);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= node_count) throw std::out_of_range("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("duplicate edge");
  }
  g.edge_count_ = static_cast<std::int64_t>(edges.size());
  return g;
}

NodeId Graph::degree(NodeId v) const {
  if (v < 0 || v >= node_count()) throw std::out_of_range("invalid node id");
  return static_cast<NodeId>(adj_[v].size());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u < 0 || u >= node_count() || v < 0 || v >= node_count()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const NodeId target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

void Graph::add_edge(NodeId u, NodeId v) {
  if (u < 0 || u >= node_count() || v < 0 || v >= node_count())
    throw std::out_of_range("invalid node id");
  if (u == v) throw std::invalid_argument("self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

AffectedNodes Graph::delete_edge(const Edge& e) {
  if (!has_edge(e.u, e.v)) throw std::invalid_argument("edge not present");
  AffectedNodes affected;
  affected.u = e.u;
  affected.v = e.v;
  affected.common = common_neighbors(e.u, e.v);

  auto erase_from = [&](NodeId a, NodeId b) {
    auto& nbrs = adj_[a];
    nbrs.erase(std::lower_bound(nbrs.begin(), nbrs.end(), b));
  };
  erase_from(e.u, e.v);
  erase_from(e.v, e.u);
  --edge_count_;
  return affected;
}

std::vector<NodeId> Graph::common_neighbors(NodeId u, NodeId v) const {
  std::vector<NodeId> out;
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::audit(std::string* why) const {
  std::int64_t degree_sum = 0;
  for (NodeId u = 0; u < node_count(); ++u) {
    const auto& nbrs = adj_[u];
    if (!std::is_sorted(nbrs.begin(), nbrs.end())) {
      if (why) *why = "adjacency not sorted at node " + std::to_string(u);
      return false;
    }
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      if (why) *why = "duplicate neighbor at node " + std::to_string(u);
      return false;
    }
    for (NodeId v : nbrs) {
      if (v == u) {
        if (why) *why = "self-loop at node " + std::to_string(u);
        return false;
      }
      if (v < 0 || v >= node_count() ||
          !std::binary_search(adj_[v].begin(), adj_[v].end(), u)) {
        if (why) *why = "asymmetric edge " + std::to_string(u) + "-" + std::to_string(v);
        return false;
      }
    }
    degree_sum += static_cast<std::int64_t>(nbrs.size());
  }
  if (degree_sum != 2 * edge_count_) {
    if (why) *why = "edge count mismatch";
    return false;
  }
  return true;
}

}  // namespace fuzzanon
