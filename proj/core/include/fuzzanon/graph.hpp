#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fuzzanon {

using NodeId = std::int32_t;

// Undirected edge, stored canonically with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  Edge() : u(0), v(0) {}
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Nodes touched by deleting an edge: the endpoints plus their common
// neighbors. Exactly the nodes whose (deg, tri) signature changes.
struct AffectedNodes {
  NodeId u = 0;
  NodeId v = 0;
  std::vector<NodeId> common;  // sorted ascending

  std::vector<NodeId> all() const {
    std::vector<NodeId> out{u, v};
    out.insert(out.end(), common.begin(), common.end());
    return out;
  }
};

// Simple undirected graph with dense node ids 0..n-1 and sorted adjacency.
// Immutable except for edge deletion. Invariants (checked by audit()):
// no self-loops, no duplicate edges, adjacency symmetric, and
// edge_count == sum(deg)/2.
class Graph {
 public:
  Graph() = default;
  explicit Graph(NodeId node_count);

  // Builds from an edge list; duplicates and self-loops must already be
  // removed (load_edge_list takes care of that for files).
  static Graph from_edges(NodeId node_count, const std::vector<Edge>& edges);

  NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }
  NodeId degree(NodeId v) const;  // throws std::out_of_range on bad id
  bool has_edge(NodeId u, NodeId v) const;

  // Inserts an edge; both ids must be valid and the edge absent.
  void add_edge(NodeId u, NodeId v);

  // Removes the edge and returns the affected-node set for incremental
  // signature updates. Throws std::invalid_argument if the edge is absent.
  AffectedNodes delete_edge(const Edge& e);

  // Common neighbors of u and v, without deleting anything.
  std::vector<NodeId> common_neighbors(NodeId u, NodeId v) const;

  // All edges in canonical (u < v) lexicographic order.
  std::vector<Edge> edges() const;

  // Verifies structural invariants; returns false and fills `why` on failure.
  bool audit(std::string* why = nullptr) const;

  // Optional external labels (dense id -> original token), set by the loader.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::int64_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

}  // namespace fuzzanon
