#pragma once

#include <cstdint>
#include <vector>

#include "fuzzanon/graph.hpp"

namespace fuzzanon {

// Exact/sampled switch for the BFS-per-source kernels. Exact is the default
// below 20k nodes; above that callers should sample with a recorded seed.
struct SampleMode {
  bool exact = true;
  int samples = 0;  // number of sources (path length) or pivots (betweenness)
  std::uint64_t seed = 0;

  static SampleMode Exact() { return {}; }
  static SampleMode Sampled(int samples, std::uint64_t seed) { return {false, samples, seed}; }
  static SampleMode auto_for(const Graph& g, std::uint64_t seed);
};

// Per-node incident triangle counts via sorted-adjacency intersection.
// sum(tri) == 3 * number of triangles in the graph.
std::vector<std::int64_t> triangle_counts(const Graph& g);

struct ComponentPartition {
  std::vector<NodeId> component;  // per-node component id, dense, first-seen order
  std::vector<std::int64_t> sizes;
};

ComponentPartition connected_components(const Graph& g);
double lcc_fraction(const Graph& g);

struct PathLengthResult {
  double value = 0.0;
  bool exact = true;
  int sources_used = 0;        // BFS sources actually run
  std::int64_t pairs_used = 0; // finite pairs in the average
};

// Mean shortest-path distance over finite pairs v != w. Throws
// std::domain_error when no finite pair exists (e.g. edgeless graph).
PathLengthResult average_path_length(const Graph& g, const SampleMode& mode = {});

// Mean of c(v) = tri(v) / C(deg(v), 2), with c(v) = 0 when deg(v) < 2.
double average_clustering(const Graph& g);

}  // namespace fuzzanon
