#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fuzzanon/graph.hpp"

namespace fuzzanon {

// Data-level failure (unreadable file, malformed line, checksum mismatch).
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadSummary {
  std::int64_t lines_read = 0;
  std::int64_t comment_lines = 0;
  std::int64_t duplicate_edges = 0;
  std::int64_t self_loops = 0;
  NodeId node_count = 0;
  std::int64_t edge_count = 0;

  std::string to_json() const;
};

struct LoadOptions {
  bool keep_labels = true;  // retain the external-label map on the graph
};

// Parses whitespace-separated "u v" lines; '#' and '%' start comments.
// Tokens are arbitrary labels, mapped to dense ids in first-seen order.
// Duplicate edges and self-loops are dropped and counted in the summary.
// Throws DataError on a malformed line (with its line number) or empty input.
Graph load_edge_list(std::istream& in, LoadSummary& summary,
                     const LoadOptions& options = {});

Graph load_edge_list_file(const std::string& path, LoadSummary& summary,
                          const LoadOptions& options = {});

// One canonical "u v" line per edge, internal dense ids.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

}  // namespace fuzzanon
