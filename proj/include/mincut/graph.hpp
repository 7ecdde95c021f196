#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "mincut/weight.hpp"

namespace mincut {

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/*
 * Weighted undirected multigraph. Edge ids are dense and equal to the
 * insertion order. Immutable once constructed.
 */
class Graph {
 public:
  Graph() = default;
  // Throws ArgumentError on an out-of-range endpoint, a self-loop or a
  // negative weight.
  Graph(VertexId vertex_count, std::vector<Edge> edges);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  Weight total_weight() const;
  bool is_connected() const;

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
};

// DIMACS-like text: "c ..." comments, one "p <n> <m>" header, then exactly m
// "e <u> <v> <w>" lines with 1-based vertex ids. Throws ParseError.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(std::string_view text);
Graph load_graph(const std::string& path);

// Canonical text form accepted by parse_graph.
std::string serialize_graph(const Graph& g);

// One edge per unordered vertex pair carrying the summed weight, in order of
// first occurrence.
Graph collapse_parallel_edges(const Graph& g);

}  // namespace mincut
