#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut::gen {

// Connected graph: a random spanning tree plus m - (n - 1) random extra
// edges (parallel edges possible), weights uniform in [1, max_weight].
// Throws ArgumentError if n < 2 or m < n - 1.
Graph random_connected(VertexId n, EdgeId m, std::int64_t max_weight, std::uint64_t seed);

// Unit-weight cycle on n >= 3 vertices.
Graph cycle(VertexId n);

// Two unit-weight cliques on k vertices each joined by a single unit edge.
Graph dumbbell(VertexId k);

// rows x cols grid, weights uniform in [1, max_weight].
Graph grid(VertexId rows, VertexId cols, std::int64_t max_weight, std::uint64_t seed);

struct Planted {
  Graph graph;
  std::vector<bool> side;     // the planted minimum cut
  std::vector<EdgeId> tree;   // a spanning tree crossing it at most twice
  std::int64_t cut_weight;
};

/*
 * Two heavily connected sides (side_size and n - side_size vertices) joined
 * by crossing edges of total weight cut_weight. Every edge inside a side
 * weighs more than cut_weight and each side contains a Hamiltonian path, so
 * the planted partition is the unique minimum cut. The companion tree crosses
 * it twice when cut_weight >= 2 and side_size >= 2, otherwise once.
 */
Planted planted(VertexId n, EdgeId m, std::int64_t cut_weight, VertexId side_size,
                std::int64_t max_weight, std::uint64_t seed);

// A uniformly shuffled spanning tree of a connected graph (random Kruskal).
std::vector<EdgeId> random_spanning_tree(const Graph& g, std::uint64_t seed);

}  // namespace mincut::gen
