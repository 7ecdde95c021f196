#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/range_index.hpp"

// Slow, obviously-correct reference computations shared by the tests. None of
// them use the library's tree, oracle or solver code.
namespace mincut::testing {

Weight naive_rect_sum(std::span<const WeightedPoint> points, int x1, int x2, int y1, int y2);

// Parent array of the tree given by tree_edges, rooted at 0 (BFS).
std::vector<VertexId> naive_parents(const Graph& g, std::span<const EdgeId> tree_edges);

// Membership of the subtree below v, by walking parent pointers.
std::vector<bool> naive_subtree(const std::vector<VertexId>& parent, VertexId v);

Weight naive_boundary(const Graph& g, const std::vector<bool>& side);

bool naive_is_ancestor(const std::vector<VertexId>& parent, VertexId a, VertexId b);

// Interest frontiers straight from the definitions, indexed like
// InterestFrontier. Also checks that each interest set is a root-anchored
// path; `paths_ok` is cleared when one is not.
struct NaiveFrontier {
  std::vector<VertexId> cross_end;
  std::vector<VertexId> down_end;
  bool paths_ok = true;
};
NaiveFrontier naive_frontiers(const Graph& g, std::span<const EdgeId> tree_edges);

// Number of tree edges with endpoints on different sides.
int crossing_count(const Graph& g, std::span<const EdgeId> tree_edges, const std::vector<bool>& side);

// A random spanning tree crossing the bipartition `side` exactly twice, or
// nullopt if the attempt finds none. Each side must be connected on its own.
std::optional<std::vector<EdgeId>> twice_crossing_tree(const Graph& g, const std::vector<bool>& side,
                                                       std::uint64_t seed);

// Minimum cut by enumerating all 2^(n-1) - 1 bipartitions. n <= 20.
Weight exhaustive_min_cut(const Graph& g);

}  // namespace mincut::testing
