#pragma once

#include <vector>

#include "mincut/rooted_tree.hpp"

namespace mincut {

using PathId = std::int32_t;

// A maximal top-to-bottom chain of tree edges. Edges are stored by their
// lower endpoints, topmost first.
struct HeavyPath {
  VertexId top;                 // upper endpoint of the first edge
  std::vector<VertexId> edges;  // lower endpoints, top to bottom
};

struct PathPosition {
  PathId path;
  int index;
};

/*
 * Edge-disjoint heavy-path decomposition. The heavy child of a vertex is the
 * child with the largest subtree, ties going to the smaller vertex id. A
 * light child starts a new path consisting of its parent edge followed by
 * its heavy chain. Path ids follow a preorder walk, which is the canonical
 * path order.
 */
class HeavyPathDecomposition {
 public:
  explicit HeavyPathDecomposition(const RootedTree& tree);

  const std::vector<HeavyPath>& paths() const { return paths_; }
  const HeavyPath& path(PathId p) const { return paths_[static_cast<std::size_t>(p)]; }
  PathId path_count() const { return static_cast<PathId>(paths_.size()); }

  // Position of the tree edge whose lower endpoint is v (v != root).
  PathPosition position(VertexId lower) const { return pos_[static_cast<std::size_t>(lower)]; }

  // Paths sharing at least one edge with the root-to-x path. For each, the
  // edges [0, index] of the path lie on the root-to-x path. Ordered from x
  // upwards.
  std::vector<PathPosition> paths_on_root_path(VertexId x) const;

 private:
  std::vector<HeavyPath> paths_;
  std::vector<PathPosition> pos_;
};

}  // namespace mincut
