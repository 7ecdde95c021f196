#pragma once

#include <array>
#include <vector>

#include "mincut/rooted_tree.hpp"

namespace mincut {

/*
 * Degree-bounded companion of a RootedTree. Original vertices keep their ids
 * [0, n); a vertex with d > 2 children gets a caterpillar of d - 2 virtual
 * vertices (ids >= n): it keeps its first child plus a virtual vertex, which
 * keeps the next child plus the next virtual vertex, and so on, children taken
 * in postorder. Every binarized vertex therefore has at most two children and
 * every subtree still maps to one contiguous postorder interval. A virtual
 * vertex's interval covers the original subtrees it hangs over, never its
 * owner.
 *
 * Edges are identified by their lower endpoint. Edges into virtual vertices
 * are virtual and never become cut candidates.
 */
class BinarizedTree {
 public:
  explicit BinarizedTree(const RootedTree& tree);

  int size() const { return static_cast<int>(parent_.size()); }
  VertexId original_count() const { return original_count_; }
  VertexId root() const { return root_; }

  bool is_virtual(VertexId b) const { return b >= original_count_; }
  VertexId parent(VertexId b) const { return parent_[idx(b)]; }
  const std::vector<VertexId>& children(VertexId b) const { return children_[idx(b)]; }
  Interval interval(VertexId b) const { return interval_[idx(b)]; }
  // Nearest original ancestor-or-self.
  VertexId owner(VertexId b) const { return owner_[idx(b)]; }

  // Original tree edge (by lower endpoint) for a binarized edge; throws
  // CandidacyError when the edge is virtual.
  VertexId original_edge(VertexId lower) const;

 private:
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  VertexId original_count_;
  VertexId root_;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<Interval> interval_;
  std::vector<VertexId> owner_;
};

/*
 * Centroid decomposition of a BinarizedTree. Each centroid remembers, for
 * every neighbour still inside its component, the centroid of the component
 * that neighbour falls into once the centroid is removed.
 */
class CentroidDecomposition {
 public:
  struct Branch {
    VertexId neighbour;
    VertexId centroid;
  };

  explicit CentroidDecomposition(const BinarizedTree& tree);

  VertexId top() const { return top_; }
  // 1 for the top centroid.
  int level(VertexId c) const { return level_[static_cast<std::size_t>(c)]; }
  VertexId centroid_parent(VertexId c) const { return cparent_[static_cast<std::size_t>(c)]; }
  const std::vector<Branch>& branches(VertexId c) const { return branches_[static_cast<std::size_t>(c)]; }
  int depth() const { return depth_; }
  // Size of the component c was chosen from.
  int component_size(VertexId c) const { return comp_size_[static_cast<std::size_t>(c)]; }

 private:
  VertexId top_ = kNoVertex;
  int depth_ = 0;
  std::vector<int> level_;
  std::vector<VertexId> cparent_;
  std::vector<int> comp_size_;
  std::vector<std::vector<Branch>> branches_;
};

}  // namespace mincut
