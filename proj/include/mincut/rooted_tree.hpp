#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/weight.hpp"

namespace mincut {

// Closed interval of postorder times. A subtree of the rooted tree occupies
// exactly one such interval.
struct Interval {
  int lo;
  int hi;

  bool contains(int t) const { return lo <= t && t <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  int size() const { return hi - lo + 1; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Euler tour + sparse table. O(n log n) build, O(1) query.
class LcaIndex {
 public:
  LcaIndex() = default;
  LcaIndex(VertexId root, const std::vector<std::vector<VertexId>>& children,
           const std::vector<int>& depth);

  VertexId query(VertexId u, VertexId v) const;

 private:
  VertexId shallower(VertexId a, VertexId b) const {
    return depth_[static_cast<std::size_t>(a)] <= depth_[static_cast<std::size_t>(b)] ? a : b;
  }

  std::vector<int> first_;
  std::vector<int> depth_;
  std::vector<std::vector<VertexId>> table_;
};

/*
 * A spanning tree of a graph, rooted and annotated with postorder times,
 * subtree intervals and subtree boundary weights. A tree edge is identified
 * either by its graph EdgeId or by its lower endpoint; the two are
 * interchangeable through parent_edge() / lower_endpoint().
 */
class RootedTree {
 public:
  // Throws StructuralError unless tree_edges is a spanning tree of g.
  RootedTree(const Graph& g, std::span<const EdgeId> tree_edges, VertexId root = 0);

  VertexId vertex_count() const { return n_; }
  VertexId root() const { return root_; }

  VertexId parent(VertexId v) const { return parent_[idx(v)]; }
  EdgeId parent_edge(VertexId v) const { return parent_edge_[idx(v)]; }
  // Children ordered by postorder time (equivalently by vertex id).
  const std::vector<VertexId>& children(VertexId v) const { return children_[idx(v)]; }
  const std::vector<std::vector<VertexId>>& children() const { return children_; }

  // Postorder time in [1, n].
  int post(VertexId v) const { return post_[idx(v)]; }
  // Minimum postorder time inside the subtree of v.
  int post_low(VertexId v) const { return post_low_[idx(v)]; }
  Interval interval(VertexId v) const { return {post_low_[idx(v)], post_[idx(v)]}; }
  VertexId vertex_at_post(int t) const { return by_post_[static_cast<std::size_t>(t - 1)]; }

  // Total weight of graph edges with exactly one endpoint in the subtree of v.
  const Weight& down_weight(VertexId v) const { return down_weight_[idx(v)]; }

  int depth(VertexId v) const { return depth_[idx(v)]; }
  int subtree_size(VertexId v) const { return post_[idx(v)] - post_low_[idx(v)] + 1; }

  // True iff a is an ancestor of b or a == b.
  bool is_ancestor(VertexId a, VertexId b) const { return interval(a).contains(post(b)); }
  VertexId lca(VertexId u, VertexId v) const { return lca_.query(u, v); }

  bool is_tree_edge(EdgeId e) const;
  // Lower endpoint of a tree edge, nullopt for non-tree edges.
  std::optional<VertexId> lower_endpoint(EdgeId e) const;
  const std::vector<EdgeId>& tree_edges() const { return tree_edges_; }

 private:
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  VertexId n_;
  VertexId root_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<int> post_;
  std::vector<int> post_low_;
  std::vector<VertexId> by_post_;
  std::vector<int> depth_;
  std::vector<Weight> down_weight_;
  std::vector<EdgeId> tree_edges_;
  std::vector<VertexId> lower_of_edge_;
  LcaIndex lca_;
};

}  // namespace mincut
