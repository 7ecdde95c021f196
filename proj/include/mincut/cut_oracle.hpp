#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

#include "mincut/graph.hpp"
#include "mincut/range_index.hpp"
#include "mincut/rooted_tree.hpp"

namespace mincut {

struct OracleStats {
  std::uint64_t rect_queries = 0;
  std::uint64_t nodes_visited = 0;
};

/*
 * Answers cut and interest queries about pairs of tree edges in polylog time.
 *
 * Every graph edge (u, v) becomes the two points (post(u), post(v)) and
 * (post(v), post(u)), so for disjoint postorder intervals A and B the weight
 * of the edges between the two vertex sets is rect_sum(A x B), each edge
 * counted once.
 *
 * Tree edges are addressed by graph EdgeId in the public API and by lower
 * endpoint in the *_at variants. The interval-level primitives serve virtual
 * edges of the binarized tree, whose "subtree" is an arbitrary interval of
 * the laminar family.
 */
class CutOracle {
 public:
  CutOracle(const Graph& g, const RootedTree& tree, const BackendConfig& backend = {});

  CutOracle(const CutOracle&) = delete;
  CutOracle& operator=(const CutOracle&) = delete;

  const RootedTree& tree() const { return tree_; }
  const RangeIndex& index() const { return *index_; }

  // w(T_e). Throws CandidacyError for non-tree edges.
  Weight cut_one(EdgeId e) const;
  // Weight of the cut determined by {e, f}. Throws ArgumentError if e == f.
  Weight cut_value(EdgeId e, EdgeId f) const;
  // f independent of e: w(T_e) < 2 w(T_e, T_f). f an ancestor of e: true by
  // convention. f a descendant of e (or f == e): ArgumentError.
  bool is_cross_interested(EdgeId e, EdgeId f) const;
  // f a descendant of e: w(T_e) < 2 w(T_f, V \ T_e). f an ancestor of e:
  // true by convention. Independent (or equal) edges: ArgumentError.
  bool is_down_interested(EdgeId e, EdgeId f) const;

  const Weight& cut_one_at(VertexId lower) const { return tree_.down_weight(lower); }
  Weight cut_value_at(VertexId a, VertexId b) const;

  // Weight of edges between two disjoint intervals.
  Weight between(const Interval& a, const Interval& b) const;
  // Weight of edges from `inner` to the complement of `outer` (inner within outer).
  Weight leaving(const Interval& inner, const Interval& outer) const;
  // Weight of edges from `inner` to `outer` minus `inner` (inner within outer).
  Weight into_rest(const Interval& inner, const Interval& outer) const;
  // Boundary weight of the vertex set occupying `iv`.
  Weight boundary(const Interval& iv) const;

  OracleStats stats() const;
  void reset_stats() const;

 private:
  VertexId lower_or_throw(EdgeId e) const;
  Weight rect(int x1, int x2, int y1, int y2) const;

  const RootedTree& tree_;
  std::unique_ptr<RangeIndex> index_;
  mutable std::atomic<std::uint64_t> rect_queries_{0};
  mutable std::atomic<std::uint64_t> nodes_visited_{0};
};

}  // namespace mincut
