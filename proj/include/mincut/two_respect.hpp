#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mincut/binarized_tree.hpp"
#include "mincut/cut_oracle.hpp"
#include "mincut/graph.hpp"
#include "mincut/heavy_path.hpp"
#include "mincut/range_index.hpp"
#include "mincut/rooted_tree.hpp"

namespace mincut {

// One or two tree edges and the weight of the cut they determine. Edge ids
// are kept sorted ascending.
struct CutCandidate {
  std::vector<EdgeId> edges;
  Weight value{};

  friend bool operator==(const CutCandidate&, const CutCandidate&) = default;
};

// Deterministic preference: smaller value, then fewer edges, then the
// lexicographically smaller edge list.
bool better_candidate(const CutCandidate& a, const CutCandidate& b);
CutCandidate make_candidate(const RootedTree& tree, std::span<const VertexId> lower_endpoints,
                            const Weight& value);

/*
 * End points of the root-anchored interest paths, indexed by the lower
 * endpoint of each tree edge (the root's entries are unused).
 *
 * cross_end[v]: deepest vertex of the chain of edges independent of e that e
 * is cross-interested in; when e is cross-interested in no independent edge,
 * the upper endpoint of e (its ancestor chain, by convention).
 * down_end[v]: deepest vertex x below e such that e is down-interested in the
 * edge entering x; the upper endpoint of e if there is none. The root-to-end
 * path then holds exactly the edges e is down-interested in, plus e itself
 * when it ends below e.
 */
struct InterestFrontier {
  std::vector<VertexId> cross_end;
  std::vector<VertexId> down_end;
};

// Heavy paths p < q that are each interested in the other, with the edges of
// each side that are interested in the other path (lower endpoints, sorted
// by position along their own path, top first).
struct InterestingPair {
  PathId p;
  PathId q;
  std::vector<VertexId> p_edges;
  std::vector<VertexId> q_edges;
};

struct TwoRespectStats {
  std::uint64_t frontier_predicates = 0;
  std::uint64_t frontier_rect_queries = 0;
  std::uint64_t rect_queries = 0;
  std::uint64_t range_nodes_visited = 0;
  std::uint64_t same_path_evaluations = 0;
  std::uint64_t smawk_calls = 0;
  std::uint64_t smawk_evaluations = 0;
  std::uint64_t smawk_dimension_sum = 0;  // sum of rows + cols over calls
  std::uint64_t smawk_max_ratio_violations = 0;  // calls with evals > 8 (rows + cols)
  std::uint64_t interesting_pairs = 0;
  std::uint64_t pair_list_total = 0;  // sum of |P'| + |Q'|
  std::uint64_t heavy_paths = 0;
  double seconds = 0.0;

  TwoRespectStats& operator+=(const TwoRespectStats& o);
};

// Minimum over unordered pairs of distinct edges of one heavy path; nullopt
// for paths with fewer than two edges.
std::optional<CutCandidate> same_path_min(const HeavyPath& path, const CutOracle& oracle,
                                          TwoRespectStats* stats = nullptr);

InterestFrontier compute_interest_frontiers(const CutOracle& oracle, const BinarizedTree& btree,
                                            const CentroidDecomposition& cd,
                                            TwoRespectStats* stats = nullptr);

std::vector<InterestingPair> build_interesting_pairs(const InterestFrontier& frontiers,
                                                     const HeavyPathDecomposition& hpd,
                                                     const RootedTree& tree);

// Orientation used for one block of a pair: rows are the lower path's edges
// bottom to top; columns are the other path's edges that are ancestors of the
// row path (bottom to top) or independent of it (top to bottom).
struct PairBlock {
  std::vector<VertexId> rows;
  std::vector<VertexId> cols;
  bool nested;
};
std::vector<PairBlock> orient_pair(const InterestingPair& pair, const HeavyPathDecomposition& hpd,
                                   const RootedTree& tree);

std::optional<CutCandidate> cross_path_min(std::span<const InterestingPair> pairs,
                                           const HeavyPathDecomposition& hpd,
                                           const CutOracle& oracle, TwoRespectStats* stats = nullptr);

/*
 * Holds every structure the 2-respecting search needs for one spanning tree.
 * Exposed so the individual stages can be inspected and tested.
 */
class TwoRespectSolver {
 public:
  TwoRespectSolver(const Graph& g, std::span<const EdgeId> tree_edges, const BackendConfig& backend = {});

  const RootedTree& tree() const { return tree_; }
  const CutOracle& oracle() const { return oracle_; }
  const HeavyPathDecomposition& heavy_paths() const { return hpd_; }
  const BinarizedTree& binarized() const { return btree_; }
  const CentroidDecomposition& centroids() const { return cd_; }

  std::optional<CutCandidate> same_path_best(TwoRespectStats* stats = nullptr) const;
  InterestFrontier frontiers(TwoRespectStats* stats = nullptr) const;
  std::vector<InterestingPair> pairs(const InterestFrontier& f) const;

  CutCandidate solve(TwoRespectStats* stats = nullptr) const;

 private:
  const Graph& graph_;
  RootedTree tree_;
  CutOracle oracle_;
  HeavyPathDecomposition hpd_;
  BinarizedTree btree_;
  CentroidDecomposition cd_;
};

// Minimum cut of g crossed by at most two edges of the given spanning tree.
// Throws StructuralError if tree_edges is not a spanning tree or n < 2.
CutCandidate two_respect_min(const Graph& g, std::span<const EdgeId> tree_edges,
                             const BackendConfig& backend = {}, TwoRespectStats* stats = nullptr);

}  // namespace mincut
