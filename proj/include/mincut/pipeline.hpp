#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/cut_oracle.hpp"
#include "mincut/graph.hpp"
#include "mincut/range_index.hpp"
#include "mincut/rooted_tree.hpp"
#include "mincut/two_respect.hpp"

namespace mincut {

struct CutResult {
  Weight value{};
  std::vector<bool> side;  // membership of S, |S| in (0, n)
  CutCandidate witness;
  int tree_index = -1;     // -1 when the result does not come from a tree
};

struct PackingConfig {
  int tree_count = 0;  // 0 selects the default ceil(log2 n)^2
  std::uint64_t seed = 0x5eed;
  BackendConfig backend;
  int threads = 1;
};

int default_tree_count(VertexId n);

// Tree edge with the smallest w(T_e); ties by smallest edge id.
CutCandidate one_respect_min(const CutOracle& oracle);

/*
 * Greedy load-balancing packing: round i takes a minimum spanning tree under
 * cost load(e) / w(e) (Kruskal, ties by edge id, zero-weight edges last) and
 * then adds 1 to the load of every chosen edge. Deterministic. No guarantee
 * that a minimum cut 2-respects any returned tree.
 */
std::vector<std::vector<EdgeId>> greedy_tree_packing(const Graph& g, const PackingConfig& cfg);

// S = T_e for one edge, T_e u T_f for independent edges, T_e \ T_f when f
// lies below e.
std::vector<bool> extract_partition(const RootedTree& tree, const CutCandidate& cand);

// Total weight of edges with exactly one endpoint in S.
Weight boundary_weight(const Graph& g, const std::vector<bool>& side);

struct PipelineStats {
  TwoRespectStats two_respect;
  int trees = 0;
};

// Best 2-respecting cut over the greedy packing. Throws StructuralError for
// disconnected graphs or n < 2.
CutResult min_cut(const Graph& g, const PackingConfig& cfg, PipelineStats* stats = nullptr);
// Same, over caller-supplied spanning trees.
CutResult min_cut_with_trees(const Graph& g, std::span<const std::vector<EdgeId>> trees,
                             const PackingConfig& cfg, PipelineStats* stats = nullptr);

// Reference oracles. Neither shares code with the oracle or solver.

// Exact minimum over all single tree edges and all pairs, by explicit tree
// path marking. Meant for small instances.
CutCandidate brute_force_two_respect(const Graph& g, std::span<const EdgeId> tree_edges);

// Exact global minimum cut. Throws StructuralError when g is disconnected or
// n < 2.
CutResult stoer_wagner(const Graph& g);

}  // namespace mincut
