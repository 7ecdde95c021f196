#include "mincut/two_respect.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "mincut/errors.hpp"
#include "mincut/monge.hpp"
#include "mincut/pipeline.hpp"

namespace mincut {

bool better_candidate(const CutCandidate& a, const CutCandidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

CutCandidate make_candidate(const RootedTree& tree, std::span<const VertexId> lower_endpoints,
                            const Weight& value) {
  CutCandidate c;
  c.value = value;
  for (VertexId v : lower_endpoints) c.edges.push_back(tree.parent_edge(v));
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

TwoRespectStats& TwoRespectStats::operator+=(const TwoRespectStats& o) {
  frontier_predicates += o.frontier_predicates;
  frontier_rect_queries += o.frontier_rect_queries;
  rect_queries += o.rect_queries;
  range_nodes_visited += o.range_nodes_visited;
  same_path_evaluations += o.same_path_evaluations;
  smawk_calls += o.smawk_calls;
  smawk_evaluations += o.smawk_evaluations;
  smawk_dimension_sum += o.smawk_dimension_sum;
  smawk_max_ratio_violations += o.smawk_max_ratio_violations;
  interesting_pairs += o.interesting_pairs;
  pair_list_total += o.pair_list_total;
  heavy_paths += o.heavy_paths;
  seconds += o.seconds;
  return *this;
}

std::optional<CutCandidate> same_path_min(const HeavyPath& path, const CutOracle& oracle,
                                          TwoRespectStats* stats) {
  const auto& edges = path.edges;
  if (edges.size() < 2) return std::nullopt;
  ImplicitMatrix<Weight> m(edges.size(), edges.size(), [&](std::size_t i, std::size_t j) {
    return oracle.cut_value_at(edges[i], edges[j]);
  });
  const auto best = staircase_monge_min(m, true);
  if (stats) stats->same_path_evaluations += m.evaluations();
  if (!best) return std::nullopt;
  const VertexId pair[2] = {edges[best->row], edges[best->col]};
  return make_candidate(oracle.tree(), pair, best->value);
}

namespace {

// Deepest end of a root-anchored path of binarized edges, given membership
// of the edge entering each vertex. At each centroid: if the edge entering it
// is off the path the end lies above; otherwise it lies below whichever child
// edge is on the path, or is the centroid itself.
template <class Pred>
VertexId descend(const BinarizedTree& bt, const CentroidDecomposition& cd, Pred&& on_path) {
  VertexId c = cd.top();
  for (;;) {
    const auto& branches = cd.branches(c);
    if (c != bt.root() && !on_path(c)) {
      const VertexId up = bt.parent(c);
      const auto it = std::find_if(branches.begin(), branches.end(),
                                   [up](const auto& b) { return b.neighbour == up; });
      if (it == branches.end()) return c;
      c = it->centroid;
      continue;
    }
    VertexId next = kNoVertex;
    for (const auto& b : branches) {
      if (bt.parent(b.neighbour) == c && on_path(b.neighbour)) {
        next = b.centroid;
        break;
      }
    }
    if (next == kNoVertex) return c;
    c = next;
  }
}

}  // namespace

InterestFrontier compute_interest_frontiers(const CutOracle& oracle, const BinarizedTree& bt,
                                            const CentroidDecomposition& cd, TwoRespectStats* stats) {
  const RootedTree& tree = oracle.tree();
  const VertexId n = tree.vertex_count();
  InterestFrontier out;
  out.cross_end.assign(static_cast<std::size_t>(n), kNoVertex);
  out.down_end.assign(static_cast<std::size_t>(n), kNoVertex);
  const auto before = oracle.stats().rect_queries;
  std::uint64_t predicates = 0;

  for (VertexId v = 0; v < n; ++v) {
    if (v == tree.root()) continue;
    const Interval iv = tree.interval(v);
    const Weight& wv = tree.down_weight(v);

    // Edge into y is on the cross-interest path of e: independent edges by
    // the interest inequality, ancestors of e when more than half of w(T_e)
    // goes into the rest of their subtree. Both sets together always form a
    // root-anchored path.
    auto on_cross = [&](VertexId y) {
      ++predicates;
      const Interval iy = bt.interval(y);
      if (iy.disjoint(iv)) return wv < Weight(2) * oracle.between(iv, iy);
      if (iy.contains(iv) && iy != iv) return wv < Weight(2) * oracle.into_rest(iv, iy);
      return false;
    };
    auto below_interest = [&](VertexId y) { return wv < Weight(2) * oracle.leaving(bt.interval(y), iv); };
    auto on_down = [&](VertexId y) {
      ++predicates;
      const Interval iy = bt.interval(y);
      if (iy.contains(iv) && iy != iv) return true;
      if (y == v) {
        for (VertexId z : bt.children(v)) {
          if (below_interest(z)) return true;
        }
        return false;
      }
      if (iv.contains(iy)) return below_interest(y);
      return false;
    };

    const VertexId cross = bt.owner(descend(bt, cd, on_cross));
    const bool independent = !tree.is_ancestor(cross, v) && !tree.is_ancestor(v, cross);
    out.cross_end[static_cast<std::size_t>(v)] = independent ? cross : tree.parent(v);

    const VertexId down = bt.owner(descend(bt, cd, on_down));
    const bool below = down != v && tree.is_ancestor(v, down);
    out.down_end[static_cast<std::size_t>(v)] = below ? down : tree.parent(v);
  }

  if (stats) {
    stats->frontier_predicates += predicates;
    stats->frontier_rect_queries += oracle.stats().rect_queries - before;
  }
  return out;
}

std::vector<InterestingPair> build_interesting_pairs(const InterestFrontier& frontiers,
                                                     const HeavyPathDecomposition& hpd, const RootedTree& tree) {
  const VertexId n = tree.vertex_count();
  const auto path_count = static_cast<std::size_t>(hpd.path_count());

  // Paths each tree edge is interested in (other than its own).
  std::vector<std::vector<PathId>> edge_interest(static_cast<std::size_t>(n));
  std::vector<std::vector<PathId>> path_interest(path_count);
  for (VertexId v = 0; v < n; ++v) {
    if (v == tree.root()) continue;
    const PathId own = hpd.position(v).path;
    auto& list = edge_interest[static_cast<std::size_t>(v)];
    for (VertexId end : {frontiers.cross_end[static_cast<std::size_t>(v)],
                         frontiers.down_end[static_cast<std::size_t>(v)]}) {
      for (const PathPosition& pp : hpd.paths_on_root_path(end)) {
        if (pp.path != own) list.push_back(pp.path);
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    auto& plist = path_interest[static_cast<std::size_t>(own)];
    plist.insert(plist.end(), list.begin(), list.end());
  }
  for (auto& plist : path_interest) {
    std::sort(plist.begin(), plist.end());
    plist.erase(std::unique(plist.begin(), plist.end()), plist.end());
  }

  std::vector<InterestingPair> pairs;
  std::map<std::pair<PathId, PathId>, std::size_t> slot;
  for (PathId p = 0; p < static_cast<PathId>(path_count); ++p) {
    for (PathId q : path_interest[static_cast<std::size_t>(p)]) {
      if (q <= p) continue;
      const auto& back = path_interest[static_cast<std::size_t>(q)];
      if (!std::binary_search(back.begin(), back.end(), p)) continue;
      slot.emplace(std::pair(p, q), pairs.size());
      pairs.push_back({p, q, {}, {}});
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (v == tree.root()) continue;
    const PathId own = hpd.position(v).path;
    for (PathId other : edge_interest[static_cast<std::size_t>(v)]) {
      const auto it = slot.find(std::minmax(own, other));
      if (it == slot.end()) continue;
      InterestingPair& pair = pairs[it->second];
      (pair.p == own ? pair.p_edges : pair.q_edges).push_back(v);
    }
  }
  auto by_index = [&hpd](VertexId a, VertexId b) { return hpd.position(a).index < hpd.position(b).index; };
  for (auto& pair : pairs) {
    std::sort(pair.p_edges.begin(), pair.p_edges.end(), by_index);
    std::sort(pair.q_edges.begin(), pair.q_edges.end(), by_index);
  }
  return pairs;
}

std::vector<PairBlock> orient_pair(const InterestingPair& pair, const HeavyPathDecomposition& hpd,
                                   const RootedTree& tree) {
  const VertexId top_p = hpd.path(pair.p).edges.front();
  const VertexId top_q = hpd.path(pair.q).edges.front();
  // The row path is the lower one when one path hangs below the other.
  const bool q_is_lower = tree.is_ancestor(top_p, top_q);
  const auto& row_edges = q_is_lower ? pair.q_edges : pair.p_edges;
  const auto& col_edges = q_is_lower ? pair.p_edges : pair.q_edges;
  const VertexId row_top = q_is_lower ? top_q : top_p;

  std::vector<PairBlock> blocks;
  if (row_edges.empty() || col_edges.empty()) return blocks;
  PairBlock nested{{row_edges.rbegin(), row_edges.rend()}, {}, true};
  PairBlock independent{nested.rows, {}, false};
  for (VertexId f : col_edges) {
    (tree.is_ancestor(f, row_top) ? nested.cols : independent.cols).push_back(f);
  }
  std::reverse(nested.cols.begin(), nested.cols.end());
  if (!nested.cols.empty()) blocks.push_back(std::move(nested));
  if (!independent.cols.empty()) blocks.push_back(std::move(independent));
  return blocks;
}

std::optional<CutCandidate> cross_path_min(std::span<const InterestingPair> pairs,
                                           const HeavyPathDecomposition& hpd, const CutOracle& oracle,
                                           TwoRespectStats* stats) {
  std::optional<CutCandidate> best;
  for (const InterestingPair& pair : pairs) {
    if (stats) {
      ++stats->interesting_pairs;
      stats->pair_list_total += pair.p_edges.size() + pair.q_edges.size();
    }
    for (const PairBlock& block : orient_pair(pair, hpd, oracle.tree())) {
      ImplicitMatrix<Weight> m(block.rows.size(), block.cols.size(), [&](std::size_t i, std::size_t j) {
        return oracle.cut_value_at(block.rows[i], block.cols[j]);
      });
      const auto found = monge_global_min(m);
      if (stats) {
        const std::uint64_t dims = block.rows.size() + block.cols.size();
        ++stats->smawk_calls;
        stats->smawk_evaluations += m.evaluations();
        stats->smawk_dimension_sum += dims;
        if (m.evaluations() > 8 * dims) ++stats->smawk_max_ratio_violations;
      }
      if (!found) continue;
      const VertexId edges[2] = {block.rows[found->row], block.cols[found->col]};
      CutCandidate cand = make_candidate(oracle.tree(), edges, found->value);
      if (!best || better_candidate(cand, *best)) best = std::move(cand);
    }
  }
  return best;
}

TwoRespectSolver::TwoRespectSolver(const Graph& g, std::span<const EdgeId> tree_edges, const BackendConfig& backend)
    : graph_(g),
      tree_(g, tree_edges, 0),
      oracle_(g, tree_, backend),
      hpd_(tree_),
      btree_(tree_),
      cd_(btree_) {}

std::optional<CutCandidate> TwoRespectSolver::same_path_best(TwoRespectStats* stats) const {
  std::optional<CutCandidate> best;
  for (const HeavyPath& path : hpd_.paths()) {
    auto cand = same_path_min(path, oracle_, stats);
    if (cand && (!best || better_candidate(*cand, *best))) best = std::move(cand);
  }
  return best;
}

InterestFrontier TwoRespectSolver::frontiers(TwoRespectStats* stats) const {
  return compute_interest_frontiers(oracle_, btree_, cd_, stats);
}

std::vector<InterestingPair> TwoRespectSolver::pairs(const InterestFrontier& f) const {
  return build_interesting_pairs(f, hpd_, tree_);
}

CutCandidate TwoRespectSolver::solve(TwoRespectStats* stats) const {
  const auto start = std::chrono::steady_clock::now();
  const OracleStats before = oracle_.stats();

  CutCandidate best = one_respect_min(oracle_);
  if (auto same = same_path_best(stats); same && better_candidate(*same, best)) best = std::move(*same);
  const auto f = frontiers(stats);
  const auto p = pairs(f);
  if (auto cross = cross_path_min(p, hpd_, oracle_, stats); cross && better_candidate(*cross, best)) {
    best = std::move(*cross);
  }

  if (stats) {
    const OracleStats after = oracle_.stats();
    stats->rect_queries += after.rect_queries - before.rect_queries;
    stats->range_nodes_visited += after.nodes_visited - before.nodes_visited;
    stats->heavy_paths += static_cast<std::uint64_t>(hpd_.path_count());
    stats->seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return best;
}

CutCandidate two_respect_min(const Graph& g, std::span<const EdgeId> tree_edges, const BackendConfig& backend,
                             TwoRespectStats* stats) {
  if (g.vertex_count() < 2) throw StructuralError("a cut needs at least two vertices");
  TwoRespectSolver solver(g, tree_edges, backend);
  return solver.solve(stats);
}

}  // namespace mincut
