#include "mincut/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <queue>
#include <thread>
#include <unordered_map>

#include "mincut/errors.hpp"

namespace mincut {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_cuttable(const Graph& g) {
  if (g.vertex_count() < 2) throw StructuralError("a cut needs at least two vertices");
  if (!g.is_connected()) throw StructuralError("graph is disconnected");
}

}  // namespace

int default_tree_count(VertexId n) {
  if (n <= 2) return 1;
  const int lg = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  return lg * lg;
}

CutCandidate one_respect_min(const CutOracle& oracle) {
  const RootedTree& tree = oracle.tree();
  CutCandidate best;
  bool found = false;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (v == tree.root()) continue;
    const Weight& value = tree.down_weight(v);
    const EdgeId e = tree.parent_edge(v);
    if (!found || value < best.value || (value == best.value && e < best.edges.front())) {
      best = {{e}, value};
      found = true;
    }
  }
  if (!found) throw StructuralError("tree has no edges");
  return best;
}

std::vector<std::vector<EdgeId>> greedy_tree_packing(const Graph& g, const PackingConfig& cfg) {
  if (!g.is_connected()) throw StructuralError("graph is disconnected");
  const int k = cfg.tree_count > 0 ? cfg.tree_count : default_tree_count(g.vertex_count());
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<std::int64_t> load(m, 0);
  std::vector<EdgeId> order(m);

  // Zero-weight edges come after every positive edge; among themselves by
  // load. Positive edges compare load(a)/w(a) < load(b)/w(b) exactly.
  auto cheaper = [&](EdgeId a, EdgeId b) {
    const Weight& wa = g.edge(a).w;
    const Weight& wb = g.edge(b).w;
    const bool za = wa == Weight(0);
    const bool zb = wb == Weight(0);
    if (za != zb) return zb;
    const auto la = load[static_cast<std::size_t>(a)];
    const auto lb = load[static_cast<std::size_t>(b)];
    if (za) return la != lb ? la < lb : a < b;
    const Weight lhs = Weight(la) * wb;
    const Weight rhs = Weight(lb) * wa;
    return lhs != rhs ? lhs < rhs : a < b;
  };

  std::vector<std::vector<EdgeId>> trees;
  for (int i = 0; i < k; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), cheaper);
    DisjointSets dsu(static_cast<std::size_t>(g.vertex_count()));
    std::vector<EdgeId> tree;
    for (EdgeId e : order) {
      const Edge& edge = g.edge(e);
      if (dsu.unite(static_cast<std::size_t>(edge.u), static_cast<std::size_t>(edge.v))) tree.push_back(e);
    }
    for (EdgeId e : tree) ++load[static_cast<std::size_t>(e)];
    std::sort(tree.begin(), tree.end());
    trees.push_back(std::move(tree));
  }
  return trees;
}

std::vector<bool> extract_partition(const RootedTree& tree, const CutCandidate& cand) {
  std::vector<VertexId> lower;
  for (EdgeId e : cand.edges) {
    const auto v = tree.lower_endpoint(e);
    if (!v) throw CandidacyError("edge " + std::to_string(e) + " is not a tree edge");
    lower.push_back(*v);
  }
  if (lower.empty() || lower.size() > 2) throw ArgumentError("a candidate has one or two edges");

  std::vector<bool> side(static_cast<std::size_t>(tree.vertex_count()), false);
  auto mark = [&](VertexId a, bool value) {
    const Interval iv = tree.interval(a);
    for (int t = iv.lo; t <= iv.hi; ++t) side[static_cast<std::size_t>(tree.vertex_at_post(t))] = value;
  };
  if (lower.size() == 1) {
    mark(lower[0], true);
    return side;
  }
  VertexId a = lower[0];
  VertexId b = lower[1];
  if (tree.is_ancestor(b, a)) std::swap(a, b);
  mark(a, true);
  mark(b, !tree.is_ancestor(a, b));
  return side;
}

Weight boundary_weight(const Graph& g, const std::vector<bool>& side) {
  Weight total{};
  for (const Edge& e : g.edges()) {
    if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) total += e.w;
  }
  return total;
}

CutResult min_cut(const Graph& g, const PackingConfig& cfg, PipelineStats* stats) {
  require_cuttable(g);
  const auto trees = greedy_tree_packing(g, cfg);
  return min_cut_with_trees(g, trees, cfg, stats);
}

CutResult min_cut_with_trees(const Graph& g, std::span<const std::vector<EdgeId>> trees,
                             const PackingConfig& cfg, PipelineStats* stats) {
  require_cuttable(g);
  if (trees.empty()) throw ArgumentError("at least one spanning tree is required");

  struct Outcome {
    CutCandidate best;
    TwoRespectStats stats;
    std::exception_ptr error;
  };
  std::vector<Outcome> outcomes(trees.size());
  auto solve_one = [&](std::size_t i) {
    try {
      outcomes[i].best = two_respect_min(g, trees[i], cfg.backend, &outcomes[i].stats);
    } catch (...) {
      outcomes[i].error = std::current_exception();
    }
  };

  const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(cfg.threads, 1)), 1, trees.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < trees.size(); ++i) solve_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < trees.size(); i = next++) solve_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Reduction in tree order so the result does not depend on scheduling.
  std::size_t best = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].error) std::rethrow_exception(outcomes[i].error);
    if (stats) stats->two_respect += outcomes[i].stats;
    if (i > 0 && better_candidate(outcomes[i].best, outcomes[best].best)) best = i;
  }
  if (stats) stats->trees += static_cast<int>(trees.size());

  const RootedTree tree(g, trees[best], 0);
  CutResult result;
  result.value = outcomes[best].best.value;
  result.side = extract_partition(tree, outcomes[best].best);
  result.witness = outcomes[best].best;
  result.tree_index = static_cast<int>(best);
  return result;
}

CutCandidate brute_force_two_respect(const Graph& g, std::span<const EdgeId> tree_edges) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n < 2) throw StructuralError("a cut needs at least two vertices");
  if (tree_edges.size() != n - 1) throw StructuralError("tree must have n - 1 edges");

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e : tree_edges) {
    if (e < 0 || e >= g.edge_count()) throw StructuralError("tree edge id out of range");
    const Edge& edge = g.edge(e);
    adj[static_cast<std::size_t>(edge.u)].emplace_back(edge.v, e);
    adj[static_cast<std::size_t>(edge.v)].emplace_back(edge.u, e);
  }
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<EdgeId> up_edge(n, kNoEdge);
  std::vector<int> depth(n, -1);
  std::vector<VertexId> queue{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
      if (depth[static_cast<std::size_t>(y)] >= 0) continue;
      depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
      parent[static_cast<std::size_t>(y)] = x;
      up_edge[static_cast<std::size_t>(y)] = e;
      queue.push_back(y);
    }
  }
  if (queue.size() != n) throw StructuralError("tree edges do not span the graph");

  // Mark the tree path of every graph edge; a tree edge set determines the
  // cut that a graph edge crosses iff its path holds an odd number of them.
  std::vector<Weight> single(n, Weight(0));
  std::vector<Weight> both(n * n, Weight(0));
  std::vector<VertexId> path;
  for (const Edge& edge : g.edges()) {
    path.clear();
    VertexId a = edge.u;
    VertexId b = edge.v;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      path.push_back(a);
      a = parent[static_cast<std::size_t>(a)];
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      const auto pi = static_cast<std::size_t>(path[i]);
      single[pi] += edge.w;
      for (std::size_t j = i + 1; j < path.size(); ++j) {
        const auto pj = static_cast<std::size_t>(path[j]);
        both[pi * n + pj] += edge.w;
        both[pj * n + pi] += edge.w;
      }
    }
  }

  CutCandidate best;
  bool found = false;
  auto offer = [&](CutCandidate cand) {
    std::sort(cand.edges.begin(), cand.edges.end());
    if (!found || better_candidate(cand, best)) {
      best = std::move(cand);
      found = true;
    }
  };
  for (std::size_t a = 1; a < n; ++a) {
    if (parent[a] == kNoVertex) continue;
    offer({{up_edge[a]}, single[a]});
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (parent[a] == kNoVertex) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (parent[b] == kNoVertex) continue;
      offer({{up_edge[a], up_edge[b]}, single[a] + single[b] - Weight(2) * both[a * n + b]});
    }
  }
  return best;
}

CutResult stoer_wagner(const Graph& g) {
  require_cuttable(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::unordered_map<VertexId, Weight>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)][e.v] += e.w;
    adj[static_cast<std::size_t>(e.v)][e.u] += e.w;
  }
  std::vector<std::vector<VertexId>> members(n);
  for (std::size_t v = 0; v < n; ++v) members[v] = {static_cast<VertexId>(v)};
  std::vector<VertexId> live(n);
  std::iota(live.begin(), live.end(), 0);

  Weight best_value{};
  std::vector<VertexId> best_set;
  bool found = false;
  std::vector<Weight> key(n);
  std::vector<bool> added(n);

  while (live.size() > 1) {
    for (VertexId v : live) {
      key[static_cast<std::size_t>(v)] = Weight(0);
      added[static_cast<std::size_t>(v)] = false;
    }
    // Max-heap on key, smallest vertex first among equal keys.
    using Entry = std::pair<Weight, VertexId>;
    auto lower_priority = [](const Entry& a, const Entry& b) {
      return a.first != b.first ? a.first < b.first : a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(lower_priority);
    for (VertexId v : live) heap.emplace(Weight(0), v);

    VertexId prev = kNoVertex;
    VertexId last = kNoVertex;
    for (std::size_t step = 0; step < live.size(); ++step) {
      VertexId v;
      for (;;) {
        auto [k, x] = heap.top();
        heap.pop();
        if (!added[static_cast<std::size_t>(x)] && k == key[static_cast<std::size_t>(x)]) {
          v = x;
          break;
        }
      }
      added[static_cast<std::size_t>(v)] = true;
      prev = last;
      last = v;
      for (const auto& [u, w] : adj[static_cast<std::size_t>(v)]) {
        if (added[static_cast<std::size_t>(u)]) continue;
        key[static_cast<std::size_t>(u)] += w;
        heap.emplace(key[static_cast<std::size_t>(u)], u);
      }
    }

    const Weight phase = key[static_cast<std::size_t>(last)];
    if (!found || phase < best_value) {
      best_value = phase;
      best_set = members[static_cast<std::size_t>(last)];
      found = true;
    }

    auto& into = adj[static_cast<std::size_t>(prev)];
    for (const auto& [u, w] : adj[static_cast<std::size_t>(last)]) {
      auto& other = adj[static_cast<std::size_t>(u)];
      other.erase(last);
      if (u == prev) continue;
      into[u] += w;
      other[prev] += w;
    }
    adj[static_cast<std::size_t>(last)].clear();
    auto& merged = members[static_cast<std::size_t>(prev)];
    const auto& moved = members[static_cast<std::size_t>(last)];
    merged.insert(merged.end(), moved.begin(), moved.end());
    live.erase(std::find(live.begin(), live.end(), last));
  }

  CutResult result;
  result.value = best_value;
  result.side.assign(n, false);
  for (VertexId v : best_set) result.side[static_cast<std::size_t>(v)] = true;
  return result;
}

}  // namespace mincut
