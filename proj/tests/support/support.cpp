#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mincut::testing {

namespace {

std::size_t at(VertexId v) { return static_cast<std::size_t>(v); }

std::vector<VertexId> bfs_order(const std::vector<VertexId>& parent) {
  const std::size_t n = parent.size();
  std::vector<std::vector<VertexId>> kids(n);
  for (std::size_t v = 1; v < n; ++v) kids[at(parent[v])].push_back(static_cast<VertexId>(v));
  std::vector<VertexId> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId c : kids[at(order[i])]) order.push_back(c);
  }
  return order;
}

// Sum of `value` over every subtree.
std::vector<Weight> subtree_sums(const std::vector<VertexId>& parent, const std::vector<VertexId>& order,
                                 std::vector<Weight> value) {
  for (std::size_t i = order.size(); i-- > 1;) value[at(parent[at(order[i])])] += value[at(order[i])];
  return value;
}

}  // namespace

Weight naive_rect_sum(std::span<const WeightedPoint> points, int x1, int x2, int y1, int y2) {
  Weight total{};
  for (const auto& p : points) {
    if (x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2) total += p.w;
  }
  return total;
}

std::vector<VertexId> naive_parents(const Graph& g, std::span<const EdgeId> tree_edges) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<VertexId>> adj(n);
  for (EdgeId e : tree_edges) {
    adj[at(g.edge(e).u)].push_back(g.edge(e).v);
    adj[at(g.edge(e).v)].push_back(g.edge(e).u);
  }
  std::vector<VertexId> parent(n, -2);
  parent[0] = -1;
  std::vector<VertexId> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (VertexId y : adj[at(queue[i])]) {
      if (parent[at(y)] != -2) continue;
      parent[at(y)] = queue[i];
      queue.push_back(y);
    }
  }
  if (queue.size() != n) throw std::logic_error("not a spanning tree");
  return parent;
}

bool naive_is_ancestor(const std::vector<VertexId>& parent, VertexId a, VertexId b) {
  for (VertexId x = b; x != -1; x = parent[at(x)]) {
    if (x == a) return true;
  }
  return false;
}

std::vector<bool> naive_subtree(const std::vector<VertexId>& parent, VertexId v) {
  std::vector<bool> in(parent.size());
  for (std::size_t x = 0; x < parent.size(); ++x) in[x] = naive_is_ancestor(parent, v, static_cast<VertexId>(x));
  return in;
}

Weight naive_boundary(const Graph& g, const std::vector<bool>& side) {
  Weight total{};
  for (const Edge& e : g.edges()) {
    if (side[at(e.u)] != side[at(e.v)]) total += e.w;
  }
  return total;
}

NaiveFrontier naive_frontiers(const Graph& g, std::span<const EdgeId> tree_edges) {
  const auto parent = naive_parents(g, tree_edges);
  const auto order = bfs_order(parent);
  const std::size_t n = parent.size();
  std::vector<int> depth(n, 0);
  for (std::size_t i = 1; i < order.size(); ++i) depth[at(order[i])] = depth[at(parent[at(order[i])])] + 1;

  NaiveFrontier out;
  out.cross_end.assign(n, kNoVertex);
  out.down_end.assign(n, kNoVertex);

  // Deepest member of `set`, or the fallback; clears paths_ok unless `set`
  // is exactly the part of the root path to that member selected by `eligible`.
  auto finish = [&](const std::vector<bool>& set, auto eligible, VertexId fallback) {
    VertexId deepest = kNoVertex;
    for (std::size_t f = 0; f < n; ++f) {
      if (set[f] && (deepest == kNoVertex || depth[f] > depth[at(deepest)])) deepest = static_cast<VertexId>(f);
    }
    if (deepest == kNoVertex) return fallback;
    for (std::size_t f = 1; f < n; ++f) {
      const bool on_path = naive_is_ancestor(parent, static_cast<VertexId>(f), deepest) && eligible(f);
      if (on_path != static_cast<bool>(set[f])) out.paths_ok = false;
    }
    return deepest;
  };

  for (VertexId v = 1; v < static_cast<VertexId>(n); ++v) {
    const auto inside = naive_subtree(parent, v);
    const Weight wv = naive_boundary(g, inside);
    std::vector<Weight> into(n, Weight(0));
    std::vector<Weight> from(n, Weight(0));
    for (const Edge& e : g.edges()) {
      if (inside[at(e.u)] == inside[at(e.v)]) continue;
      const VertexId in = inside[at(e.u)] ? e.u : e.v;
      const VertexId outv = inside[at(e.u)] ? e.v : e.u;
      into[at(outv)] += e.w;
      from[at(in)] += e.w;
    }
    const auto into_sum = subtree_sums(parent, order, into);
    const auto from_sum = subtree_sums(parent, order, from);

    auto independent = [&](std::size_t f) {
      return !inside[f] && !naive_is_ancestor(parent, static_cast<VertexId>(f), v);
    };
    auto strictly_below = [&](std::size_t f) { return inside[f] && f != at(v); };
    std::vector<bool> cross(n, false);
    std::vector<bool> down(n, false);
    for (std::size_t f = 1; f < n; ++f) {
      if (independent(f)) cross[f] = wv < Weight(2) * into_sum[f];
      if (strictly_below(f)) down[f] = wv < Weight(2) * from_sum[f];
    }
    out.cross_end[at(v)] = finish(cross, independent, parent[at(v)]);
    out.down_end[at(v)] = finish(down, strictly_below, parent[at(v)]);
  }
  return out;
}

int crossing_count(const Graph& g, std::span<const EdgeId> tree_edges, const std::vector<bool>& side) {
  int count = 0;
  for (EdgeId e : tree_edges) count += side[at(g.edge(e).u)] != side[at(g.edge(e).v)] ? 1 : 0;
  return count;
}

std::optional<std::vector<EdgeId>> twice_crossing_tree(const Graph& g, const std::vector<bool>& side,
                                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  auto crossing = [&](EdgeId e) { return side[at(g.edge(e).u)] != side[at(g.edge(e).v)]; };
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::stable_partition(order.begin(), order.end(), [&](EdgeId e) { return !crossing(e); });

  // Kruskal over `edges` minus `skip`; returns the forest and component labels.
  auto kruskal = [&](const std::vector<EdgeId>& edges, EdgeId skip, std::vector<std::size_t>& root) {
    root.resize(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::vector<EdgeId> forest;
    for (EdgeId e : edges) {
      if (e == skip) continue;
      const std::size_t a = find(at(g.edge(e).u));
      const std::size_t b = find(at(g.edge(e).v));
      if (a == b) continue;
      root[a] = b;
      forest.push_back(e);
    }
    for (std::size_t x = 0; x < n; ++x) root[x] = find(x);
    return forest;
  };

  std::vector<std::size_t> comp;
  const auto tree = kruskal(order, kNoEdge, comp);
  if (tree.size() + 1 != n) return std::nullopt;
  std::vector<EdgeId> internal;
  for (EdgeId e : tree) {
    if (!crossing(e)) internal.push_back(e);
  }
  std::shuffle(internal.begin(), internal.end(), rng);
  for (EdgeId cut : internal) {
    const auto forest = kruskal(tree, cut, comp);
    for (EdgeId e : order) {
      if (!crossing(e) || comp[at(g.edge(e).u)] == comp[at(g.edge(e).v)]) continue;
      if (std::find(tree.begin(), tree.end(), e) != tree.end()) continue;
      auto out = forest;
      out.push_back(e);
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return std::nullopt;
}

Weight exhaustive_min_cut(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n < 2 || n > 20) throw std::logic_error("exhaustive_min_cut needs 2 <= n <= 20");
  Weight best{};
  bool found = false;
  std::vector<bool> side(n);
  // Vertex n - 1 always stays outside S.
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    for (std::size_t v = 0; v < n; ++v) side[v] = (mask >> v) & 1u;
    const Weight w = naive_boundary(g, side);
    if (!found || w < best) {
      best = w;
      found = true;
    }
  }
  return best;
}

}  // namespace mincut::testing
