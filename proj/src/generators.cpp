#include "mincut/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "mincut/errors.hpp"

namespace mincut::gen {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

VertexId pick(Rng& rng, const std::vector<VertexId>& from) {
  return from[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(from.size()) - 1))];
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

struct Relabeling {
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;
};

// Random labels for vertices, random order for edges.
Relabeling relabel(VertexId n, std::vector<Edge>& edges, Rng& rng) {
  std::vector<VertexId> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  for (Edge& e : edges) {
    e.u = label[static_cast<std::size_t>(e.u)];
    e.v = label[static_cast<std::size_t>(e.v)];
  }
  std::vector<EdgeId> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> shuffled;
  std::vector<EdgeId> new_id(edges.size());
  for (EdgeId old : order) {
    new_id[static_cast<std::size_t>(old)] = static_cast<EdgeId>(shuffled.size());
    shuffled.push_back(edges[static_cast<std::size_t>(old)]);
  }
  edges = std::move(shuffled);
  return {std::move(label), std::move(new_id)};
}

}  // namespace

Graph random_connected(VertexId n, EdgeId m, std::int64_t max_weight, std::uint64_t seed) {
  require(n >= 2, "random graph needs n >= 2");
  require(m >= n - 1, "m must be at least n - 1");
  require(max_weight >= 1, "weight bound must be positive");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (VertexId v = 1; v < n; ++v) {
    edges.push_back({static_cast<VertexId>(uniform(rng, 0, v - 1)), v, Weight(uniform(rng, 1, max_weight))});
  }
  while (static_cast<EdgeId>(edges.size()) < m) {
    const auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
    auto v = static_cast<VertexId>(uniform(rng, 0, n - 2));
    if (v >= u) ++v;
    edges.push_back({u, v, Weight(uniform(rng, 1, max_weight))});
  }
  relabel(n, edges, rng);
  return Graph(n, std::move(edges));
}

Graph cycle(VertexId n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, Weight(1)});
  return Graph(n, std::move(edges));
}

Graph dumbbell(VertexId k) {
  require(k >= 1, "dumbbell needs k >= 1");
  std::vector<Edge> edges;
  for (VertexId base : {VertexId{0}, k}) {
    for (VertexId a = 0; a < k; ++a) {
      for (VertexId b = a + 1; b < k; ++b) edges.push_back({base + a, base + b, Weight(1)});
    }
  }
  edges.push_back({k - 1, k, Weight(1)});
  return Graph(2 * k, std::move(edges));
}

Graph grid(VertexId rows, VertexId cols, std::int64_t max_weight, std::uint64_t seed) {
  require(rows >= 1 && cols >= 1 && rows * cols >= 2, "grid needs at least two cells");
  require(max_weight >= 1, "weight bound must be positive");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId r = 0; r < rows; ++r) {
    for (VertexId c = 0; c < cols; ++c) {
      const VertexId v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1, Weight(uniform(rng, 1, max_weight))});
      if (r + 1 < rows) edges.push_back({v, v + cols, Weight(uniform(rng, 1, max_weight))});
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Planted planted(VertexId n, EdgeId m, std::int64_t cut_weight, VertexId side_size,
                std::int64_t max_weight, std::uint64_t seed) {
  require(n >= 2, "planted graph needs n >= 2");
  require(side_size >= 1 && side_size < n, "side size must be in [1, n - 1]");
  require(cut_weight >= 1, "cut weight must be positive");
  require(max_weight >= 1, "weight bound must be positive");
  const bool twice = cut_weight >= 2 && side_size >= 2;
  const EdgeId min_crossing = twice ? 2 : 1;
  const EdgeId skeleton = n - 2;  // the two Hamiltonian paths
  require(m >= skeleton + min_crossing, "m too small for the planted structure");
  const EdgeId spare = m - skeleton - min_crossing;
  const bool room_inside = side_size >= 2 || n - side_size >= 2;
  const auto crossing = static_cast<EdgeId>(
      std::min<std::int64_t>(cut_weight, min_crossing + (room_inside ? spare / 10 : spare)));
  require(room_inside || crossing == m - skeleton, "cut weight too small for m crossing edges");

  Rng rng(seed);
  std::vector<VertexId> a(static_cast<std::size_t>(side_size));
  std::vector<VertexId> b(static_cast<std::size_t>(n - side_size));
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), side_size);
  auto heavy = [&] { return Weight(cut_weight + uniform(rng, 1, max_weight)); };

  std::vector<Edge> edges;
  std::vector<EdgeId> tree;
  const std::size_t split = twice ? static_cast<std::size_t>(uniform(rng, 0, side_size - 2)) : a.size();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (i != split) tree.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({a[i], a[i + 1], heavy()});
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    tree.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({b[i], b[i + 1], heavy()});
  }

  // Split cut_weight into `crossing` positive parts.
  std::set<std::int64_t> points{0, cut_weight};
  while (static_cast<EdgeId>(points.size()) < crossing + 1) points.insert(uniform(rng, 1, cut_weight - 1));
  const std::vector<std::int64_t> cuts(points.begin(), points.end());
  for (EdgeId i = 0; i < crossing; ++i) {
    const Weight w(cuts[static_cast<std::size_t>(i) + 1] - cuts[static_cast<std::size_t>(i)]);
    if (i == 0) {
      tree.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({a.front(), b.front(), w});
    } else if (i == 1 && twice) {
      tree.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({a.back(), b.back(), w});
    } else {
      edges.push_back({pick(rng, a), pick(rng, b), w});
    }
  }
  while (static_cast<EdgeId>(edges.size()) < m) {
    const bool use_a = b.size() < 2 || (a.size() >= 2 && uniform(rng, 0, n - 1) < side_size);
    const auto& part = use_a ? a : b;
    const VertexId u = pick(rng, part);
    VertexId v = pick(rng, part);
    while (v == u) v = pick(rng, part);
    edges.push_back({u, v, heavy()});
  }

  Planted out{Graph(), std::vector<bool>(static_cast<std::size_t>(n), false), {}, cut_weight};
  const Relabeling map = relabel(n, edges, rng);
  for (VertexId v : a) out.side[static_cast<std::size_t>(map.vertex[static_cast<std::size_t>(v)])] = true;
  for (EdgeId& e : tree) e = map.edge[static_cast<std::size_t>(e)];
  std::sort(tree.begin(), tree.end());
  out.tree = std::move(tree);
  out.graph = Graph(n, std::move(edges));
  return out;
}

std::vector<EdgeId> random_spanning_tree(const Graph& g, std::uint64_t seed) {
  if (!g.is_connected()) throw StructuralError("graph is disconnected");
  Rng rng(seed);
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexId> root(static_cast<std::size_t>(g.vertex_count()));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](VertexId x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<EdgeId> tree;
  for (EdgeId e : order) {
    const VertexId ru = find(g.edge(e).u);
    const VertexId rv = find(g.edge(e).v);
    if (ru == rv) continue;
    root[static_cast<std::size_t>(ru)] = rv;
    tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace mincut::gen
