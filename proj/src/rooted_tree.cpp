#include "mincut/rooted_tree.hpp"

#include <algorithm>
#include <bit>

#include "mincut/errors.hpp"

namespace mincut {

LcaIndex::LcaIndex(VertexId root, const std::vector<std::vector<VertexId>>& children,
                   const std::vector<int>& depth)
    : first_(children.size(), -1), depth_(depth) {
  std::vector<VertexId> tour;
  tour.reserve(2 * children.size());
  // (vertex, next child slot)
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  first_[static_cast<std::size_t>(root)] = 0;
  tour.push_back(root);
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    const auto& kids = children[static_cast<std::size_t>(v)];
    if (slot < kids.size()) {
      const VertexId c = kids[slot++];
      first_[static_cast<std::size_t>(c)] = static_cast<int>(tour.size());
      tour.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) tour.push_back(stack.back().first);
    }
  }

  const std::size_t len = tour.size();
  const int levels = std::bit_width(len);
  table_.assign(static_cast<std::size_t>(levels), {});
  table_[0] = std::move(tour);
  for (int k = 1; k < levels; ++k) {
    const auto& prev = table_[static_cast<std::size_t>(k - 1)];
    const std::size_t half = std::size_t{1} << (k - 1);
    auto& cur = table_[static_cast<std::size_t>(k)];
    cur.resize(len - (std::size_t{1} << k) + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = shallower(prev[i], prev[i + half]);
  }
}

VertexId LcaIndex::query(VertexId u, VertexId v) const {
  std::size_t a = static_cast<std::size_t>(first_[static_cast<std::size_t>(u)]);
  std::size_t b = static_cast<std::size_t>(first_[static_cast<std::size_t>(v)]);
  if (a > b) std::swap(a, b);
  const int k = std::bit_width(b - a + 1) - 1;
  const auto& row = table_[static_cast<std::size_t>(k)];
  return shallower(row[a], row[b + 1 - (std::size_t{1} << k)]);
}

RootedTree::RootedTree(const Graph& g, std::span<const EdgeId> tree_edges, VertexId root)
    : n_(g.vertex_count()), root_(root), tree_edges_(tree_edges.begin(), tree_edges.end()) {
  const auto n = static_cast<std::size_t>(n_);
  if (n_ < 1) throw StructuralError("empty graph");
  if (root < 0 || root >= n_) throw StructuralError("root out of range");
  if (tree_edges.size() != n - 1) {
    throw StructuralError("spanning tree needs " + std::to_string(n - 1) + " edges, got " +
                          std::to_string(tree_edges.size()));
  }

  lower_of_edge_.assign(static_cast<std::size_t>(g.edge_count()), kNoVertex);
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e : tree_edges) {
    if (e < 0 || e >= g.edge_count()) throw StructuralError("tree edge id out of range");
    if (lower_of_edge_[static_cast<std::size_t>(e)] != kNoVertex) throw StructuralError("duplicate tree edge");
    lower_of_edge_[static_cast<std::size_t>(e)] = 0;  // placeholder, fixed below
    const Edge& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, e);
    adj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, e);
  }
  std::fill(lower_of_edge_.begin(), lower_of_edge_.end(), kNoVertex);

  parent_.assign(n, kNoVertex);
  parent_edge_.assign(n, kNoEdge);
  children_.assign(n, {});
  depth_.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> order;
  order.reserve(n);
  order.push_back(root);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (const auto& [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) {
        if (e != parent_edge_[static_cast<std::size_t>(v)]) throw StructuralError("tree edges contain a cycle");
        continue;
      }
      seen[static_cast<std::size_t>(w)] = 1;
      parent_[static_cast<std::size_t>(w)] = v;
      parent_edge_[static_cast<std::size_t>(w)] = e;
      depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(v)] + 1;
      lower_of_edge_[static_cast<std::size_t>(e)] = w;
      children_[static_cast<std::size_t>(v)].push_back(w);
      order.push_back(w);
    }
  }
  if (order.size() != n) throw StructuralError("tree edges do not span the graph");
  for (auto& kids : children_) std::sort(kids.begin(), kids.end());

  // Postorder with children visited by increasing id.
  post_.assign(n, 0);
  post_low_.assign(n, 0);
  by_post_.assign(n, kNoVertex);
  int clock = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    const auto& kids = children_[static_cast<std::size_t>(v)];
    if (slot < kids.size()) {
      const VertexId c = kids[slot++];
      stack.emplace_back(c, 0);
    } else {
      const VertexId done = v;
      stack.pop_back();
      const auto d = static_cast<std::size_t>(done);
      post_[d] = ++clock;
      by_post_[static_cast<std::size_t>(clock - 1)] = done;
      post_low_[d] = kids.empty() ? post_[d] : post_low_[static_cast<std::size_t>(kids.front())];
    }
  }

  lca_ = LcaIndex(root_, children_, depth_);

  // Each edge adds w at both endpoints and removes 2w at their LCA; the
  // subtree sum of these marks is the boundary weight of the subtree.
  down_weight_.assign(n, Weight(0));
  for (const Edge& e : g.edges()) {
    down_weight_[static_cast<std::size_t>(e.u)] += e.w;
    down_weight_[static_cast<std::size_t>(e.v)] += e.w;
    down_weight_[static_cast<std::size_t>(lca_.query(e.u, e.v))] -= Weight(2) * e.w;
  }
  for (int t = 1; t <= n_; ++t) {
    const VertexId v = by_post_[static_cast<std::size_t>(t - 1)];
    if (v != root_) down_weight_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])] += down_weight_[static_cast<std::size_t>(v)];
  }
}

bool RootedTree::is_tree_edge(EdgeId e) const {
  return e >= 0 && static_cast<std::size_t>(e) < lower_of_edge_.size() &&
         lower_of_edge_[static_cast<std::size_t>(e)] != kNoVertex;
}

std::optional<VertexId> RootedTree::lower_endpoint(EdgeId e) const {
  if (!is_tree_edge(e)) return std::nullopt;
  return lower_of_edge_[static_cast<std::size_t>(e)];
}

}  // namespace mincut
