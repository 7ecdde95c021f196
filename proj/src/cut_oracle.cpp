#include "mincut/cut_oracle.hpp"

#include "mincut/errors.hpp"

namespace mincut {

namespace {

std::vector<WeightedPoint> edge_points(const Graph& g, const RootedTree& tree) {
  std::vector<WeightedPoint> pts;
  pts.reserve(2 * static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    const int pu = tree.post(e.u);
    const int pv = tree.post(e.v);
    pts.push_back({pu, pv, e.w});
    pts.push_back({pv, pu, e.w});
  }
  return pts;
}

}  // namespace

CutOracle::CutOracle(const Graph& g, const RootedTree& tree, const BackendConfig& backend) : tree_(tree) {
  const auto pts = edge_points(g, tree);
  index_ = build_range_index(g.vertex_count(), pts, backend);
}

Weight CutOracle::rect(int x1, int x2, int y1, int y2) const {
  if (x1 > x2 || y1 > y2) return Weight(0);
  RangeStats st;
  Weight w = index_->rect_sum(x1, x2, y1, y2, &st);
  rect_queries_.fetch_add(st.queries, std::memory_order_relaxed);
  nodes_visited_.fetch_add(st.nodes_visited, std::memory_order_relaxed);
  return w;
}

Weight CutOracle::between(const Interval& a, const Interval& b) const { return rect(a.lo, a.hi, b.lo, b.hi); }

Weight CutOracle::leaving(const Interval& inner, const Interval& outer) const {
  return rect(inner.lo, inner.hi, 1, outer.lo - 1) + rect(inner.lo, inner.hi, outer.hi + 1, tree_.vertex_count());
}

Weight CutOracle::into_rest(const Interval& inner, const Interval& outer) const {
  return rect(inner.lo, inner.hi, outer.lo, inner.lo - 1) + rect(inner.lo, inner.hi, inner.hi + 1, outer.hi);
}

Weight CutOracle::boundary(const Interval& iv) const { return leaving(iv, iv); }

Weight CutOracle::cut_value_at(VertexId a, VertexId b) const {
  if (a == b) throw ArgumentError("cut_value needs two distinct tree edges");
  const Interval ia = tree_.interval(a);
  const Interval ib = tree_.interval(b);
  const Weight& wa = tree_.down_weight(a);
  const Weight& wb = tree_.down_weight(b);
  if (ia.disjoint(ib)) return wa + wb - Weight(2) * between(ia, ib);
  if (ia.contains(ib)) return wa + wb - Weight(2) * leaving(ib, ia);
  return wa + wb - Weight(2) * leaving(ia, ib);
}

VertexId CutOracle::lower_or_throw(EdgeId e) const {
  const auto v = tree_.lower_endpoint(e);
  if (!v) throw CandidacyError("edge " + std::to_string(e) + " is not a tree edge");
  return *v;
}

Weight CutOracle::cut_one(EdgeId e) const { return tree_.down_weight(lower_or_throw(e)); }

Weight CutOracle::cut_value(EdgeId e, EdgeId f) const {
  if (e == f) throw ArgumentError("cut_value needs two distinct tree edges");
  return cut_value_at(lower_or_throw(e), lower_or_throw(f));
}

bool CutOracle::is_cross_interested(EdgeId e, EdgeId f) const {
  const VertexId u = lower_or_throw(e);
  const VertexId v = lower_or_throw(f);
  if (u == v) throw ArgumentError("an edge is not cross-interested in itself");
  if (tree_.is_ancestor(v, u)) return true;
  if (tree_.is_ancestor(u, v)) throw ArgumentError("cross-interest is undefined towards descendants");
  return tree_.down_weight(u) < Weight(2) * between(tree_.interval(u), tree_.interval(v));
}

bool CutOracle::is_down_interested(EdgeId e, EdgeId f) const {
  const VertexId u = lower_or_throw(e);
  const VertexId v = lower_or_throw(f);
  if (u == v) throw ArgumentError("an edge is not down-interested in itself");
  if (tree_.is_ancestor(v, u)) return true;
  if (!tree_.is_ancestor(u, v)) throw ArgumentError("down-interest is undefined between independent edges");
  return tree_.down_weight(u) < Weight(2) * leaving(tree_.interval(v), tree_.interval(u));
}

OracleStats CutOracle::stats() const {
  return {rect_queries_.load(std::memory_order_relaxed), nodes_visited_.load(std::memory_order_relaxed)};
}

void CutOracle::reset_stats() const {
  rect_queries_.store(0, std::memory_order_relaxed);
  nodes_visited_.store(0, std::memory_order_relaxed);
}

}  // namespace mincut
