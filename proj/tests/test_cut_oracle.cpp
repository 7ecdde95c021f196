#include <doctest.h>

#include "mincut/cut_oracle.hpp"
#include "mincut/errors.hpp"
#include "mincut/generators.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

std::vector<bool> symmetric_difference(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] != b[i];
  return out;
}

Weight between_sets(const Graph& g, const std::vector<bool>& a, const std::vector<bool>& b) {
  Weight total{};
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if ((a[u] && b[v]) || (a[v] && b[u])) total += e.w;
  }
  return total;
}

}  // namespace

TEST_CASE("cut values of all tree edge pairs match boundary recomputation") {
  for (BackendKind kind : {BackendKind::kMergeTree, BackendKind::kGridFanout}) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const auto n = static_cast<VertexId>(3 + seed * 3);
      const Graph g = gen::random_connected(n, 3 * n, 20, seed);
      const auto edges = gen::random_spanning_tree(g, seed);
      const RootedTree tree(g, edges);
      const CutOracle oracle(g, tree, {kind, 0.3});
      const auto parent = testing::naive_parents(g, edges);
      for (VertexId a = 1; a < n; ++a) {
        const auto sa = testing::naive_subtree(parent, a);
        const EdgeId ea = tree.parent_edge(a);
        CHECK(oracle.cut_one(ea) == testing::naive_boundary(g, sa));
        for (VertexId b = 1; b < n; ++b) {
          if (a == b) continue;
          const auto sb = testing::naive_subtree(parent, b);
          // The cut determined by {e, f} is the symmetric difference of the
          // two subtrees, whichever way they relate.
          const Weight expected = testing::naive_boundary(g, symmetric_difference(sa, sb));
          CHECK(oracle.cut_value(ea, tree.parent_edge(b)) == expected);
          CHECK(oracle.cut_value_at(a, b) == expected);
        }
      }
    }
  }
}

TEST_CASE("interest predicates follow their definitions") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto n = static_cast<VertexId>(4 + seed * 2);
    const Graph g = gen::random_connected(n, 2 * n, 9, seed);
    const auto edges = gen::random_spanning_tree(g, seed + 50);
    const RootedTree tree(g, edges);
    const CutOracle oracle(g, tree);
    const auto parent = testing::naive_parents(g, edges);
    for (VertexId a = 1; a < n; ++a) {
      const auto sa = testing::naive_subtree(parent, a);
      const Weight wa = testing::naive_boundary(g, sa);
      std::vector<bool> rest(sa.size());
      for (std::size_t i = 0; i < sa.size(); ++i) rest[i] = !sa[i];
      for (VertexId b = 1; b < n; ++b) {
        const auto sb = testing::naive_subtree(parent, b);
        const EdgeId ea = tree.parent_edge(a);
        const EdgeId eb = tree.parent_edge(b);
        if (a == b) {
          CHECK_THROWS_AS(oracle.is_cross_interested(ea, eb), ArgumentError);
          CHECK_THROWS_AS(oracle.is_down_interested(ea, eb), ArgumentError);
        } else if (testing::naive_is_ancestor(parent, b, a)) {
          CHECK(oracle.is_cross_interested(ea, eb));
          CHECK(oracle.is_down_interested(ea, eb));
        } else if (testing::naive_is_ancestor(parent, a, b)) {
          CHECK_THROWS_AS(oracle.is_cross_interested(ea, eb), ArgumentError);
          CHECK(oracle.is_down_interested(ea, eb) == (wa < Weight(2) * between_sets(g, sb, rest)));
        } else {
          CHECK(oracle.is_cross_interested(ea, eb) == (wa < Weight(2) * between_sets(g, sa, sb)));
          CHECK_THROWS_AS(oracle.is_down_interested(ea, eb), ArgumentError);
        }
      }
    }
  }
}

TEST_CASE("interval primitives") {
  // Path 0 - 1 - 2 - 3 plus chords; rooted at 0 the postorder is 3, 2, 1, 0.
  const Graph g(4, {{0, 1, Weight(1)}, {1, 2, Weight(2)}, {2, 3, Weight(4)}, {0, 3, Weight(8)}, {1, 3, Weight(16)}});
  const std::vector<EdgeId> edges{0, 1, 2};
  const RootedTree tree(g, edges);
  const CutOracle oracle(g, tree);
  const Interval v3 = tree.interval(3);
  const Interval v1 = tree.interval(1);
  CHECK(oracle.boundary(v3) == Weight(4 + 8 + 16));
  CHECK(oracle.leaving(v3, v1) == Weight(8));
  CHECK(oracle.into_rest(v3, v1) == Weight(4 + 16));
  CHECK(oracle.between(v3, Interval{4, 4}) == Weight(8));
  CHECK(oracle.cut_one(2) == Weight(28));
  CHECK(oracle.cut_value(0, 2) == Weight(1 + 4 + 16));
}

TEST_CASE("oracle rejects invalid candidates") {
  const Graph g = gen::cycle(4);
  const RootedTree tree(g, std::vector<EdgeId>{0, 1, 2});
  const CutOracle oracle(g, tree);
  CHECK_THROWS_AS(oracle.cut_one(3), CandidacyError);
  CHECK_THROWS_AS(oracle.cut_value(0, 3), CandidacyError);
  CHECK_THROWS_AS(oracle.cut_value(1, 1), ArgumentError);
}

TEST_CASE("query counters") {
  const Graph g = gen::random_connected(30, 90, 5, 1);
  const RootedTree tree(g, gen::random_spanning_tree(g, 1));
  const CutOracle oracle(g, tree);
  oracle.reset_stats();
  oracle.cut_value_at(1, 2);
  CHECK(oracle.stats().rect_queries >= 1);
  CHECK(oracle.stats().rect_queries <= 2);
  oracle.reset_stats();
  CHECK(oracle.stats().rect_queries == 0);
  CHECK(oracle.index().kind() == BackendKind::kMergeTree);
}
