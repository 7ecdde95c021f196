#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mincut/errors.hpp"
#include "mincut/generators.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/two_respect.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

struct Instance {
  Graph g;
  std::vector<EdgeId> tree;
};

Instance random_instance(VertexId n, EdgeId m, std::uint64_t seed, std::int64_t max_w = 100) {
  Graph g = gen::random_connected(n, m, max_w, seed);
  auto tree = gen::random_spanning_tree(g, seed * 7 + 1);
  return {std::move(g), std::move(tree)};
}

Graph path_graph(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, Weight(1)});
  return Graph(n, edges);
}

std::vector<EdgeId> all_edges(const Graph& g) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) ids[static_cast<std::size_t>(e)] = e;
  return ids;
}

}  // namespace

TEST_CASE("cycle of four with a path tree has minimum 2") {
  const Graph g = gen::cycle(4);
  const std::vector<EdgeId> tree{0, 1, 2};
  const CutCandidate c = two_respect_min(g, tree);
  CHECK(c.value == Weight(2));
  CHECK(brute_force_two_respect(g, tree).value == Weight(2));
}

TEST_CASE("single edge graph returns its weight") {
  const Graph g(2, {{0, 1, Weight(7)}});
  const std::vector<EdgeId> tree{0};
  const CutCandidate c = two_respect_min(g, tree);
  CHECK(c.value == Weight(7));
  CHECK(c.edges == std::vector<EdgeId>{0});
}

TEST_CASE("a lone vertex has no cut") {
  const Graph g(1, {});
  CHECK_THROWS_AS(two_respect_min(g, std::vector<EdgeId>{}), StructuralError);
}

TEST_CASE("non-spanning tree is rejected") {
  const Graph g = gen::cycle(5);
  CHECK_THROWS_AS(two_respect_min(g, std::vector<EdgeId>{0, 1, 2}), StructuralError);
  CHECK_THROWS_AS(two_respect_min(g, std::vector<EdgeId>{0, 1, 2, 2}), StructuralError);
}

TEST_CASE("two-respecting minimum matches brute force on random instances") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto n = static_cast<VertexId>(4 + seed % 45);
    const auto m = static_cast<EdgeId>(std::min<std::int64_t>(n - 1 + static_cast<std::int64_t>(seed * 13 % 200), 400));
    const Instance in = random_instance(n, m, seed);
    const CutCandidate brute = brute_force_two_respect(in.g, in.tree);
    for (BackendKind kind : {BackendKind::kMergeTree, BackendKind::kGridFanout}) {
      const CutCandidate fast = two_respect_min(in.g, in.tree, {kind, 0.25});
      INFO("seed " << seed << " backend " << to_string(kind));
      REQUIRE(fast.value == brute.value);
      const RootedTree tree(in.g, in.tree);
      CHECK(testing::naive_boundary(in.g, extract_partition(tree, fast)) == fast.value);
    }
  }
}

TEST_CASE("small weights and star trees produce many ties") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto n = static_cast<VertexId>(3 + seed % 20);
    const Graph g = gen::random_connected(n, n - 1 + static_cast<EdgeId>(seed % 30), 2, seed);
    const auto tree = gen::random_spanning_tree(g, seed);
    INFO("seed " << seed);
    CHECK(two_respect_min(g, tree).value == brute_force_two_respect(g, tree).value);
  }
}

TEST_CASE("a path graph is its own tree") {
  const Graph g = path_graph(9);
  const auto tree = all_edges(g);
  const CutCandidate c = two_respect_min(g, tree);
  CHECK(c.value == Weight(1));
  CHECK(c.edges == std::vector<EdgeId>{0});
}

TEST_CASE("interest frontiers match the definitions") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto n = static_cast<VertexId>(2 + seed % 60);
    const Instance in = random_instance(n, n - 1 + static_cast<EdgeId>(seed * 5 % 150), seed, 1 + seed % 50);
    const TwoRespectSolver solver(in.g, in.tree);
    const InterestFrontier f = solver.frontiers();
    const testing::NaiveFrontier naive = testing::naive_frontiers(in.g, in.tree);
    INFO("seed " << seed);
    CHECK(naive.paths_ok);
    for (VertexId v = 1; v < n; ++v) {
      CHECK(f.cross_end[static_cast<std::size_t>(v)] == naive.cross_end[static_cast<std::size_t>(v)]);
      CHECK(f.down_end[static_cast<std::size_t>(v)] == naive.down_end[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("frontier search costs O(log^2 n) rectangle queries per edge") {
  const Instance in = random_instance(1024, 8000, 5);
  const TwoRespectSolver solver(in.g, in.tree);
  TwoRespectStats stats;
  solver.frontiers(&stats);
  const double lg = std::log2(1024.0);
  // Two descents per edge, each visiting at most centroid-depth levels with
  // at most three predicates of at most four rectangles.
  CHECK(stats.frontier_predicates <= static_cast<std::uint64_t>(1023 * 2 * 3 * (2 * lg + 2)));
  CHECK(stats.frontier_rect_queries <= 4 * stats.frontier_predicates);
}

TEST_CASE("interesting pair lists are sorted and bounded") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto n = static_cast<VertexId>(20 + seed * 3);
    const Instance in = random_instance(n, 4 * n, seed);
    const TwoRespectSolver solver(in.g, in.tree);
    const auto pairs = solver.pairs(solver.frontiers());
    const auto& hpd = solver.heavy_paths();
    std::uint64_t total = 0;
    for (const auto& p : pairs) {
      CHECK(p.p < p.q);
      auto by_index = [&](VertexId a, VertexId b) { return hpd.position(a).index < hpd.position(b).index; };
      CHECK(std::is_sorted(p.p_edges.begin(), p.p_edges.end(), by_index));
      CHECK(std::is_sorted(p.q_edges.begin(), p.q_edges.end(), by_index));
      for (VertexId v : p.p_edges) CHECK(hpd.position(v).path == p.p);
      for (VertexId v : p.q_edges) CHECK(hpd.position(v).path == p.q);
      total += p.p_edges.size() + p.q_edges.size();
    }
    const auto lg = static_cast<std::uint64_t>(std::floor(std::log2(static_cast<double>(n))));
    CHECK(total <= 2 * static_cast<std::uint64_t>(n) * (lg + 1));
  }
}

TEST_CASE("pair blocks satisfy the inverse Monge inequality") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance in = random_instance(40, 160, seed, 3);
    const TwoRespectSolver solver(in.g, in.tree);
    const auto& oracle = solver.oracle();
    for (const auto& pair : solver.pairs(solver.frontiers())) {
      for (const auto& block : orient_pair(pair, solver.heavy_paths(), solver.tree())) {
        for (std::size_t i = 0; i + 1 < block.rows.size(); ++i) {
          for (std::size_t j = 0; j + 1 < block.cols.size(); ++j) {
            auto m = [&](std::size_t a, std::size_t b) { return oracle.cut_value_at(block.rows[a], block.cols[b]); };
            CHECK(m(i, j) - m(i, j + 1) >= m(i + 1, j) - m(i + 1, j + 1));
          }
        }
      }
    }
  }
}

TEST_CASE("same-path minimum matches a scan of the path") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance in = random_instance(60, 200, seed);
    const TwoRespectSolver solver(in.g, in.tree);
    for (const auto& path : solver.heavy_paths().paths()) {
      const auto found = same_path_min(path, solver.oracle());
      if (path.edges.size() < 2) {
        CHECK_FALSE(found.has_value());
        continue;
      }
      Weight best{};
      bool any = false;
      for (std::size_t i = 0; i < path.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < path.edges.size(); ++j) {
          const Weight w = solver.oracle().cut_value_at(path.edges[i], path.edges[j]);
          if (!any || w < best) best = w;
          any = true;
        }
      }
      REQUIRE(found.has_value());
      CHECK(found->value == best);
    }
  }
}

TEST_CASE("SMAWK calls stay within eight evaluations per row and column") {
  TwoRespectStats total;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance in = random_instance(64, 500, seed, 1 + seed % 4);
    TwoRespectStats stats;
    two_respect_min(in.g, in.tree, {}, &stats);
    total += stats;
  }
  CHECK(total.smawk_max_ratio_violations == 0);
  CHECK(total.smawk_evaluations <= 8 * total.smawk_dimension_sum);
  CHECK(total.smawk_evaluations <= 8 * total.pair_list_total);
}

TEST_CASE("candidate preference is value, then size, then edge ids") {
  const CutCandidate a{{3}, Weight(5)};
  const CutCandidate b{{1, 2}, Weight(5)};
  const CutCandidate c{{1, 4}, Weight(5)};
  const CutCandidate d{{9}, Weight(4)};
  CHECK(better_candidate(a, b));
  CHECK(better_candidate(b, c));
  CHECK(better_candidate(d, a));
  CHECK_FALSE(better_candidate(a, a));
}

TEST_CASE("planted cuts are found on trees crossing them twice") {
  int twice = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto n = static_cast<VertexId>(6 + seed % 40);
    const auto p = gen::planted(n, 3 * n, 2 + static_cast<std::int64_t>(seed % 25), 2 + static_cast<VertexId>(seed % (n - 3)),
                                30, seed);
    const auto tree = testing::twice_crossing_tree(p.graph, p.side, seed);
    if (!tree) continue;
    ++twice;
    INFO("seed " << seed);
    REQUIRE(testing::crossing_count(p.graph, *tree, p.side) == 2);
    const CutCandidate c = two_respect_min(p.graph, *tree);
    CHECK(c.value == Weight(p.cut_weight));
    CHECK(c.value == brute_force_two_respect(p.graph, *tree).value);
  }
  CHECK(twice >= 150);
}

TEST_CASE("companion trees of planted graphs recover the planted cut") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto n = static_cast<VertexId>(4 + seed % 60);
    const auto p = gen::planted(n, 2 * n + 10, 1 + static_cast<std::int64_t>(seed % 40),
                                1 + static_cast<VertexId>(seed % (n - 1)), 10, seed);
    INFO("seed " << seed);
    const CutCandidate c = two_respect_min(p.graph, p.tree);
    CHECK(c.value == Weight(p.cut_weight));
    const RootedTree tree(p.graph, p.tree);
    const auto side = extract_partition(tree, c);
    const bool same = side == p.side;
    std::vector<bool> flipped(side.size());
    for (std::size_t i = 0; i < side.size(); ++i) flipped[i] = !side[i];
    CHECK((same || flipped == p.side));
  }
}
