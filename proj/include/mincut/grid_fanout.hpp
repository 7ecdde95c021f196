#pragma once

#include <cstdint>
#include <vector>

#include "mincut/range_index.hpp"

namespace mincut {

/*
 * Fan-out range structure over the [1, n] x [1, n] grid with branching factor
 * B = ceil(n^eps) and depth D = ceil(log_B n).
 *
 * The outer tree is the complete B-ary tree over y restricted to the subtree
 * induced by the points' y coordinates; each of its nodes owns a 1D structure
 * (the same induced B-ary tree, over x) of the points in its y-range. Induced
 * trees are stored path-compressed: a node is kept only if it is a leaf or
 * has at least two non-empty children, so a 1D structure over s distinct keys
 * has fewer than 2s nodes.
 *
 * dominance_sum answers [x, n] x [y, n] by descending the outer tree and
 * scanning children right to left: fully covered children are answered by a
 * suffix query on their 1D structure, the (single) partially covered child is
 * descended into. Each 1D suffix query works the same way. General rectangles
 * are four dominance queries by inclusion-exclusion.
 */
class GridFanout final : public RangeIndex {
 public:
  GridFanout(int n, std::span<const WeightedPoint> points, double epsilon);

  Weight rect_sum(int x1, int x2, int y1, int y2, RangeStats* stats = nullptr) const override;
  BackendKind kind() const override { return BackendKind::kGridFanout; }
  std::size_t stored_nodes() const override { return outer_.size() + inner_.size(); }

  // Total weight in [x, n] x [y, n]; x, y in [1, n + 1].
  Weight dominance_sum(int x, int y, RangeStats* stats = nullptr) const;

  int branching() const { return static_cast<int>(branching_); }
  int depth() const { return depth_; }
  double epsilon() const { return epsilon_; }
  // Number of outer nodes a point is stored at, maximised over points.
  int max_copies_per_point() const { return max_copies_; }

 private:
  struct Node {
    std::int64_t lo;  // leaf range covered, 0-based
    std::int64_t hi;
    Weight sum;
    std::int32_t first_child;
    std::int32_t child_count;
    std::int32_t inner_root;  // outer nodes only: root of the 1D structure
  };

  // 0-based grid point
  struct Item {
    std::int64_t x;
    std::int64_t y;
    Weight w;
  };

  void fill_inner(std::int32_t slot, std::span<const Item> by_x, int level, std::int64_t lo);
  void fill_outer(std::int32_t slot, std::span<const Item> by_y, std::vector<Item> by_x, int level,
                  std::int64_t lo, int copies);
  std::int32_t make_inner(std::span<const Item> by_x);
  std::int64_t span_at(int level) const { return spans_[static_cast<std::size_t>(level)]; }
  Weight suffix_sum(std::int32_t root, std::int64_t x0, RangeStats* stats) const;

  double epsilon_;
  std::int64_t branching_;
  int depth_;
  std::vector<std::int64_t> spans_;  // B^(D - level)
  int max_copies_ = 0;
  std::int32_t outer_root_ = -1;
  std::vector<Node> outer_;
  std::vector<Node> inner_;
};

}  // namespace mincut
