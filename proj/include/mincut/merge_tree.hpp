#pragma once

#include <vector>

#include "mincut/range_index.hpp"

namespace mincut {

/*
 * Merge-sort tree. Points are sorted by x; level L groups them into blocks of
 * 2^L consecutive points and keeps each block sorted by y together with a
 * running prefix sum of weights. A query splits the x-range into O(log m)
 * blocks and binary-searches the y-range inside each: O(log^2 m).
 */
class MergeTree final : public RangeIndex {
 public:
  MergeTree(int n, std::span<const WeightedPoint> points);

  Weight rect_sum(int x1, int x2, int y1, int y2, RangeStats* stats = nullptr) const override;
  BackendKind kind() const override { return BackendKind::kMergeTree; }
  std::size_t stored_nodes() const override;

 private:
  Weight block_sum(std::size_t level, std::size_t begin, std::size_t end, int y1, int y2) const;

  std::vector<int> xs_;
  std::vector<std::vector<int>> ys_;       // per level, m entries
  std::vector<std::vector<Weight>> pref_;  // per level, m + 1 entries
};

}  // namespace mincut
