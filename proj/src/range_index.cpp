#include "mincut/range_index.hpp"

#include <algorithm>

#include "mincut/errors.hpp"
#include "mincut/grid_fanout.hpp"
#include "mincut/merge_tree.hpp"

namespace mincut {

std::string to_string(BackendKind kind) {
  return kind == BackendKind::kMergeTree ? "merge" : "grid";
}

BackendKind parse_backend(const std::string& name) {
  if (name == "merge" || name == "merge-tree") return BackendKind::kMergeTree;
  if (name == "grid" || name == "grid-fanout") return BackendKind::kGridFanout;
  throw ArgumentError("unknown backend '" + name + "'");
}

bool RangeIndex::clamp(int& x1, int& x2, int& y1, int& y2) const {
  for (int c : {x1, x2, y1, y2}) {
    if (c < 0 || c > n_ + 1) throw ArgumentError("rectangle bound outside [0, n + 1]");
  }
  x1 = std::max(x1, 1);
  y1 = std::max(y1, 1);
  x2 = std::min(x2, n_);
  y2 = std::min(y2, n_);
  return x1 <= x2 && y1 <= y2;
}

std::unique_ptr<RangeIndex> build_merge_tree(int n, std::span<const WeightedPoint> points) {
  return std::make_unique<MergeTree>(n, points);
}

std::unique_ptr<RangeIndex> build_grid_fanout(int n, std::span<const WeightedPoint> points, double epsilon) {
  return std::make_unique<GridFanout>(n, points, epsilon);
}

std::unique_ptr<RangeIndex> build_range_index(int n, std::span<const WeightedPoint> points,
                                              const BackendConfig& config) {
  if (config.kind == BackendKind::kGridFanout) return build_grid_fanout(n, points, config.epsilon);
  return build_merge_tree(n, points);
}

void validate_points(int n, std::span<const WeightedPoint> points) {
  for (const auto& p : points) {
    if (p.x < 1 || p.x > n || p.y < 1 || p.y > n) throw ArgumentError("point outside the grid");
    if (p.w < Weight(0)) throw ArgumentError("negative point weight");
  }
}

}  // namespace mincut
