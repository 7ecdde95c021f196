#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mincut/weight.hpp"

namespace mincut {

struct WeightedPoint {
  int x;
  int y;
  Weight w;
};

enum class BackendKind { kMergeTree, kGridFanout };

struct BackendConfig {
  BackendKind kind = BackendKind::kMergeTree;
  double epsilon = 0.25;  // grid fan-out only, in (0, 1)
};

std::string to_string(BackendKind kind);
// "merge" / "grid" (also the long names). Throws ArgumentError.
BackendKind parse_backend(const std::string& name);

// Per-handle instrumentation. Never shared between threads by the index itself.
struct RangeStats {
  std::uint64_t queries = 0;        // rect_sum calls
  std::uint64_t nodes_visited = 0;  // structure nodes inspected
  std::uint64_t sub_queries = 0;    // backend-specific inner queries
};

/*
 * Weighted 2D orthogonal range counting over the grid [1, n] x [1, n].
 * rect_sum returns the exact total weight of the points inside the closed
 * rectangle [x1, x2] x [y1, y2]. Empty ranges (x1 > x2 or y1 > y2) give 0.
 * Bounds must lie in [0, n + 1]; anything further out throws ArgumentError.
 */
class RangeIndex {
 public:
  virtual ~RangeIndex() = default;

  virtual Weight rect_sum(int x1, int x2, int y1, int y2, RangeStats* stats = nullptr) const = 0;
  virtual BackendKind kind() const = 0;
  // Number of nodes the structure materialises.
  virtual std::size_t stored_nodes() const = 0;

  int grid_size() const { return n_; }

 protected:
  explicit RangeIndex(int n) : n_(n) {}
  // Returns false if the rectangle is empty after clamping to the grid.
  bool clamp(int& x1, int& x2, int& y1, int& y2) const;

  int n_;
};

// Throws ArgumentError if a point lies outside [1, n] x [1, n] or a weight is
// negative.
std::unique_ptr<RangeIndex> build_merge_tree(int n, std::span<const WeightedPoint> points);
// Throws ArgumentError also when epsilon is not in (0, 1).
std::unique_ptr<RangeIndex> build_grid_fanout(int n, std::span<const WeightedPoint> points,
                                              double epsilon);
std::unique_ptr<RangeIndex> build_range_index(int n, std::span<const WeightedPoint> points,
                                              const BackendConfig& config);

}  // namespace mincut
