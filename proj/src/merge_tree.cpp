#include "mincut/merge_tree.hpp"

#include <algorithm>
#include <numeric>

namespace mincut {

void validate_points(int n, std::span<const WeightedPoint> points);

MergeTree::MergeTree(int n, std::span<const WeightedPoint> points) : RangeIndex(n) {
  validate_points(n, points);
  const std::size_t m = points.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&points](std::size_t a, std::size_t b) {
    return std::pair(points[a].x, points[a].y) < std::pair(points[b].x, points[b].y);
  });

  xs_.resize(m);
  std::vector<int> ys(m);
  std::vector<Weight> ws(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs_[i] = points[order[i]].x;
    ys[i] = points[order[i]].y;
    ws[i] = points[order[i]].w;
  }

  auto push_level = [this](const std::vector<int>& y, const std::vector<Weight>& w) {
    std::vector<Weight> pref(w.size() + 1, Weight(0));
    for (std::size_t i = 0; i < w.size(); ++i) pref[i + 1] = pref[i] + w[i];
    ys_.push_back(y);
    pref_.push_back(std::move(pref));
  };
  push_level(ys, ws);

  // Level L + 1 merges pairs of neighbouring level-L blocks by y.
  for (std::size_t block = 1; block < m; block <<= 1) {
    std::vector<int> ny(m);
    std::vector<Weight> nw(m);
    for (std::size_t start = 0; start < m; start += 2 * block) {
      std::size_t a = start;
      const std::size_t a_end = std::min(start + block, m);
      std::size_t b = a_end;
      const std::size_t b_end = std::min(start + 2 * block, m);
      std::size_t out = start;
      while (a < a_end || b < b_end) {
        const bool take_a = b >= b_end || (a < a_end && ys[a] <= ys[b]);
        const std::size_t src = take_a ? a++ : b++;
        ny[out] = ys[src];
        nw[out] = ws[src];
        ++out;
      }
    }
    ys = std::move(ny);
    ws = std::move(nw);
    push_level(ys, ws);
  }
}

std::size_t MergeTree::stored_nodes() const {
  std::size_t nodes = 0;
  const std::size_t m = xs_.size();
  for (std::size_t level = 0; level < ys_.size(); ++level) {
    const std::size_t block = std::size_t{1} << level;
    nodes += (m + block - 1) / block;
  }
  return nodes;
}

Weight MergeTree::block_sum(std::size_t level, std::size_t begin, std::size_t end, int y1, int y2) const {
  const auto& y = ys_[level];
  const auto first = std::lower_bound(y.begin() + static_cast<std::ptrdiff_t>(begin),
                                      y.begin() + static_cast<std::ptrdiff_t>(end), y1);
  const auto last = std::upper_bound(first, y.begin() + static_cast<std::ptrdiff_t>(end), y2);
  const auto& pref = pref_[level];
  return pref[static_cast<std::size_t>(last - y.begin())] - pref[static_cast<std::size_t>(first - y.begin())];
}

Weight MergeTree::rect_sum(int x1, int x2, int y1, int y2, RangeStats* stats) const {
  if (stats) ++stats->queries;
  if (!clamp(x1, x2, y1, y2) || xs_.empty()) return Weight(0);
  std::size_t a = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), x1) - xs_.begin());
  std::size_t b = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), x2) - xs_.begin());
  Weight total(0);
  std::uint64_t visited = 0;
  for (std::size_t level = 0; a < b; ++level) {
    if (a & 1) {
      total += block_sum(level, a << level, (a + 1) << level, y1, y2);
      ++visited;
      ++a;
    }
    if (b & 1) {
      --b;
      total += block_sum(level, b << level, (b + 1) << level, y1, y2);
      ++visited;
    }
    a >>= 1;
    b >>= 1;
  }
  if (stats) stats->nodes_visited += visited;
  return total;
}

}  // namespace mincut
