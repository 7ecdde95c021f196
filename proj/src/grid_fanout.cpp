#include "mincut/grid_fanout.hpp"

#include <algorithm>
#include <cmath>

#include "mincut/errors.hpp"

namespace mincut {

void validate_points(int n, std::span<const WeightedPoint> points);

GridFanout::GridFanout(int n, std::span<const WeightedPoint> points, double epsilon)
    : RangeIndex(n), epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ArgumentError("epsilon must lie in (0, 1)");
  if (n < 1) throw ArgumentError("grid size must be positive");
  validate_points(n, points);

  branching_ = std::max<std::int64_t>(
      2, static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(n), epsilon) - 1e-9)));
  depth_ = 0;
  for (std::int64_t reach = 1; reach < n; reach *= branching_) ++depth_;
  spans_.assign(static_cast<std::size_t>(depth_) + 1, 1);
  for (int level = depth_ - 1; level >= 0; --level) {
    spans_[static_cast<std::size_t>(level)] = spans_[static_cast<std::size_t>(level) + 1] * branching_;
  }

  if (points.empty()) return;
  std::vector<Item> by_y;
  by_y.reserve(points.size());
  for (const auto& p : points) by_y.push_back({p.x - 1, p.y - 1, p.w});
  std::vector<Item> by_x = by_y;
  std::sort(by_y.begin(), by_y.end(), [](const Item& a, const Item& b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); });
  std::sort(by_x.begin(), by_x.end(), [](const Item& a, const Item& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });

  outer_root_ = 0;
  outer_.push_back({});
  fill_outer(0, by_y, std::move(by_x), 0, 0, 1);
}

void GridFanout::fill_inner(std::int32_t slot, std::span<const Item> by_x, int level, std::int64_t lo) {
  Weight sum(0);
  for (const Item& it : by_x) sum += it.w;
  for (;;) {
    if (by_x.front().x == by_x.back().x) {
      inner_[static_cast<std::size_t>(slot)] = {by_x.front().x, by_x.front().x, sum, -1, 0, -1};
      return;
    }
    const std::int64_t child_span = span_at(level + 1);
    const std::int64_t first_key = by_x.front().x / child_span;
    if (first_key == by_x.back().x / child_span) {
      // Single non-empty child: compress it away.
      ++level;
      lo = first_key * child_span;
      continue;
    }
    std::vector<std::size_t> cuts{0};
    for (std::size_t i = 1; i < by_x.size(); ++i) {
      if (by_x[i].x / child_span != by_x[i - 1].x / child_span) cuts.push_back(i);
    }
    cuts.push_back(by_x.size());
    const auto first = static_cast<std::int32_t>(inner_.size());
    const auto count = static_cast<std::int32_t>(cuts.size() - 1);
    inner_[static_cast<std::size_t>(slot)] = {lo, lo + span_at(level) - 1, sum, first, count, -1};
    inner_.resize(inner_.size() + static_cast<std::size_t>(count));
    for (std::int32_t g = 0; g < count; ++g) {
      const auto part = by_x.subspan(cuts[static_cast<std::size_t>(g)],
                                     cuts[static_cast<std::size_t>(g) + 1] - cuts[static_cast<std::size_t>(g)]);
      fill_inner(first + g, part, level + 1, (part.front().x / child_span) * child_span);
    }
    return;
  }
}

std::int32_t GridFanout::make_inner(std::span<const Item> by_x) {
  const auto root = static_cast<std::int32_t>(inner_.size());
  inner_.push_back({});
  fill_inner(root, by_x, 0, 0);
  return root;
}

void GridFanout::fill_outer(std::int32_t slot, std::span<const Item> by_y, std::vector<Item> by_x, int level,
                            std::int64_t lo, int copies) {
  Weight sum(0);
  for (const Item& it : by_y) sum += it.w;
  for (;;) {
    if (by_y.front().y == by_y.back().y) {
      const std::int32_t inner = make_inner(by_x);
      outer_[static_cast<std::size_t>(slot)] = {by_y.front().y, by_y.front().y, sum, -1, 0, inner};
      max_copies_ = std::max(max_copies_, copies);
      return;
    }
    const std::int64_t child_span = span_at(level + 1);
    const std::int64_t first_key = by_y.front().y / child_span;
    if (first_key == by_y.back().y / child_span) {
      ++level;
      lo = first_key * child_span;
      continue;
    }
    std::vector<std::size_t> cuts{0};
    std::vector<std::int64_t> keys{first_key};
    for (std::size_t i = 1; i < by_y.size(); ++i) {
      const std::int64_t k = by_y[i].y / child_span;
      if (k != keys.back()) {
        cuts.push_back(i);
        keys.push_back(k);
      }
    }
    cuts.push_back(by_y.size());

    const std::int32_t inner = make_inner(by_x);
    // Distribute the x-sorted list over the children, keeping x order.
    std::vector<std::vector<Item>> parts(keys.size());
    for (const Item& it : by_x) {
      const auto g = std::lower_bound(keys.begin(), keys.end(), it.y / child_span) - keys.begin();
      parts[static_cast<std::size_t>(g)].push_back(it);
    }
    by_x.clear();
    by_x.shrink_to_fit();

    const auto first = static_cast<std::int32_t>(outer_.size());
    const auto count = static_cast<std::int32_t>(keys.size());
    outer_[static_cast<std::size_t>(slot)] = {lo, lo + span_at(level) - 1, sum, first, count, inner};
    outer_.resize(outer_.size() + static_cast<std::size_t>(count));
    for (std::int32_t g = 0; g < count; ++g) {
      const auto gi = static_cast<std::size_t>(g);
      fill_outer(first + g, by_y.subspan(cuts[gi], cuts[gi + 1] - cuts[gi]), std::move(parts[gi]), level + 1,
                 keys[gi] * child_span, copies + 1);
    }
    return;
  }
}

Weight GridFanout::suffix_sum(std::int32_t root, std::int64_t x0, RangeStats* stats) const {
  if (stats) ++stats->sub_queries;
  std::uint64_t visited = 1;
  Weight acc(0);
  const Node* node = &inner_[static_cast<std::size_t>(root)];
  if (node->lo >= x0) {
    acc = node->sum;
  } else if (node->hi >= x0) {
    while (node) {
      const Node* next = nullptr;
      for (std::int32_t c = node->first_child + node->child_count - 1; c >= node->first_child; --c) {
        const Node& child = inner_[static_cast<std::size_t>(c)];
        ++visited;
        if (child.lo >= x0) {
          acc += child.sum;
          continue;
        }
        if (child.hi >= x0) next = &child;
        break;
      }
      node = next;
    }
  }
  if (stats) stats->nodes_visited += visited;
  return acc;
}

Weight GridFanout::dominance_sum(int x, int y, RangeStats* stats) const {
  if (outer_root_ < 0 || x > n_ || y > n_) return Weight(0);
  const std::int64_t x0 = std::max(x, 1) - 1;
  const std::int64_t y0 = std::max(y, 1) - 1;
  std::uint64_t visited = 1;
  Weight acc(0);
  const Node* node = &outer_[static_cast<std::size_t>(outer_root_)];
  if (node->lo >= y0) {
    acc = suffix_sum(node->inner_root, x0, stats);
  } else if (node->hi >= y0) {
    while (node) {
      const Node* next = nullptr;
      for (std::int32_t c = node->first_child + node->child_count - 1; c >= node->first_child; --c) {
        const Node& child = outer_[static_cast<std::size_t>(c)];
        ++visited;
        if (child.lo >= y0) {
          acc += suffix_sum(child.inner_root, x0, stats);
          continue;
        }
        if (child.hi >= y0) next = &child;
        break;
      }
      node = next;
    }
  }
  if (stats) stats->nodes_visited += visited;
  return acc;
}

Weight GridFanout::rect_sum(int x1, int x2, int y1, int y2, RangeStats* stats) const {
  if (stats) ++stats->queries;
  if (!clamp(x1, x2, y1, y2)) return Weight(0);
  return dominance_sum(x1, y1, stats) - dominance_sum(x2 + 1, y1, stats) - dominance_sum(x1, y2 + 1, stats) +
         dominance_sum(x2 + 1, y2 + 1, stats);
}

}  // namespace mincut
