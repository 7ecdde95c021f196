#include "mincut/binarized_tree.hpp"

#include <algorithm>

#include "mincut/errors.hpp"

namespace mincut {

BinarizedTree::BinarizedTree(const RootedTree& tree)
    : original_count_(tree.vertex_count()), root_(tree.root()) {
  const auto n = static_cast<std::size_t>(original_count_);
  parent_.assign(n, kNoVertex);
  children_.assign(n, {});
  interval_.resize(n);
  owner_.resize(n);
  for (VertexId v = 0; v < original_count_; ++v) {
    interval_[static_cast<std::size_t>(v)] = tree.interval(v);
    owner_[static_cast<std::size_t>(v)] = v;
  }

  auto link = [this](VertexId parent, VertexId child) {
    parent_[idx(child)] = parent;
    children_[idx(parent)].push_back(child);
  };

  for (VertexId v = 0; v < original_count_; ++v) {
    const auto& kids = tree.children(v);  // postorder order
    if (kids.size() <= 2) {
      for (VertexId c : kids) link(v, c);
      continue;
    }
    VertexId attach = v;
    for (std::size_t i = 0; i + 2 < kids.size(); ++i) {
      link(attach, kids[i]);
      const auto x = static_cast<VertexId>(parent_.size());
      parent_.push_back(kNoVertex);
      children_.emplace_back();
      interval_.push_back({tree.post_low(kids[i + 1]), tree.post(kids.back())});
      owner_.push_back(v);
      link(attach, x);
      attach = x;
    }
    link(attach, kids[kids.size() - 2]);
    link(attach, kids.back());
  }
}

VertexId BinarizedTree::original_edge(VertexId lower) const {
  if (is_virtual(lower)) throw CandidacyError("virtual edge is not a cut candidate");
  if (lower == root_) throw CandidacyError("the root has no parent edge");
  return lower;
}

CentroidDecomposition::CentroidDecomposition(const BinarizedTree& tree) {
  const auto n = static_cast<std::size_t>(tree.size());
  level_.assign(n, 0);
  cparent_.assign(n, kNoVertex);
  comp_size_.assign(n, 0);
  branches_.assign(n, {});
  if (n == 0) return;

  auto neighbours = [&tree](VertexId v, std::vector<VertexId>& out) {
    out.clear();
    if (tree.parent(v) != kNoVertex) out.push_back(tree.parent(v));
    for (VertexId c : tree.children(v)) out.push_back(c);
  };

  std::vector<int> sub(n, 0);
  std::vector<VertexId> from(n, kNoVertex);
  std::vector<VertexId> order;
  std::vector<VertexId> nbr;

  struct Task {
    VertexId start;
    VertexId parent_centroid;
    std::size_t branch;
    int level;
  };
  std::vector<Task> tasks{{tree.root(), kNoVertex, 0, 1}};
  while (!tasks.empty()) {
    const Task task = tasks.back();
    tasks.pop_back();

    // Collect the component (vertices not yet assigned a level).
    order.clear();
    order.push_back(task.start);
    from[static_cast<std::size_t>(task.start)] = kNoVertex;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId v = order[head];
      neighbours(v, nbr);
      for (VertexId w : nbr) {
        if (level_[static_cast<std::size_t>(w)] != 0 || w == from[static_cast<std::size_t>(v)]) continue;
        from[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
    const int total = static_cast<int>(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId v = *it;
      sub[static_cast<std::size_t>(v)] = 1;
      neighbours(v, nbr);
      for (VertexId w : nbr) {
        if (level_[static_cast<std::size_t>(w)] == 0 && from[static_cast<std::size_t>(w)] == v) {
          sub[static_cast<std::size_t>(v)] += sub[static_cast<std::size_t>(w)];
        }
      }
    }
    // Walk towards the heavy side until no part exceeds total / 2.
    VertexId c = task.start;
    for (;;) {
      VertexId next = kNoVertex;
      neighbours(c, nbr);
      for (VertexId w : nbr) {
        if (level_[static_cast<std::size_t>(w)] == 0 && from[static_cast<std::size_t>(w)] == c &&
            2 * sub[static_cast<std::size_t>(w)] > total) {
          next = w;
        }
      }
      if (next == kNoVertex) break;
      c = next;
    }

    const auto ci = static_cast<std::size_t>(c);
    level_[ci] = task.level;
    cparent_[ci] = task.parent_centroid;
    comp_size_[ci] = total;
    depth_ = std::max(depth_, task.level);
    if (task.parent_centroid == kNoVertex) {
      top_ = c;
    } else {
      branches_[static_cast<std::size_t>(task.parent_centroid)][task.branch].centroid = c;
    }
    neighbours(c, nbr);
    for (VertexId w : nbr) {
      if (level_[static_cast<std::size_t>(w)] != 0) continue;
      branches_[ci].push_back({w, kNoVertex});
      tasks.push_back({w, c, branches_[ci].size() - 1, task.level + 1});
    }
  }
}

}  // namespace mincut
