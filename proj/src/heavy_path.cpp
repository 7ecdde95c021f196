#include "mincut/heavy_path.hpp"

namespace mincut {

HeavyPathDecomposition::HeavyPathDecomposition(const RootedTree& tree)
    : pos_(static_cast<std::size_t>(tree.vertex_count()), PathPosition{-1, -1}) {
  auto heavy_child = [&tree](VertexId v) {
    VertexId best = kNoVertex;
    for (VertexId c : tree.children(v)) {
      // children are sorted by id, so strict comparison keeps the smallest id
      if (best == kNoVertex || tree.subtree_size(c) > tree.subtree_size(best)) best = c;
    }
    return best;
  };

  // Path starts, in preorder: the root's heavy chain, then every light child.
  std::vector<VertexId> starts{tree.root()};
  while (!starts.empty()) {
    const VertexId s = starts.back();
    starts.pop_back();
    HeavyPath path;
    VertexId v = s;
    if (s == tree.root()) {
      path.top = s;
    } else {
      path.top = tree.parent(s);
      path.edges.push_back(s);
    }
    std::vector<VertexId> light;
    for (;;) {
      const VertexId h = heavy_child(v);
      for (VertexId c : tree.children(v)) {
        if (c != h) light.push_back(c);
      }
      if (h == kNoVertex) break;
      path.edges.push_back(h);
      v = h;
    }
    if (!path.edges.empty()) {
      const auto id = static_cast<PathId>(paths_.size());
      for (std::size_t i = 0; i < path.edges.size(); ++i) {
        pos_[static_cast<std::size_t>(path.edges[i])] = {id, static_cast<int>(i)};
      }
      paths_.push_back(std::move(path));
    }
    // Reverse so that the stack pops them top-down, children by id.
    starts.insert(starts.end(), light.rbegin(), light.rend());
  }
}

std::vector<PathPosition> HeavyPathDecomposition::paths_on_root_path(VertexId x) const {
  std::vector<PathPosition> out;
  while (pos_[static_cast<std::size_t>(x)].path >= 0) {
    const PathPosition p = pos_[static_cast<std::size_t>(x)];
    out.push_back(p);
    x = paths_[static_cast<std::size_t>(p.path)].top;
  }
  return out;
}

}  // namespace mincut
