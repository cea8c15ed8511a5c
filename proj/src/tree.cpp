#include "starlike/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace starlike {

int RootedTree::max_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<int> RootedTree::starlike_branch_count() const {
  int center_degree = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    const int d = degree(v);
    if (d < 3) continue;
    if (center_degree > 0) return std::nullopt;
    center_degree = d;
  }
  if (center_degree == 0) return std::nullopt;
  return center_degree;
}

RootedTree starlike_tree(const Partition& p) {
  RootedTree tree;
  const int n = p.n();
  tree.parents_.assign(static_cast<std::size_t>(n), -1);
  tree.children_.assign(static_cast<std::size_t>(n), {});
  tree.root_ = 0;
  int next = 1;
  for (int length : p.parts()) {
    tree.parents_[static_cast<std::size_t>(next)] = 0;
    tree.children_[0].push_back(next);
    for (int k = 1; k < length; ++k) {
      tree.parents_[static_cast<std::size_t>(next + k)] = next + k - 1;
      tree.children_[static_cast<std::size_t>(next + k - 1)].push_back(next + k);
    }
    next += length;
  }
  return tree;
}

RootedTree tree_from_edge_list(int n, std::span<const std::pair<int, int>> edges, int root) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs " +
                                std::to_string(n - 1) + " edges");

  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("duplicate edge");
  }

  RootedTree tree;
  tree.root_ = root;
  tree.parents_.assign(static_cast<std::size_t>(n), -1);
  tree.children_.assign(static_cast<std::size_t>(n), {});
  std::vector<int> queue{root};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : adjacency[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      tree.parents_[static_cast<std::size_t>(w)] = v;
      tree.children_[static_cast<std::size_t>(v)].push_back(w);
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw std::invalid_argument("graph is not connected");
  return tree;
}

std::vector<int> bottom_up_order(const RootedTree& tree) {
  const int n = tree.vertex_count();
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  int deepest = 0;
  // parents_ is BFS-ordered for edge-list trees but not for starlike
  // layouts, so walk down from the root explicitly.
  std::vector<int> queue{tree.root()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int c : tree.children(v)) {
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(v)] + 1;
      deepest = std::max(deepest, depth[static_cast<std::size_t>(c)]);
      queue.push_back(c);
    }
  }
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(deepest) + 1);
  for (int v = 0; v < n; ++v) levels[static_cast<std::size_t>(depth[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int d = deepest; d >= 0; --d)
    order.insert(order.end(), levels[static_cast<std::size_t>(d)].begin(),
                 levels[static_cast<std::size_t>(d)].end());
  return order;
}

}  // namespace starlike
