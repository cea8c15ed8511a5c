#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "starlike/partition.hpp"

namespace starlike {

// Rooted tree with vertices 0..n-1 and child lists sorted ascending. The
// factories below are the only way to build one, so connectivity and the
// parent/child invariants always hold.
class RootedTree {
 public:
  int vertex_count() const { return static_cast<int>(children_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parents_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  int degree(int v) const {
    return static_cast<int>(children(v).size()) + (parent(v) >= 0 ? 1 : 0);
  }
  int max_degree() const;

  // Branch count r when the tree is starlike (exactly one vertex of degree
  // >= 3); nullopt for paths and other shapes.
  std::optional<int> starlike_branch_count() const;

  friend RootedTree starlike_tree(const Partition& p);
  friend RootedTree tree_from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                                        int root);

 private:
  RootedTree() = default;
  int root_ = 0;
  std::vector<int> parents_;
  std::vector<std::vector<int>> children_;
};

// The tree of a partition: center 0, branch i occupying the next y_i ids
// in path order from the vertex adjacent to the center outward. The layout
// is deterministic so diagonal profiles are reproducible.
RootedTree starlike_tree(const Partition& p);

// Validates that the edges form a tree on 0..n-1 and roots it. Throws on
// out-of-range endpoints, self-loops, duplicate edges, wrong edge count,
// or a disconnected graph.
RootedTree tree_from_edge_list(int n, std::span<const std::pair<int, int>> edges, int root);

// Every vertex after all of its children: deepest level first, ascending id
// within a level, root last.
std::vector<int> bottom_up_order(const RootedTree& tree);

}  // namespace starlike
