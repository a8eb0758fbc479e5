#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ggt {

// Cardinality class of a vertex payload: the order of the group attached to
// a vertex, collapsed to the two cases the pattern machinery distinguishes.
enum class GroupClass { order_two, order_three_plus };

// Undirected graph on dense vertex ids 0..n-1. No loops, no multi-edges,
// sorted adjacency. Immutable after construction and safe to share
// read-only across threads.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  // Index of {u,v} in edges(); -1 when absent.
  int edge_index(int u, int v) const;
  // Edges as sorted (u,v) pairs with u < v, lexicographically ordered.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Optional per-vertex payloads; empty vectors when unset.
  void set_labels(std::vector<std::string> labels);
  void set_classes(std::vector<GroupClass> classes);
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GroupClass>& classes() const { return classes_; }

  void check_vertex(int v) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
  std::vector<GroupClass> classes_;
};

// Induced ball around a center, re-indexed to 0..m-1.
struct BallWithRadii {
  FiniteGraph graph;
  int center = 0;             // id in `graph`
  int radius = 0;
  std::vector<int> dist;      // per ball vertex, distance to center
  std::vector<int> host_vertex;  // ball id -> id in the host graph
};

// Distances from src; -1 for unreachable. `cap` < 0 means unbounded.
std::vector<int> bfs_distances(const FiniteGraph& g, int src, int cap = -1);

// Induced subgraph on {v : d(src,v) <= R} with exact distances.
BallWithRadii bfs_ball(const FiniteGraph& g, int p, int radius);

// Shortest-path edge count; nullopt when disconnected.
std::optional<int> distance(const FiniteGraph& g, int x, int y);

// All-pairs distance matrix (one BFS per vertex); -1 for unreachable.
std::vector<std::vector<int>> all_pairs_distances(const FiniteGraph& g);

// small builders used by tests, experiments and fixtures
FiniteGraph path_graph(int n);
FiniteGraph cycle_graph(int n);
FiniteGraph complete_graph(int n);
FiniteGraph empty_graph(int n);
// (w+1) x (h+1) grid points, 4-neighbour edges
FiniteGraph grid_graph(int w, int h);
// rooted binary tree: root 0 with two children per vertex, depth levels;
// sphere at depth n has exactly 2^n vertices
FiniteGraph binary_tree(int depth);
// join: disjoint union of a and b plus all cross edges
FiniteGraph join(const FiniteGraph& a, const FiniteGraph& b);
FiniteGraph disjoint_union(const FiniteGraph& a, const FiniteGraph& b);

}  // namespace ggt
