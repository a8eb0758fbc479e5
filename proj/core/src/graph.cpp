#include "ggt/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ggt {

FiniteGraph::FiniteGraph(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 0) throw std::invalid_argument("FiniteGraph: negative vertex count");
  adj_.assign(n, {});
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("FiniteGraph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("FiniteGraph: self-loop rejected");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                  edge_list.end());
  edges_ = std::move(edge_list);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::span<const int> FiniteGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool FiniteGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int FiniteGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it == edges_.end() || *it != std::pair{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

void FiniteGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
    throw std::invalid_argument("FiniteGraph: label count mismatch");
  labels_ = std::move(labels);
}

void FiniteGraph::set_classes(std::vector<GroupClass> classes) {
  if (!classes.empty() && static_cast<int>(classes.size()) != vertex_count())
    throw std::invalid_argument("FiniteGraph: class count mismatch");
  classes_ = std::move(classes);
}

void FiniteGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("FiniteGraph: unknown vertex id");
}

std::vector<int> bfs_distances(const FiniteGraph& g, int src, int cap) {
  g.check_vertex(src);
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (cap >= 0 && dist[v] >= cap) continue;
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

BallWithRadii bfs_ball(const FiniteGraph& g, int p, int radius) {
  g.check_vertex(p);
  if (radius < 0) throw std::invalid_argument("bfs_ball: negative radius");
  std::vector<int> dist = bfs_distances(g, p, radius);

  BallWithRadii ball;
  std::vector<int> to_ball(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] >= 0 && dist[v] <= radius) {
      to_ball[v] = static_cast<int>(ball.host_vertex.size());
      ball.host_vertex.push_back(v);
      ball.dist.push_back(dist[v]);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (to_ball[u] >= 0 && to_ball[v] >= 0)
      edges.emplace_back(to_ball[u], to_ball[v]);
  }
  ball.graph = FiniteGraph(static_cast<int>(ball.host_vertex.size()),
                           std::move(edges));
  ball.center = to_ball[p];
  ball.radius = radius;
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(ball.host_vertex.size());
    for (int hv : ball.host_vertex) labels.push_back(g.labels()[hv]);
    ball.graph.set_labels(std::move(labels));
  }
  if (!g.classes().empty()) {
    std::vector<GroupClass> classes;
    classes.reserve(ball.host_vertex.size());
    for (int hv : ball.host_vertex) classes.push_back(g.classes()[hv]);
    ball.graph.set_classes(std::move(classes));
  }
  return ball;
}

std::optional<int> distance(const FiniteGraph& g, int x, int y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) return 0;
  std::vector<int> dist = bfs_distances(g, x);
  if (dist[y] < 0) return std::nullopt;
  return dist[y];
}

std::vector<std::vector<int>> all_pairs_distances(const FiniteGraph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

FiniteGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return FiniteGraph(n, std::move(e));
}

FiniteGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return FiniteGraph(n, std::move(e));
}

FiniteGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return FiniteGraph(n, std::move(e));
}

FiniteGraph empty_graph(int n) { return FiniteGraph(n, {}); }

FiniteGraph grid_graph(int w, int h) {
  int cols = w + 1, rows = h + 1;
  auto id = [cols](int x, int y) { return y * cols + x; };
  std::vector<std::pair<int, int>> e;
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) {
      if (x + 1 < cols) e.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < rows) e.emplace_back(id(x, y), id(x, y + 1));
    }
  return FiniteGraph(cols * rows, std::move(e));
}

FiniteGraph binary_tree(int depth) {
  // level k holds 2^k vertices; children of v are 2v+1 and 2v+2
  int n = (1 << (depth + 1)) - 1;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) {
    int l = 2 * v + 1, r = 2 * v + 2;
    if (l < n) e.emplace_back(v, l);
    if (r < n) e.emplace_back(v, r);
  }
  return FiniteGraph(n, std::move(e));
}

FiniteGraph disjoint_union(const FiniteGraph& a, const FiniteGraph& b) {
  int na = a.vertex_count();
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + na, v + na);
  return FiniteGraph(na + b.vertex_count(), std::move(e));
}

FiniteGraph join(const FiniteGraph& a, const FiniteGraph& b) {
  int na = a.vertex_count();
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + na, v + na);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.vertex_count(); ++v) e.emplace_back(u, v + na);
  return FiniteGraph(na + b.vertex_count(), std::move(e));
}

}  // namespace ggt
