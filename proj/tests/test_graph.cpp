#include <doctest.h>

#include <stdexcept>

#include "ggt/graph.hpp"
#include "ggt/util.hpp"

using namespace ggt;

TEST_CASE("construction validates and dedups") {
  FiniteGraph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.edge_index(1, 2) >= 0);
  CHECK(g.edge_index(0, 2) == -1);
  CHECK_THROWS_AS(FiniteGraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGraph(2, {{0, 2}}), std::out_of_range);
}

TEST_CASE("bfs_ball on a path") {
  auto g = path_graph(5);
  auto ball = bfs_ball(g, 2, 1);
  CHECK(ball.graph.vertex_count() == 3);
  CHECK(ball.host_vertex == std::vector<int>{1, 2, 3});
  CHECK(ball.dist == std::vector<int>{1, 0, 1});
  CHECK(ball.dist[ball.center] == 0);
}

TEST_CASE("bfs_ball radius zero") {
  auto g = cycle_graph(6);
  auto ball = bfs_ball(g, 3, 0);
  CHECK(ball.graph.vertex_count() == 1);
  CHECK(ball.dist == std::vector<int>{0});
}

TEST_CASE("bfs_ball covers the whole 4-cycle at radius 2") {
  auto g = cycle_graph(4);
  auto ball = bfs_ball(g, 0, 2);
  CHECK(ball.graph.vertex_count() == 4);
  int antipode = -1;
  for (int v = 0; v < 4; ++v)
    if (ball.host_vertex[v] == 2) antipode = v;
  CHECK(ball.dist[antipode] == 2);
}

TEST_CASE("distance basics") {
  auto g = cycle_graph(4);
  CHECK(distance(g, 0, 2) == 2);
  CHECK(distance(g, 3, 3) == 0);
  FiniteGraph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(!distance(two_edges, 0, 3).has_value());
  CHECK_THROWS_AS((void)distance(two_edges, 0, 7), std::out_of_range);
}

TEST_CASE("balls grow with the radius and start at the center") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng.below(8));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(3) == 0) edges.emplace_back(u, v);
    FiniteGraph g(n, std::move(edges));
    int p = static_cast<int>(rng.below(n));
    int prev = 0;
    for (int r = 0; r <= n; ++r) {
      auto ball = bfs_ball(g, p, r);
      if (r == 0) CHECK(ball.graph.vertex_count() == 1);
      CHECK(ball.graph.vertex_count() >= prev);
      prev = ball.graph.vertex_count();
    }
  }
}

TEST_CASE("triangle inequality on sampled triples") {
  auto g = grid_graph(3, 4);
  auto d = all_pairs_distances(g);
  Rng rng(11);
  int n = g.vertex_count();
  for (int t = 0; t < 200; ++t) {
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n));
    int c = static_cast<int>(rng.below(n));
    CHECK(d[a][c] <= d[a][b] + d[b][c]);
  }
}

TEST_CASE("binary tree has doubling spheres") {
  auto t = binary_tree(6);
  auto d = bfs_distances(t, 0);
  std::vector<int> count(7, 0);
  for (int v = 0; v < t.vertex_count(); ++v) ++count[d[v]];
  for (int lvl = 0; lvl <= 6; ++lvl) CHECK(count[lvl] == (1 << lvl));
}

TEST_CASE("join and disjoint union") {
  auto j = join(empty_graph(2), empty_graph(2));
  CHECK(j.vertex_count() == 4);
  CHECK(j.edge_count() == 4);  // the 4-cycle 0-2-1-3
  auto u = disjoint_union(path_graph(2), path_graph(3));
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
}
