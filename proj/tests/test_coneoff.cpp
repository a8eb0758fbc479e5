#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>
#include <vector>

#include "ggt/coneoff.hpp"
#include "ggt/gp.hpp"
#include "ggt/graph.hpp"
#include "ggt/median.hpp"
#include "ggt/util.hpp"

using namespace ggt;
using namespace ggt::coneoff;

namespace {

// collection of <lambda>-coset pieces of a generated ball
Collection coset_collection(const gp::GraphProductSpec& spec,
                            const gp::GroupBall& ball,
                            const std::vector<std::vector<int>>& lambdas,
                            MemberKind kind) {
  std::vector<std::vector<int>> members;
  for (const auto& lambda : lambdas)
    for (auto& m : gp::coset_members(spec, ball, lambda))
      members.push_back(std::move(m));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Collection::create(ball.graph, std::move(members),
                            std::vector<MemberKind>(0), {});
}

std::vector<std::vector<int>> singleton_lambdas(int n) {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) out.push_back({v});
  return out;
}

}  // namespace

TEST_CASE("collection validation") {
  auto p5 = path_graph(5);
  CHECK_THROWS_AS(
      Collection::create(p5, {std::vector<int>{0, 4}}, {}, {}),
      std::invalid_argument);  // not connected
  CHECK_THROWS_AS(Collection::create(p5, {std::vector<int>{}}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Collection::create(p5, {std::vector<int>{0, 1}, std::vector<int>{1, 0}},
                         {}, {}),
      std::invalid_argument);  // duplicate member
}

TEST_CASE("coning the whole path collapses it") {
  auto p5 = path_graph(5);
  auto coll = Collection::create(p5, {{0, 1, 2, 3, 4}}, {}, {});
  auto cone = cone_off(p5, coll);
  auto d = all_pairs_distances(cone);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      if (x != y) CHECK(d[x][y] == 1);
}

TEST_CASE("empty collection leaves the host alone") {
  auto p5 = path_graph(5);
  auto coll = Collection::create(p5, {}, {}, {});
  auto cone = cone_off(p5, coll);
  CHECK(cone.edges() == p5.edges());
}

TEST_CASE("free-group coset cone-off distances") {
  auto spec = gp::free_group(2, 3);
  auto ball = gp::cayley_ball(spec, 3);
  auto coll = coset_collection(spec, ball, singleton_lambdas(2),
                               MemberKind::vertex_group_coset);
  auto cone = cone_off(ball.graph, coll);
  auto a3 = *ball.index_of(gp::normalize(spec, std::vector<gp::Syllable>{{0, 3}}));
  auto b3 = *ball.index_of(gp::normalize(spec, std::vector<gp::Syllable>{{1, 3}}));
  CHECK(distance(cone, a3, b3) == 2);  // a^3 -> 1 -> b^3 via coset edges

  // the incidence view agrees with the explicit cone
  ConeOffMetric metric(ball.graph, coll);
  auto dm = metric.distances_from(a3);
  auto dc = bfs_distances(cone, a3);
  CHECK(dm == dc);
}

TEST_CASE("fiber counts") {
  auto line = path_graph(13);  // a window on the integer line
  VertexMap identity(line, line, [] {
    std::vector<int> img(13);
    for (int i = 0; i < 13; ++i) img[i] = i;
    return img;
  }());
  CHECK(identity.measure_lipschitz() == 1);
  CHECK(fiber_count(identity, 6, 6, 3, 3) == 7);  // the ball itself

  auto point = empty_graph(1);
  VertexMap constant(line, point, std::vector<int>(13, 0));
  CHECK(fiber_count(constant, 6, 0, 2, 5) == 5);  // |B(p, 2)|

  // free group to its coset cone-off: fiber of (1,1) at radius 2 catches
  // {1, a^-2..a^2, b^-2..b^2} minus the center twice
  auto spec = gp::free_group(2, 8);
  auto ball = gp::cayley_ball(spec, 4);
  auto coll = coset_collection(spec, ball, singleton_lambdas(2),
                               MemberKind::vertex_group_coset);
  ConeOffMetric metric(ball.graph, coll);
  std::vector<int> img(ball.graph.vertex_count());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<int>(i);
  CHECK(fiber_count(ball.graph, img, metric, 0, 0, 2, 1) == 9);
}

TEST_CASE("profile of the identity on a line segment") {
  auto line = path_graph(17);  // radius-8 ball around vertex 8
  VertexMap identity(line, line, [] {
    std::vector<int> img(17);
    for (int i = 0; i < 17; ++i) img[i] = i;
    return img;
  }());
  ProfileOptions opt;
  opt.r1max = 3;
  opt.r2max = 3;
  opt.domain_ball = {{8, 8}};
  auto prof = gentleness_profile(identity, opt);
  for (int r1 = 0; r1 <= 3; ++r1)
    for (int r2 = 0; r2 <= 3; ++r2)
      CHECK(prof.at(r1, r2) == 2 * std::min(r1, r2) + 1);
  CHECK(prof.undercovered.empty());

  BoundFamily linear = BoundFamily::parse("pol:1");
  auto c = fit_constant(prof, linear);
  REQUIRE(c.has_value());
  CHECK(*c == 2);  // C=1 fails at (1,1): 3 > 1
}

TEST_CASE("profiles grow in both arguments") {
  auto grid = grid_graph(6, 6);
  VertexMap identity(grid, grid, [&] {
    std::vector<int> img(grid.vertex_count());
    for (int i = 0; i < grid.vertex_count(); ++i) img[i] = i;
    return img;
  }());
  ProfileOptions opt;
  opt.r1max = 3;
  opt.r2max = 3;
  auto prof = gentleness_profile(identity, opt);
  for (int r1 = 0; r1 <= 3; ++r1)
    for (int r2 = 0; r2 <= 3; ++r2) {
      if (r1 > 0) CHECK(prof.at(r1, r2) >= prof.at(r1 - 1, r2));
      if (r2 > 0) CHECK(prof.at(r1, r2) >= prof.at(r1, r2 - 1));
    }
}

TEST_CASE("product projection profile obeys the growth bound") {
  // (tree ball) x (line window) projected onto the tree ball
  auto tree = bfs_ball(binary_tree(6), 0, 4).graph;
  int nt = tree.vertex_count(), nz = 7;
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int t, int z) { return z * nt + t; };
  for (int z = 0; z < nz; ++z) {
    for (auto [u, v] : tree.edges()) edges.emplace_back(id(u, z), id(v, z));
    if (z + 1 < nz)
      for (int t = 0; t < nt; ++t) edges.emplace_back(id(t, z), id(t, z + 1));
  }
  FiniteGraph product(nt * nz, std::move(edges));
  std::vector<int> img(product.vertex_count());
  for (int z = 0; z < nz; ++z)
    for (int t = 0; t < nt; ++t) img[id(t, z)] = t;
  VertexMap proj(product, tree, std::move(img));
  ProfileOptions opt;
  opt.r1max = 3;
  opt.r2max = 3;
  opt.centers = {id(0, 3)};
  auto prof = gentleness_profile(proj, opt);
  // growth of the line times growth of the tree at the smaller radius
  auto dtree = bfs_distances(tree, 0);
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int r2 = 1; r2 <= 3; ++r2) {
      long long tree_ball = 0;
      for (int v = 0; v < nt; ++v)
        if (dtree[v] <= std::min(r1, r2)) ++tree_ball;
      CHECK(prof.at(r1, r2) <= (2 * r1 + 1) * tree_ball);
    }
}

TEST_CASE("constant map from a flat ball fits a quadratic") {
  auto grid = grid_graph(8, 8);
  auto point = empty_graph(1);
  VertexMap constant(grid, point,
                     std::vector<int>(grid.vertex_count(), 0));
  ProfileOptions opt;
  opt.r1max = 4;
  opt.r2max = 2;
  auto prof = gentleness_profile(constant, opt);
  auto c = fit_constant(prof, BoundFamily::parse("pol:2"));
  REQUIRE(c.has_value());
  CHECK(*c <= 4);
}

TEST_CASE("bound family parsing") {
  CHECK(BoundFamily::parse("lin").name() == "lin");
  CHECK(BoundFamily::parse("exp").name() == "exp");
  CHECK(BoundFamily::parse("pol:3").degree == 3);
  CHECK_THROWS_AS(BoundFamily::parse("cubic"), std::invalid_argument);
}

TEST_CASE("syllabic pairs") {
  SUBCASE("empty collection: any host geodesic works") {
    auto p5 = path_graph(5);
    auto coll = Collection::create(p5, {}, {}, {});
    auto w = is_syllabic_pair(p5, coll, 0, 4);
    REQUIRE(w.has_value());
    CHECK(w->cone_path.size() == 5);
  }
  SUBCASE("one big member: a single cone edge extends") {
    auto p5 = path_graph(5);
    auto coll = Collection::create(p5, {{0, 1, 2, 3, 4}}, {}, {});
    auto w = is_syllabic_pair(p5, coll, 0, 4);
    REQUIRE(w.has_value());
    CHECK(w->cone_path == std::vector<int>{0, 4});
  }
  SUBCASE("free group with line cosets follows the syllables") {
    auto spec = gp::free_group(2, 4);
    auto ball = gp::cayley_ball(spec, 4);
    auto coll = coset_collection(spec, ball, singleton_lambdas(2),
                                 MemberKind::vertex_group_coset);
    auto abab = *ball.index_of(gp::normalize(
        spec, std::vector<gp::Syllable>{{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
    auto w = is_syllabic_pair(ball.graph, coll, 0, abab);
    REQUIRE(w.has_value());
    CHECK(w->cone_path.size() == 5);  // four syllable jumps
    // the witness is a (1,0)-quasigeodesic extension: host distances along
    // the pieces sum exactly to d_host(x, y)
    auto dhost = bfs_distances(ball.graph, 0);
    long long total = 0;
    for (std::size_t i = 0; i + 1 < w->cone_path.size(); ++i)
      total += *distance(ball.graph, w->cone_path[i], w->cone_path[i + 1]);
    CHECK(total == dhost[abab]);
  }
}

TEST_CASE("strong syllabicity") {
  SUBCASE("vertex-group cosets in a word-metric ball") {
    auto spec = gp::racg(cycle_graph(5));
    auto ball = gp::cayley_ball(spec, 4);
    auto coll = coset_collection(spec, ball, singleton_lambdas(5),
                                 MemberKind::vertex_group_coset);
    std::vector<std::pair<int, int>> pairs;
    Rng rng(77);
    for (int t = 0; t < 30; ++t)
      pairs.emplace_back(
          static_cast<int>(rng.below(ball.graph.vertex_count())),
          static_cast<int>(rng.below(ball.graph.vertex_count())));
    auto rep = is_strongly_syllabic_sample(ball.graph, coll, pairs);
    CHECK(rep.ok);
  }
  SUBCASE("all rows of a grid") {
    auto grid = grid_graph(4, 4);
    std::vector<std::vector<int>> rows;
    for (int y = 0; y <= 4; ++y) {
      std::vector<int> row;
      for (int x = 0; x <= 4; ++x) row.push_back(y * 5 + x);
      rows.push_back(row);
    }
    auto coll = Collection::create(grid, rows, {}, {});
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < grid.vertex_count(); x += 3)
      for (int y = x + 1; y < grid.vertex_count(); y += 4)
        pairs.emplace_back(x, y);
    auto rep = is_strongly_syllabic_sample(grid, coll, pairs);
    CHECK(rep.ok);
  }
  SUBCASE("a single coned line is not even syllabic") {
    // rows parallel to the coned one shortcut through it, and the shortcut
    // does not extend to a host geodesic
    auto grid = grid_graph(4, 4);
    std::vector<int> row;
    for (int x = 0; x <= 4; ++x) row.push_back(x);  // bottom row
    auto coll = Collection::create(grid, {row}, {}, {});
    int x = 5, y = 9;  // the row above, end to end
    CHECK(!is_syllabic_pair(grid, coll, x, y).has_value());
    std::vector<std::pair<int, int>> pairs{{x, y}};
    CHECK(!is_strongly_syllabic_sample(grid, coll, pairs).ok);
  }
}

TEST_CASE("vertex-group coset cone-off recovers the syllable ball") {
  auto spec = gp::racg(cycle_graph(5));
  auto cay = gp::cayley_ball(spec, 4);
  auto coll = coset_collection(spec, cay, singleton_lambdas(5),
                               MemberKind::vertex_group_coset);
  auto cone = cone_off(cay.graph, coll);
  auto qm = gp::qm_ball(spec, 4);
  // compare adjacency over the common vertex set, keyed by canonical words
  for (int u = 0; u < cay.graph.vertex_count(); ++u) {
    auto qu = qm.index_of(cay.words[u]);
    REQUIRE(qu.has_value());
    for (int v = u + 1; v < cay.graph.vertex_count(); ++v) {
      auto qv = qm.index_of(cay.words[v]);
      REQUIRE(qv.has_value());
      CHECK(cone.has_edge(u, v) == qm.graph.has_edge(*qu, *qv));
    }
  }
}

TEST_CASE("parallel closure") {
  SUBCASE("all rows of a grid pass") {
    auto grid = grid_graph(4, 3);
    auto dec = median::hyperplanes(grid, median::HyperplaneMode::median);
    std::vector<std::vector<int>> rows;
    for (int y = 0; y <= 3; ++y) {
      std::vector<int> row;
      for (int x = 0; x <= 4; ++x) row.push_back(y * 5 + x);
      rows.push_back(row);
    }
    auto coll = Collection::create(grid, rows, {}, {});
    auto rep = check_parallel_closure(grid, dec, coll,
                                      ClosureVariant::image_pair, 40, 40, 3);
    CHECK(rep.ok);
    CHECK(rep.pairs_checked > 0);
  }
  SUBCASE("a single row fails against its parallel copies") {
    auto grid = grid_graph(4, 3);
    auto dec = median::hyperplanes(grid, median::HyperplaneMode::median);
    std::vector<int> row;
    for (int x = 0; x <= 4; ++x) row.push_back(x);
    auto coll = Collection::create(grid, {row}, {}, {});
    auto rep = check_parallel_closure(grid, dec, coll,
                                      ClosureVariant::image_pair, 40, 40, 3);
    CHECK(!rep.ok);
    REQUIRE(rep.counterexample.has_value());
    auto [x, y, a, b] = *rep.counterexample;
    CHECK(median::parallel_pairs(grid, dec, a, b, x, y));
  }
}

TEST_CASE("collection growth") {
  auto grid = grid_graph(4, 4);
  std::vector<std::vector<int>> singles;
  for (int v = 0; v < grid.vertex_count(); ++v) singles.push_back({v});
  auto ones = Collection::create(grid, singles, {}, {});
  auto g1 = collection_growth(grid, ones, 3);
  for (auto v : g1) CHECK(v == 1);

  auto spec = gp::free_group(2, 6);
  auto ball = gp::cayley_ball(spec, 6);
  auto coll = coset_collection(spec, ball, singleton_lambdas(2),
                               MemberKind::vertex_group_coset);
  auto growth = collection_growth(ball.graph, coll, 4);
  for (int r = 0; r <= 4; ++r) CHECK(growth[r] == 2 * r + 1);
}

TEST_CASE("horoballs") {
  SUBCASE("single edge base, one level") {
    auto h = horoball(path_graph(2), 1);
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 4);  // base edge, two verticals, level-1 edge
  }
  SUBCASE("level zero recovers the base") {
    auto base = cycle_graph(5);
    auto h = horoball(base, 0);
    CHECK(h.edges() == base.edges());
  }
  SUBCASE("climbing shortens long hops") {
    auto base = path_graph(9);  // endpoints at distance 8
    auto h = horoball(base, 3);
    auto d = distance(h, horoball_vertex(base, 0, 0),
                      horoball_vertex(base, 8, 0));
    REQUIRE(d.has_value());
    CHECK(*d == 6);
    CHECK(*d <= 7);
  }
}

TEST_CASE("certificate bound for the free-group cone-off") {
  auto spec = gp::free_group(2, 8);
  auto ball = gp::cayley_ball(spec, 5);
  auto coll = coset_collection(spec, ball, singleton_lambdas(2),
                               MemberKind::vertex_group_coset);
  ConeOffMetric metric(ball.graph, coll);
  std::vector<int> img(ball.graph.vertex_count());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<int>(i);
  ProfileOptions opt;
  opt.r1max = 3;
  opt.r2max = 2;
  opt.domain_ball = {{0, 5}};
  auto prof = gentleness_profile(ball.graph, img, metric, opt);
  auto growth = collection_growth(ball.graph, coll, 3);
  int big_n = coll.local_multiplicity(ball.graph.vertex_count());
  CHECK(big_n == 2);
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int r2 = 1; r2 <= 2; ++r2) {
      long long bound = 1;
      for (int i = 0; i < 2 * r2; ++i) bound *= big_n * growth[r1];
      CHECK(prof.at(r1, r2) <= bound);
    }
}

TEST_CASE("fiber counts respect codomain symmetry") {
  auto c8 = cycle_graph(8);
  std::vector<int> img(8);
  for (int i = 0; i < 8; ++i) img[i] = i;
  VertexMap identity(c8, c8, img);
  // rotating q (and the map) leaves the count alone
  for (int shift = 1; shift < 8; ++shift) {
    std::vector<int> rotated(8);
    for (int i = 0; i < 8; ++i) rotated[i] = (i + shift) % 8;
    VertexMap twisted(c8, c8, rotated);
    CHECK(fiber_count(identity, 0, 0, 2, 1) ==
          fiber_count(twisted, 0, shift % 8, 2, 1));
  }
}

TEST_CASE("deterministic reruns") {
  auto grid = grid_graph(5, 5);
  VertexMap identity(grid, grid, [&] {
    std::vector<int> img(grid.vertex_count());
    for (int i = 0; i < grid.vertex_count(); ++i) img[i] = i;
    return img;
  }());
  ProfileOptions opt;
  opt.r1max = 2;
  opt.r2max = 2;
  opt.threads = 3;
  auto a = gentleness_profile(identity, opt);
  auto b = gentleness_profile(identity, opt);
  CHECK(a.g == b.g);
}
