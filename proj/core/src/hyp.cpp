#include "ggt/hyp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "ggt/util.hpp"

namespace ggt::hyp {

namespace {

// largest-two-of-three defect of one quadruple, doubled
int quadruple_defect2(int dwx, int dyz, int dwy, int dxz, int dwz, int dxy) {
  int s1 = dwx + dyz, s2 = dwy + dxz, s3 = dwz + dxy;
  int hi = std::max({s1, s2, s3});
  int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
  return hi - mid;
}

DeltaReport scan_subset(const std::vector<int>& verts,
                        const std::vector<std::vector<int>>& d) {
  // d is indexed by subset position
  DeltaReport rep;
  int k = static_cast<int>(verts.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int e = c + 1; e < k; ++e) {
          ++rep.quadruples;
          int def = quadruple_defect2(d[a][b], d[c][e], d[a][c], d[b][e],
                                      d[a][e], d[b][c]);
          if (def > rep.delta2) {
            rep.delta2 = def;
            rep.witness = {verts[a], verts[b], verts[c], verts[e]};
          }
        }
  return rep;
}

}  // namespace

DeltaReport four_point_delta(const FiniteGraph& g, const DeltaOptions& opt) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("four_point_delta: empty graph");
  if (n <= opt.exhaustive_limit) {
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    std::vector<std::vector<int>> d(n);
    parallel_for(0, n, opt.threads, [&](int v) { d[v] = bfs_distances(g, v); });
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (d[v][w] < 0)
          throw std::invalid_argument("four_point_delta: graph not connected");
    DeltaReport rep = scan_subset(verts, d);
    return rep;
  }

  // sampled rounds of distinct vertices; deterministic in the seed
  Rng rng(opt.seed);
  DeltaReport best;
  best.sampled = true;
  for (int round = 0; round < opt.rounds; ++round) {
    std::vector<int> verts = rng.sample_distinct(n, opt.sample_vertices);
    std::vector<std::vector<int>> full(verts.size());
    parallel_for(0, static_cast<int>(verts.size()), opt.threads,
                 [&](int i) { full[i] = bfs_distances(g, verts[i]); });
    std::vector<std::vector<int>> d(verts.size(),
                                    std::vector<int>(verts.size(), 0));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j) {
        int dist = full[i][verts[j]];
        if (dist < 0)
          throw std::invalid_argument("four_point_delta: graph not connected");
        d[i][j] = dist;
      }
    DeltaReport rep = scan_subset(verts, d);
    best.quadruples += rep.quadruples;
    best.sample_size += static_cast<int>(verts.size());
    if (rep.delta2 > best.delta2) {
      best.delta2 = rep.delta2;
      best.witness = rep.witness;
    }
  }
  return best;
}

DeltaReport four_point_delta_subset(
    std::span<const int> vertices,
    const std::function<const std::vector<int>&(int)>& dist_from) {
  std::vector<int> verts(vertices.begin(), vertices.end());
  std::vector<std::vector<int>> d(verts.size(),
                                  std::vector<int>(verts.size(), 0));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& row = dist_from(verts[i]);
    for (std::size_t j = 0; j < verts.size(); ++j) d[i][j] = row[verts[j]];
  }
  DeltaReport rep = scan_subset(verts, d);
  rep.sampled = true;
  rep.sample_size = static_cast<int>(verts.size());
  return rep;
}

BowditchReport bowditch_check(const FiniteGraph& g, const EtaFamily& eta,
                              int D, const BowditchOptions& opt) {
  BowditchReport rep;
  int n = g.vertex_count();
  auto dist = all_pairs_distances(g);

  auto get_eta = [&](int x, int y) {
    std::vector<int> set = eta(x, y);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    bool has_x = std::binary_search(set.begin(), set.end(), x);
    bool has_y = std::binary_search(set.begin(), set.end(), y);
    if (!has_x || !has_y)
      throw std::invalid_argument("bowditch_check: eta set misses an endpoint");
    // connectivity of the induced set
    std::set<int> in(set.begin(), set.end());
    std::set<int> seen{set[0]};
    std::vector<int> stack{set[0]};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : g.neighbors(a))
        if (in.count(b) && !seen.count(b)) {
          seen.insert(b);
          stack.push_back(b);
        }
    }
    if (seen.size() != set.size())
      throw std::invalid_argument("bowditch_check: eta set not connected");
    return set;
  };

  // local condition: close pairs get uniformly small eta sets
  for (int x = 0; x < n && rep.ok; ++x) {
    for (int y = x; y < n && rep.ok; ++y) {
      if (dist[x][y] > 1) continue;
      ++rep.pairs_checked;
      auto set = get_eta(x, y);
      int diam = 0;
      for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
          diam = std::max(diam, dist[set[i]][set[j]]);
      if (diam > D) {
        rep.ok = false;
        rep.violation = "diam(eta(" + std::to_string(x) + "," +
                        std::to_string(y) + ")) = " + std::to_string(diam) +
                        " > D";
      }
    }
  }
  if (!rep.ok) return rep;

  // tripod condition over (possibly sampled) triples
  long long total = static_cast<long long>(n) * n * n;
  Rng rng(opt.seed);
  auto check_triple = [&](int x, int y, int z) {
    ++rep.triples_checked;
    auto exy = get_eta(x, y);
    auto exz = get_eta(x, z);
    auto ezy = get_eta(z, y);
    std::vector<int> hull = exz;
    hull.insert(hull.end(), ezy.begin(), ezy.end());
    for (int w : exy) {
      int closest = -1;
      for (int h : hull) {
        int dwh = dist[w][h];
        if (closest < 0 || dwh < closest) closest = dwh;
      }
      if (closest > D) {
        rep.ok = false;
        rep.violation = "eta(" + std::to_string(x) + "," + std::to_string(y) +
                        ") escapes the D-hull through vertex " +
                        std::to_string(w);
        return;
      }
    }
  };
  if (total <= opt.max_triples) {
    for (int x = 0; x < n && rep.ok; ++x)
      for (int y = 0; y < n && rep.ok; ++y)
        for (int z = 0; z < n && rep.ok; ++z) check_triple(x, y, z);
  } else {
    for (long long i = 0; i < opt.max_triples && rep.ok; ++i) {
      int x = static_cast<int>(rng.below(n));
      int y = static_cast<int>(rng.below(n));
      int z = static_cast<int>(rng.below(n));
      check_triple(x, y, z);
    }
  }
  return rep;
}

std::vector<RectangleClass> classify_rectangles(
    const FiniteGraph& host, const coneoff::ConeOffMetric& cone,
    std::span<const median::FlatRectangle> rects, int K) {
  std::vector<RectangleClass> out;
  std::map<int, std::vector<int>> cone_dist;
  auto dist_from = [&](int v) -> const std::vector<int>& {
    auto it = cone_dist.find(v);
    if (it == cone_dist.end())
      it = cone_dist.emplace(v, cone.distances_from(v)).first;
    return it->second;
  };

  for (const auto& r : rects) {
    for (int cell : r.cells) host.check_vertex(cell);
    RectangleClass rc;
    rc.rectangle = r;

    auto hausdorff = [&](const std::vector<int>& A, const std::vector<int>& B) {
      int h = 0;
      for (int a : A) {
        int best = -1;
        const auto& da = dist_from(a);
        for (int b : B) {
          if (best < 0 || da[b] < best) best = da[b];
        }
        h = std::max(h, best);
      }
      for (int b : B) {
        int best = -1;
        const auto& db = dist_from(b);
        for (int a : A) {
          if (best < 0 || db[a] < best) best = db[a];
        }
        h = std::max(h, best);
      }
      return h;
    };

    std::vector<std::vector<int>> rows(r.b + 1), cols(r.a + 1);
    for (int j = 0; j <= r.b; ++j)
      for (int i = 0; i <= r.a; ++i) {
        rows[j].push_back(r.at(i, j));
        cols[i].push_back(r.at(i, j));
      }
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        rc.max_row_hausdorff =
            std::max(rc.max_row_hausdorff, hausdorff(rows[i], rows[j]));
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = i + 1; j < cols.size(); ++j)
        rc.max_col_hausdorff =
            std::max(rc.max_col_hausdorff, hausdorff(cols[i], cols[j]));

    bool horiz = rc.max_row_hausdorff <= K;
    bool vert = rc.max_col_hausdorff <= K;
    rc.thinness = horiz && vert ? RectangleThinness::both
                  : horiz      ? RectangleThinness::horizontal_thin
                  : vert       ? RectangleThinness::vertical_thin
                               : RectangleThinness::neither;
    out.push_back(std::move(rc));
  }
  return out;
}

std::optional<int> detour_length(const FiniteGraph& g, int x, int y,
                                 int center, int s) {
  if (s < 0) throw std::invalid_argument("detour_length: negative radius");
  auto dx = bfs_distances(g, x);
  auto dy = bfs_distances(g, y);
  auto dc = bfs_distances(g, center);
  if (dx[y] < 0) throw std::invalid_argument("detour_length: x, y disconnected");
  if (dx[center] + dc[y] != dx[y])
    throw std::invalid_argument("detour_length: center not on a geodesic");
  if (dc[x] <= s || dc[y] <= s)
    throw std::invalid_argument(
        "detour_length: an endpoint lies in the blocked closed ball");

  // BFS avoiding the closed ball around the center
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue;
  dist[x] = 0;
  queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (dist[w] >= 0 || dc[w] <= s) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  if (dist[y] < 0) return std::nullopt;
  return dist[y];
}

NoGentleValues nogentle_sequences(double n, int s) {
  if (n <= 1 || s < 1)
    throw std::invalid_argument("nogentle_sequences: need n > 1, s >= 1");
  NoGentleValues v;
  double ln = std::log10(n);
  v.r = std::pow(ln, 2.0);
  v.R = std::pow(ln, 2.0 * (s + 1));
  v.sigma = std::pow(ln, 2.0 * s + 3.0);
  v.R_below_half_n = v.R < n / 2.0;
  v.sigma_ratio = v.sigma / std::pow(n / ln, 1.0 / s);
  return v;
}

SphereGrowthReport sphere_growth_check(const FiniteGraph& tree, int root,
                                       const std::function<double(int)>& sigma,
                                       const coneoff::VertexMap& map) {
  if (map.domain->vertex_count() != tree.vertex_count())
    throw std::invalid_argument("sphere_growth_check: map domain mismatch");
  SphereGrowthReport rep;
  auto depth = bfs_distances(tree, root);
  int radius = *std::max_element(depth.begin(), depth.end());
  auto dimg = bfs_distances(*map.codomain, map.image[root]);

  rep.sphere_sizes.assign(radius + 1, 0);
  rep.max_image_distance.assign(radius + 1, 0);
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (depth[v] < 0) continue;
    ++rep.sphere_sizes[depth[v]];
    rep.max_image_distance[depth[v]] =
        std::max(rep.max_image_distance[depth[v]], dimg[map.image[v]]);
  }
  for (int lvl = 0; lvl <= radius; ++lvl) {
    if (rep.sphere_sizes[lvl] != (1LL << lvl)) rep.sphere_sizes_ok = false;
    if (rep.max_image_distance[lvl] < sigma(lvl) && !rep.first_violation)
      rep.first_violation = lvl;
  }
  return rep;
}

}  // namespace ggt::hyp
