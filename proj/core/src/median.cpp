#include "ggt/median.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ggt::median {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Calls fn(w, x, y, z) for induced 4-cycles w-x-y-z (each square shows up
// under both of its diagonals).
template <class Fn>
void for_each_induced_square(const FiniteGraph& g, Fn&& fn) {
  std::vector<std::tuple<int, int, int>> tr;  // (w, y, common neighbour)
  for (int x = 0; x < g.vertex_count(); ++x) {
    auto nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int w = nb[i], y = nb[j];
        if (!g.has_edge(w, y)) tr.emplace_back(w, y, x);
      }
  }
  std::sort(tr.begin(), tr.end());
  std::size_t lo = 0;
  while (lo < tr.size()) {
    std::size_t hi = lo;
    while (hi < tr.size() &&
           std::get<0>(tr[hi]) == std::get<0>(tr[lo]) &&
           std::get<1>(tr[hi]) == std::get<1>(tr[lo]))
      ++hi;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < hi; ++j) {
        int x = std::get<2>(tr[i]), z = std::get<2>(tr[j]);
        if (!g.has_edge(x, z))
          fn(std::get<0>(tr[lo]), x, std::get<1>(tr[lo]), z);
      }
    lo = hi;
  }
}

}  // namespace

HyperplaneDecomposition hyperplanes(const FiniteGraph& g, HyperplaneMode mode,
                                    const std::vector<bool>& boundary) {
  if (!boundary.empty() &&
      static_cast<int>(boundary.size()) != g.vertex_count())
    throw std::invalid_argument("hyperplanes: boundary size mismatch");

  UnionFind uf(g.edge_count());
  for_each_induced_square(g, [&](int w, int x, int y, int z) {
    uf.unite(g.edge_index(w, x), g.edge_index(y, z));
    uf.unite(g.edge_index(x, y), g.edge_index(z, w));
  });
  if (mode == HyperplaneMode::quasi_median) {
    // edges of a common 3-cycle fall in one class
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      auto nu = g.neighbors(u);
      for (int w : nu) {
        if (w == v) continue;
        if (g.has_edge(v, w)) {
          uf.unite(e, g.edge_index(u, w));
          uf.unite(e, g.edge_index(v, w));
        }
      }
    }
  }

  HyperplaneDecomposition dec;
  dec.mode = mode;
  dec.edge_class.assign(g.edge_count(), -1);
  std::vector<int> root_to_class(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    int r = uf.find(e);
    if (root_to_class[r] < 0) {
      root_to_class[r] = dec.class_count++;
      dec.class_edges.emplace_back();
    }
    dec.edge_class[e] = root_to_class[r];
    dec.class_edges[dec.edge_class[e]].push_back(e);
  }
  dec.interior.assign(dec.class_count, true);
  if (!boundary.empty()) {
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      if (boundary[u] || boundary[v]) dec.interior[dec.edge_class[e]] = false;
    }
  }
  return dec;
}

SectorPartition sectors(const FiniteGraph& g,
                        const HyperplaneDecomposition& dec, int cls) {
  if (cls < 0 || cls >= dec.class_count)
    throw std::out_of_range("sectors: unknown hyperplane id");
  SectorPartition sp;
  sp.hyperplane = cls;
  sp.component_of.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (sp.component_of[v] >= 0) continue;
    int c = sp.component_count++;
    sp.components.emplace_back();
    std::queue<int> q;
    sp.component_of[v] = c;
    q.push(v);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      sp.components[c].push_back(a);
      for (int b : g.neighbors(a)) {
        if (sp.component_of[b] >= 0) continue;
        if (dec.edge_class[g.edge_index(a, b)] == cls) continue;
        sp.component_of[b] = c;
        q.push(b);
      }
    }
    std::sort(sp.components[c].begin(), sp.components[c].end());
  }
  return sp;
}

const SectorPartition& SectorCache::get(int cls) {
  if (cls < 0 || cls >= static_cast<int>(cache_.size()))
    throw std::out_of_range("SectorCache: unknown hyperplane id");
  if (!cache_[cls]) cache_[cls] = sectors(*g_, *dec_, cls);
  return *cache_[cls];
}

std::vector<int> separating_hyperplanes(const FiniteGraph& g,
                                        const HyperplaneDecomposition& dec,
                                        int x, int y) {
  SectorCache cache(g, dec);
  return separating_hyperplanes(cache, x, y, dec.class_count);
}

std::vector<int> separating_hyperplanes(SectorCache& cache, int x, int y,
                                        int class_count) {
  std::vector<int> out;
  for (int c = 0; c < class_count; ++c) {
    const auto& sp = cache.get(c);
    if (sp.component_of[x] != sp.component_of[y]) out.push_back(c);
  }
  return out;
}

GeodesicCheck is_geodesic(const FiniteGraph& g,
                          const HyperplaneDecomposition& dec,
                          std::span<const int> path) {
  if (path.empty()) throw std::invalid_argument("is_geodesic: empty path");
  std::set<int> seen;
  GeodesicCheck check;
  check.no_repeated_class = true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    int e = g.edge_index(path[i], path[i + 1]);
    if (e < 0)
      throw std::invalid_argument("is_geodesic: consecutive vertices not adjacent");
    if (!seen.insert(dec.edge_class[e]).second) check.no_repeated_class = false;
  }
  auto d = distance(g, path.front(), path.back());
  check.length_is_distance =
      d && *d == static_cast<int>(path.size()) - 1;
  return check;
}

std::optional<int> median_vertex(const FiniteGraph& g, int x, int y, int z) {
  auto dx = bfs_distances(g, x);
  auto dy = bfs_distances(g, y);
  auto dz = bfs_distances(g, z);
  if (dx[y] < 0 || dx[z] < 0 || dy[z] < 0) return std::nullopt;
  int found = -1;
  for (int m = 0; m < g.vertex_count(); ++m) {
    if (dx[m] < 0) continue;
    if (dx[m] + dy[m] == dx[y] && dx[m] + dz[m] == dx[z] &&
        dy[m] + dz[m] == dy[z]) {
      if (found >= 0) return std::nullopt;  // not unique
      found = m;
    }
  }
  if (found < 0) return std::nullopt;
  return found;
}

MedianTriangle median_triangle(const FiniteGraph& g, int x, int y, int z) {
  auto dx = bfs_distances(g, x);
  auto dy = bfs_distances(g, y);
  auto dz = bfs_distances(g, z);
  int dxy = dx[y], dxz = dx[z], dyz = dy[z];
  if (dxy < 0 || dxz < 0 || dyz < 0)
    throw std::invalid_argument("median_triangle: vertices not connected");

  // corner i lies on geodesics from x_i to both other corners' anchors
  std::vector<int> c1, c2, c3;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dx[v] < 0) continue;
    if (dx[v] + dy[v] == dxy && dx[v] + dz[v] == dxz) c1.push_back(v);
    if (dy[v] + dx[v] == dxy && dy[v] + dz[v] == dyz) c2.push_back(v);
    if (dz[v] + dx[v] == dxz && dz[v] + dy[v] == dyz) c3.push_back(v);
  }
  std::map<int, std::vector<int>> from;  // pairwise distances on demand
  auto dist_from = [&](int v) -> const std::vector<int>& {
    auto it = from.find(v);
    if (it == from.end()) it = from.emplace(v, bfs_distances(g, v)).first;
    return it->second;
  };

  // smallest triangle = least perimeter d(y1,y2)+d(y2,y3)+d(y3,y1) among
  // triples satisfying the betweenness equations; (x,y,z) itself always
  // qualifies, so a minimum exists
  MedianTriangle best;
  int best_perimeter = -1;
  int best_count = 0;
  for (int a : c1) {
    for (int b : c2) {
      int d_ab = dist_from(a)[b];
      if (dx[a] + d_ab + dy[b] != dxy) continue;
      for (int c : c3) {
        int d_ac = dist_from(a)[c];
        int d_bc = dist_from(b)[c];
        if (dx[a] + d_ac + dz[c] != dxz) continue;
        if (dy[b] + d_bc + dz[c] != dyz) continue;
        int perimeter = d_ab + d_bc + d_ac;
        if (best_perimeter < 0 || perimeter < best_perimeter) {
          best_perimeter = perimeter;
          best.corners = {a, b, c};
          best_count = 1;
        } else if (perimeter == best_perimeter) {
          ++best_count;
        }
      }
    }
  }
  best.unique = best_count == 1;
  return best;
}

std::optional<int> gate(const FiniteGraph& g, int x, std::span<const int> Y) {
  if (Y.empty()) throw std::invalid_argument("gate: empty target set");
  // target must induce a connected subgraph
  std::set<int> yset(Y.begin(), Y.end());
  {
    std::queue<int> q;
    std::set<int> seen;
    q.push(Y[0]);
    seen.insert(Y[0]);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : g.neighbors(a))
        if (yset.count(b) && !seen.count(b)) {
          seen.insert(b);
          q.push(b);
        }
    }
    if (seen.size() != yset.size())
      throw std::invalid_argument("gate: target set not connected");
  }
  auto dx = bfs_distances(g, x);
  for (int y : Y) {
    auto dy = bfs_distances(g, y);
    bool ok = true;
    for (int w : Y)
      if (dx[w] != dx[y] + dy[w]) {
        ok = false;
        break;
      }
    if (ok) return y;  // at most one vertex can satisfy this
  }
  return std::nullopt;
}

bool parallel_pairs(SectorCache& cache, int class_count, int a, int b, int x,
                    int y) {
  for (int c = 0; c < class_count; ++c) {
    const auto& sp = cache.get(c);
    int ca = sp.component_of[a], cb = sp.component_of[b];
    int cx = sp.component_of[x], cy = sp.component_of[y];
    // {sector containing a but not b} must equal {sector containing x but
    // not y}: both empty, or both the single sector of a resp. x
    if (ca == cb) {
      if (cx != cy) return false;
    } else {
      if (cx == cy || cx != ca) return false;
    }
  }
  return true;
}

bool parallel_pairs(const FiniteGraph& g, const HyperplaneDecomposition& dec,
                    int a, int b, int x, int y) {
  SectorCache cache(g, dec);
  return parallel_pairs(cache, dec.class_count, a, b, x, y);
}

std::vector<int> interval(const FiniteGraph& g, int x, int y) {
  auto dx = bfs_distances(g, x);
  auto dy = bfs_distances(g, y);
  if (dx[y] < 0) throw std::invalid_argument("interval: endpoints not connected");
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == dx[y]) out.push_back(v);
  return out;
}

std::optional<std::vector<int>> transport_geodesic(
    const FiniteGraph& g, const HyperplaneDecomposition& dec,
    std::span<const int> geodesic, int x) {
  if (geodesic.empty()) return std::nullopt;
  std::vector<int> out{x};
  int cur = x;
  for (std::size_t i = 0; i + 1 < geodesic.size(); ++i) {
    int e = g.edge_index(geodesic[i], geodesic[i + 1]);
    if (e < 0)
      throw std::invalid_argument("transport_geodesic: input is not a path");
    int cls = dec.edge_class[e];
    int next = -1;
    for (int nb : g.neighbors(cur)) {
      if (dec.edge_class[g.edge_index(cur, nb)] == cls) {
        if (next >= 0) return std::nullopt;  // ambiguous crossing
        next = nb;
      }
    }
    if (next < 0) return std::nullopt;
    out.push_back(next);
    cur = next;
  }
  return out;
}

bool classes_transverse(const FiniteGraph& g,
                        const HyperplaneDecomposition& dec, int c1, int c2) {
  if (c1 == c2) return false;
  bool found = false;
  for_each_induced_square(g, [&](int w, int x, int y, int z) {
    if (found) return;
    int e1 = dec.edge_class[g.edge_index(w, x)];
    int e2 = dec.edge_class[g.edge_index(x, y)];
    if ((e1 == c1 && e2 == c2) || (e1 == c2 && e2 == c1)) found = true;
  });
  return found;
}

namespace {

// canonical key of a rectangle embedding under grid symmetries
std::vector<int> rect_key(const FlatRectangle& r) {
  std::vector<std::vector<int>> variants;
  auto add = [&](int a, int b, auto&& cell) {
    std::vector<int> flat;
    flat.reserve((a + 1) * (b + 1) + 2);
    flat.push_back(a);
    flat.push_back(b);
    for (int j = 0; j <= b; ++j)
      for (int i = 0; i <= a; ++i) flat.push_back(cell(i, j));
    variants.push_back(std::move(flat));
  };
  for (int fi = 0; fi < 2; ++fi)
    for (int fj = 0; fj < 2; ++fj) {
      add(r.a, r.b, [&](int i, int j) {
        return r.at(fi ? r.a - i : i, fj ? r.b - j : j);
      });
      add(r.b, r.a, [&](int i, int j) {  // transpose
        return r.at(fj ? r.a - j : j, fi ? r.b - i : i);
      });
    }
  return *std::min_element(variants.begin(), variants.end());
}

}  // namespace

std::vector<FlatRectangle> flat_rectangles(const FiniteGraph& g, int a_max,
                                           int b_max) {
  auto dist = all_pairs_distances(g);
  std::vector<FlatRectangle> out;
  std::set<std::vector<int>> seen;

  for (int a = 1; a <= a_max; ++a) {
    for (int b = 1; b <= b_max; ++b) {
      int cols = a + 1, rows = b + 1;
      std::vector<int> cell(cols * rows, -1);
      std::vector<char> used(g.vertex_count(), 0);
      auto idx = [cols](int i, int j) { return j * cols + i; };

      // fill row-major; candidate must sit at the right distance from all
      // settled cells
      auto consistent = [&](int pos, int v) {
        int i = pos % cols, j = pos / cols;
        for (int p = 0; p < pos; ++p) {
          int pi = p % cols, pj = p / cols;
          int want = std::abs(pi - i) + std::abs(pj - j);
          if (dist[cell[p]][v] != want) return false;
        }
        return true;
      };

      auto emit = [&]() {
        FlatRectangle r;
        r.a = a;
        r.b = b;
        r.cells = cell;
        auto key = rect_key(r);
        if (seen.insert(std::move(key)).second) out.push_back(std::move(r));
      };

      std::vector<int> order(cols * rows);
      std::iota(order.begin(), order.end(), 0);
      // depth-first over cells
      std::vector<int> cursor(cols * rows, -1);
      int pos = 0;
      while (pos >= 0) {
        if (pos == cols * rows) {
          emit();
          --pos;
          continue;
        }
        int i = pos % cols, j = pos / cols;
        int start = cursor[pos] + 1;
        if (cursor[pos] >= 0) {
          used[cell[pos]] = 0;
          cell[pos] = -1;
        }
        // candidates: neighbours of the left/lower cell, or any vertex at
        // the corner
        int found = -1;
        if (i == 0 && j == 0) {
          for (int v = start; v < g.vertex_count(); ++v)
            if (!used[v]) {
              found = v;
              break;
            }
          cursor[pos] = found;
        } else {
          int anchor = i > 0 ? cell[idx(i - 1, j)] : cell[idx(i, j - 1)];
          auto nb = g.neighbors(anchor);
          for (int t = start; t < static_cast<int>(nb.size()); ++t) {
            int v = nb[t];
            if (!used[v] && consistent(pos, v)) {
              found = t;
              break;
            }
          }
          cursor[pos] = found;
          if (found >= 0) found = nb[found];
        }
        if (found < 0) {
          cursor[pos] = -1;
          --pos;
          continue;
        }
        cell[pos] = found;
        used[found] = 1;
        ++pos;
        if (pos <= cols * rows - 1) cursor[pos] = -1;
      }
    }
  }
  return out;
}

StaircaseSearch staircase_witness(const FiniteGraph& g,
                                  std::span<const int> geodesic, int z) {
  StaircaseSearch result;
  int L = static_cast<int>(geodesic.size()) - 1;
  if (L < 0) throw std::invalid_argument("staircase_witness: empty path");
  for (int i = 0; i < L; ++i)
    if (g.edge_index(geodesic[i], geodesic[i + 1]) < 0)
      throw std::invalid_argument("staircase_witness: input is not a path");

  auto dz = bfs_distances(g, z);

  // degenerate case: z on the path itself
  for (int k = 0; k <= L; ++k) {
    if (geodesic[k] == z) {
      Staircase s;
      s.a = 0;
      bool forward = (L - k) >= k;
      s.b = forward ? L - k : k;
      s.heights = {s.b};
      s.cols.resize(1);
      for (int j = 0; j <= s.b; ++j)
        s.cols[0].push_back(forward ? geodesic[k + j] : geodesic[k - j]);
      result.found = std::move(s);
      return result;
    }
  }

  auto d = all_pairs_distances(g);

  for (int i = 0; i <= L; ++i) {
    for (int j = i + 1; j <= L; ++j) {
      int a = dz[geodesic[i]], b = dz[geodesic[j]];
      if (a <= 0 || b <= 0) continue;
      if (a + b != j - i) continue;
      ++result.shapes_tried;

      // the broken path's position in the grid is forced by distances to z
      int steps = j - i;
      std::vector<int> u(steps + 1), v(steps + 1);
      bool ok = true;
      for (int k = 0; k <= steps && ok; ++k) {
        int dzk = dz[geodesic[i + k]];
        int twice_u = a + dzk - k;
        if (twice_u < 0 || twice_u % 2) {
          ok = false;
          break;
        }
        u[k] = twice_u / 2;
        v[k] = dzk - u[k];
        if (u[k] < 0 || u[k] > a || v[k] < 0 || v[k] > b) ok = false;
      }
      if (!ok || u[0] != a || v[0] != 0 || u[steps] != 0 || v[steps] != b)
        continue;
      for (int k = 0; k + 1 <= steps && ok; ++k) {
        bool left = u[k + 1] == u[k] - 1 && v[k + 1] == v[k];
        bool up = u[k + 1] == u[k] && v[k + 1] == v[k] + 1;
        if (!left && !up) ok = false;
      }
      if (!ok) continue;

      std::vector<int> height(a + 1, -1);
      for (int k = 0; k <= steps; ++k)
        height[u[k]] = std::max(height[u[k]], v[k]);
      for (int c = 0; c <= a && ok; ++c)
        if (height[c] < 0) ok = false;
      if (!ok) continue;

      std::vector<std::vector<int>> cols(a + 1);
      for (int c = 0; c <= a; ++c) cols[c].assign(height[c] + 1, -1);
      for (int k = 0; k <= steps; ++k) cols[u[k]][v[k]] = geodesic[i + k];
      if (cols[0][0] == -1) cols[0][0] = z;
      if (cols[0][0] != z) continue;

      // square-completion fill, right-to-left, top-to-bottom; small
      // branching when several candidates complete a square
      std::vector<std::pair<int, int>> slots;
      for (int c = a - 1; c >= 0; --c)
        for (int r = height[c]; r >= 0; --r)
          if (cols[c][r] < 0) slots.emplace_back(c, r);

      auto fill = [&](auto&& self, std::size_t sp) -> bool {
        if (sp == slots.size()) return true;
        auto [cu, cv] = slots[sp];
        // complete the square whose other three corners are already set
        int right = cols[cu + 1][cv];
        int upper = cols[cu][cv + 1];
        int diag = cols[cu + 1][cv + 1];
        for (int w : g.neighbors(right)) {
          if (w == diag || w == upper) continue;
          if (!g.has_edge(w, upper)) continue;
          if (g.has_edge(w, diag)) continue;
          if (cu == 0 && cv == 0 && w != z) continue;
          cols[cu][cv] = w;
          if (self(self, sp + 1)) return true;
          cols[cu][cv] = -1;
        }
        return false;
      };
      if (!fill(fill, 0)) continue;

      // verify the embedding is isometric on all cell pairs
      std::vector<std::pair<std::pair<int, int>, int>> cells;
      for (int c = 0; c <= a; ++c)
        for (int r = 0; r <= height[c]; ++r)
          cells.push_back({{c, r}, cols[c][r]});
      bool iso = true;
      for (std::size_t p = 0; p < cells.size() && iso; ++p)
        for (std::size_t q = p + 1; q < cells.size() && iso; ++q) {
          int want = std::abs(cells[p].first.first - cells[q].first.first) +
                     std::abs(cells[p].first.second - cells[q].first.second);
          if (d[cells[p].second][cells[q].second] != want) iso = false;
        }
      if (!iso) continue;

      Staircase s;
      s.a = a;
      s.b = b;
      s.heights = std::move(height);
      s.cols = std::move(cols);
      result.found = std::move(s);
      return result;
    }
  }
  return result;
}

}  // namespace ggt::median
