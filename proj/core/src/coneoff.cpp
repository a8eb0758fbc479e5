#include "ggt/coneoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "ggt/util.hpp"

namespace ggt::coneoff {

Collection Collection::create(const FiniteGraph& host,
                              std::vector<std::vector<int>> members,
                              std::vector<MemberKind> kinds,
                              std::vector<std::string> tags) {
  Collection coll;
  for (auto& m : members) {
    if (m.empty()) throw std::invalid_argument("Collection: empty member");
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (int v : m) host.check_vertex(v);
    // members must induce connected subgraphs
    std::set<int> in(m.begin(), m.end());
    std::set<int> seen{m[0]};
    std::queue<int> q;
    q.push(m[0]);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : host.neighbors(a))
        if (in.count(b) && !seen.count(b)) {
          seen.insert(b);
          q.push(b);
        }
    }
    if (seen.size() != m.size())
      throw std::invalid_argument("Collection: member not connected");
  }
  std::vector<std::vector<int>> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("Collection: duplicate member");
  coll.members = std::move(members);
  coll.kinds = std::move(kinds);
  coll.tags = std::move(tags);
  if (coll.kinds.empty())
    coll.kinds.assign(coll.members.size(), MemberKind::custom);
  if (coll.kinds.size() != coll.members.size())
    throw std::invalid_argument("Collection: kind per member required");
  return coll;
}

int Collection::local_multiplicity(int host_vertices) const {
  std::vector<int> count(host_vertices, 0);
  for (const auto& m : members)
    for (int v : m) ++count[v];
  int n = 0;
  for (int c : count) n = std::max(n, c);
  return n;
}

FiniteGraph cone_off(const FiniteGraph& host, const Collection& coll) {
  std::vector<std::pair<int, int>> edges = host.edges();
  for (const auto& m : coll.members)
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        edges.emplace_back(m[i], m[j]);
  return FiniteGraph(host.vertex_count(), std::move(edges));
}

ConeOffMetric::ConeOffMetric(const FiniteGraph& host, const Collection& coll)
    : host_(&host), coll_(&coll), member_of_(host.vertex_count()) {
  for (int i = 0; i < coll.member_count(); ++i)
    for (int v : coll.members[i]) member_of_[v].push_back(i);
}

std::span<const int> ConeOffMetric::members_of(int v) const {
  host_->check_vertex(v);
  return member_of_[v];
}

std::vector<int> ConeOffMetric::distances_from(int src, int cap) const {
  host_->check_vertex(src);
  std::vector<int> dist(host_->vertex_count(), -1);
  std::vector<char> member_done(coll_->member_count(), 0);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (cap >= 0 && dist[v] >= cap) continue;
    for (int w : host_->neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    for (int m : member_of_[v]) {
      if (member_done[m]) continue;
      member_done[m] = 1;
      for (int w : coll_->members[m])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

VertexMap::VertexMap(const FiniteGraph& dom, const FiniteGraph& cod,
                     std::vector<int> img)
    : domain(&dom), codomain(&cod), image(std::move(img)) {
  if (static_cast<int>(image.size()) != dom.vertex_count())
    throw std::invalid_argument("VertexMap: image must be total");
  for (int v : image) cod.check_vertex(v);
}

int VertexMap::measure_lipschitz() const {
  // one codomain BFS per distinct image vertex that anchors an edge
  std::map<int, std::vector<int>> from;
  int lip = 0;
  for (auto [u, v] : domain->edges()) {
    int a = image[u], b = image[v];
    if (a == b) continue;
    auto it = from.find(a);
    if (it == from.end()) it = from.emplace(a, bfs_distances(*codomain, a)).first;
    int d = it->second[b];
    if (d < 0)
      throw std::runtime_error("VertexMap: edge image disconnected in codomain");
    lip = std::max(lip, d);
  }
  return lip;
}

namespace {

// shared fiber counting: dq = codomain distances from q (capped r2)
long long count_fiber(const FiniteGraph& domain, std::span<const int> image,
                      const std::vector<int>& dq, int p, int r1, int r2) {
  auto dp = bfs_distances(domain, p, r1);
  long long n = 0;
  for (int v = 0; v < domain.vertex_count(); ++v)
    if (dp[v] >= 0 && dp[v] <= r1 && dq[image[v]] >= 0 && dq[image[v]] <= r2)
      ++n;
  return n;
}

}  // namespace

long long fiber_count(const VertexMap& map, int p, int q, int r1, int r2) {
  if (r1 < 0 || r2 < 0) throw std::invalid_argument("fiber_count: negative radius");
  map.domain->check_vertex(p);
  map.codomain->check_vertex(q);
  auto dq = bfs_distances(*map.codomain, q, r2);
  return count_fiber(*map.domain, map.image, dq, p, r1, r2);
}

long long fiber_count(const FiniteGraph& domain, std::span<const int> image,
                      const ConeOffMetric& codomain, int p, int q, int r1,
                      int r2) {
  if (r1 < 0 || r2 < 0) throw std::invalid_argument("fiber_count: negative radius");
  domain.check_vertex(p);
  auto dq = codomain.distances_from(q, r2);
  return count_fiber(domain, image, dq, p, r1, r2);
}

namespace {

// Codomain adaptors provide a capped ball around a vertex as (vertex,dist)
// pairs; the profile core is shared between explicit graphs and cone-off
// metric views.
struct GraphCodomain {
  const FiniteGraph* g;
  int vertex_count() const { return g->vertex_count(); }
  void ball(int center, int cap, std::vector<std::pair<int, int>>& out) const {
    out.clear();
    auto d = bfs_distances(*g, center, cap);
    for (int v = 0; v < g->vertex_count(); ++v)
      if (d[v] >= 0 && d[v] <= cap) out.emplace_back(v, d[v]);
  }
};

struct MetricCodomain {
  const ConeOffMetric* m;
  int vertex_count() const { return m->host().vertex_count(); }
  void ball(int center, int cap, std::vector<std::pair<int, int>>& out) const {
    out.clear();
    auto d = m->distances_from(center, cap);
    for (int v = 0; v < m->host().vertex_count(); ++v)
      if (d[v] >= 0 && d[v] <= cap) out.emplace_back(v, d[v]);
  }
};

template <class Codomain>
GentlenessProfile profile_impl(const FiniteGraph& domain,
                               std::span<const int> image,
                               const Codomain& codomain,
                               const ProfileOptions& opt) {
  if (opt.r1max < 0 || opt.r2max < 0)
    throw std::invalid_argument("gentleness_profile: negative range");
  GentlenessProfile prof;
  prof.r1max = opt.r1max;
  prof.r2max = opt.r2max;
  prof.g.assign(opt.r1max + 1, std::vector<long long>(opt.r2max + 1, 0));

  // sampled centers: explicit list, or exhaustive (inner ball when the
  // domain is a generated ball)
  std::vector<int> centers = opt.centers;
  std::vector<int> ball_dist;
  if (opt.domain_ball) {
    ball_dist = bfs_distances(domain, opt.domain_ball->first);
  }
  if (centers.empty()) {
    for (int v = 0; v < domain.vertex_count(); ++v) {
      if (opt.domain_ball &&
          ball_dist[v] + opt.r1max > opt.domain_ball->second)
        continue;
      centers.push_back(v);
    }
    prof.sampling = opt.domain_ball ? "exhaustive-inner-ball" : "exhaustive";
  } else {
    prof.sampling = "centers[" + std::to_string(centers.size()) + "]";
  }
  std::set<std::pair<int, int>> undercovered;
  if (opt.domain_ball) {
    for (int p : centers) {
      int covered = opt.domain_ball->second - ball_dist[p];
      for (int r1 = covered + 1; r1 <= opt.r1max; ++r1)
        for (int r2 = 0; r2 <= opt.r2max; ++r2) undercovered.insert({r1, r2});
    }
  }

  int threads = std::max(1, opt.threads);
  int r1w = opt.r1max + 1, r2w = opt.r2max + 1;
  std::vector<std::vector<std::vector<long long>>> partial(
      threads,
      std::vector<std::vector<long long>>(r1w,
                                          std::vector<long long>(r2w, 0)));
  std::vector<int> owner(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i)
    owner[i] = static_cast<int>(i % threads);

  auto work = [&](int tid) {
    auto& table = partial[tid];
    // cnt[q][d1][d2], touched entries reset between centers
    std::vector<int> cnt(
        static_cast<std::size_t>(codomain.vertex_count()) * r1w * r2w, 0);
    std::vector<int> touched;
    std::vector<std::pair<int, int>> cod_ball;
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
      if (owner[ci] != tid) continue;
      int p = centers[ci];
      auto dp = bfs_distances(domain, p, opt.r1max);
      for (int x = 0; x < domain.vertex_count(); ++x) {
        if (dp[x] < 0 || dp[x] > opt.r1max) continue;
        codomain.ball(image[x], opt.r2max, cod_ball);
        for (auto [q, d2] : cod_ball) {
          std::size_t base = (static_cast<std::size_t>(q) * r1w + dp[x]) * r2w;
          if (cnt[base + d2] == 0) touched.push_back(static_cast<int>(q));
          ++cnt[base + d2];
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()),
                    touched.end());
      for (int q : touched) {
        // prefix sums over (d1, d2) give |B(p,r1) n fiber(q,r2)|
        long long acc[16][16];  // r1w, r2w <= 16 enforced below
        for (int d1 = 0; d1 < r1w; ++d1)
          for (int d2 = 0; d2 < r2w; ++d2) {
            std::size_t base =
                (static_cast<std::size_t>(q) * r1w + d1) * r2w + d2;
            long long v = cnt[base];
            if (d1 > 0) v += acc[d1 - 1][d2];
            if (d2 > 0) v += acc[d1][d2 - 1];
            if (d1 > 0 && d2 > 0) v -= acc[d1 - 1][d2 - 1];
            acc[d1][d2] = v;
            table[d1][d2] = std::max(table[d1][d2], v);
            cnt[base] = 0;
          }
      }
      touched.clear();
    }
  };
  if (opt.r1max >= 16 || opt.r2max >= 16)
    throw std::invalid_argument("gentleness_profile: ranges above 15 unsupported");
  parallel_for(0, threads, threads, work);

  for (int t = 0; t < threads; ++t)
    for (int d1 = 0; d1 < r1w; ++d1)
      for (int d2 = 0; d2 < r2w; ++d2)
        prof.g[d1][d2] = std::max(prof.g[d1][d2], partial[t][d1][d2]);

  prof.undercovered.assign(undercovered.begin(), undercovered.end());
  prof.eta_hat.assign(r2w, 0.0);
  if (opt.r1max >= 2) {
    for (int r2 = 0; r2 < r2w; ++r2) {
      long long top = prof.g[opt.r1max][r2];
      prof.eta_hat[r2] =
          top >= 1 ? std::log(static_cast<double>(top)) / std::log(double(opt.r1max))
                   : 0.0;
    }
  }
  return prof;
}

}  // namespace

GentlenessProfile gentleness_profile(const VertexMap& map,
                                     const ProfileOptions& opt) {
  return profile_impl(*map.domain, map.image, GraphCodomain{map.codomain},
                      opt);
}

GentlenessProfile gentleness_profile(const FiniteGraph& domain,
                                     std::span<const int> image,
                                     const ConeOffMetric& codomain,
                                     const ProfileOptions& opt) {
  return profile_impl(domain, image, MetricCodomain{&codomain}, opt);
}

BoundFamily BoundFamily::parse(const std::string& name) {
  BoundFamily f;
  if (name == "lin") {
    f.kind = Kind::lin;
    return f;
  }
  if (name == "exp") {
    f.kind = Kind::exp_bound;
    return f;
  }
  if (name.rfind("pol:", 0) == 0) {
    f.kind = Kind::poly;
    f.degree = std::atoi(name.c_str() + 4);
    if (f.degree < 0) throw std::invalid_argument("BoundFamily: bad degree");
    return f;
  }
  throw std::invalid_argument("BoundFamily: expected lin, exp or pol:k, got " +
                              name);
}

std::string BoundFamily::name() const {
  switch (kind) {
    case Kind::poly:
      return "pol:" + std::to_string(degree);
    case Kind::lin:
      return "lin";
    case Kind::exp_bound:
      return "exp";
  }
  return "?";
}

namespace {

constexpr long long kHuge = std::numeric_limits<long long>::max() / 4;

long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kHuge / b) return kHuge;
  return a * b;
}

long long sat_pow(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r >= kHuge) return kHuge;
  }
  return r;
}

bool cell_fits(const BoundFamily& f, long long c, int r1, int r2,
               long long g) {
  switch (f.kind) {
    case BoundFamily::Kind::poly:
      return g <= sat_mul(c, sat_pow(c * r1, f.degree));
    case BoundFamily::Kind::lin:
      return g <= sat_mul(c, sat_pow(c * r1, c * r2));
    case BoundFamily::Kind::exp_bound: {
      long double rhs =
          static_cast<long double>(c) * std::exp(static_cast<long double>(c) * r1);
      return static_cast<long double>(g) <= rhs;
    }
  }
  return false;
}

}  // namespace

std::optional<int> fit_constant(const GentlenessProfile& profile,
                                const BoundFamily& family, int cmax) {
  for (int c = 1; c <= cmax; ++c) {
    bool ok = true;
    for (int r1 = 1; r1 <= profile.r1max && ok; ++r1)
      for (int r2 = 1; r2 <= profile.r2max && ok; ++r2)
        if (!cell_fits(family, c, r1, r2, profile.g[r1][r2])) ok = false;
    if (ok) return c;
  }
  return std::nullopt;
}

namespace {

// geodesic layer structure of the cone-off between x and y
struct ConeDag {
  int n = -1;                       // cone distance
  std::vector<int> layer;           // per vertex: d_cone(x,v), -1 off DAG
  std::vector<int> on_dag;          // vertices with dx + dy == n
};

ConeDag cone_dag(const ConeOffMetric& m, int x, int y) {
  ConeDag dag;
  auto dx = m.distances_from(x);
  if (dx[y] < 0) return dag;
  auto dy = m.distances_from(y);
  dag.n = dx[y];
  dag.layer.assign(m.host().vertex_count(), -1);
  for (int v = 0; v < m.host().vertex_count(); ++v) {
    if (dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == dag.n) {
      dag.layer[v] = dx[v];
      dag.on_dag.push_back(v);
    }
  }
  return dag;
}

bool cone_adjacent(const ConeOffMetric& m, int u, int v) {
  if (m.host().has_edge(u, v)) return true;
  auto mu = m.members_of(u);
  auto mv = m.members_of(v);
  std::size_t i = 0, j = 0;
  while (i < mu.size() && j < mv.size()) {
    if (mu[i] == mv[j]) return true;
    if (mu[i] < mv[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

std::optional<SyllabicWitness> is_syllabic_pair(const FiniteGraph& host,
                                                const Collection& coll, int x,
                                                int y) {
  host.check_vertex(x);
  host.check_vertex(y);
  auto dhost = bfs_distances(host, x);
  if (dhost[y] < 0) return std::nullopt;
  if (x == y) return SyllabicWitness{{x}};
  ConeOffMetric m(host, coll);
  ConeDag dag = cone_dag(m, x, y);
  if (dag.n < 0) return std::nullopt;

  // min host length over the geodesic layer graph
  std::vector<std::vector<int>> layers(dag.n + 1);
  for (int v : dag.on_dag) layers[dag.layer[v]].push_back(v);
  std::map<int, long long> best;
  std::map<int, int> parent;
  best[x] = 0;
  for (int l = 0; l + 1 <= dag.n; ++l) {
    for (int u : layers[l]) {
      auto bu = best.find(u);
      if (bu == best.end()) continue;
      auto du = bfs_distances(host, u);
      for (int v : layers[l + 1]) {
        if (du[v] < 0 || !cone_adjacent(m, u, v)) continue;
        long long cand = bu->second + du[v];
        auto bv = best.find(v);
        if (bv == best.end() || cand < bv->second) {
          best[v] = cand;
          parent[v] = u;
        }
      }
    }
  }
  auto by = best.find(y);
  if (by == best.end() || by->second != dhost[y]) return std::nullopt;
  SyllabicWitness w;
  for (int v = y;; v = parent[v]) {
    w.cone_path.push_back(v);
    if (v == x) break;
  }
  std::reverse(w.cone_path.begin(), w.cone_path.end());
  return w;
}

StrongSyllabicReport is_strongly_syllabic_sample(
    const FiniteGraph& host, const Collection& coll,
    std::span<const std::pair<int, int>> pairs) {
  StrongSyllabicReport report;
  ConeOffMetric m(host, coll);
  for (auto [x, y] : pairs) {
    ++report.pairs_checked;
    if (x == y) continue;
    auto dhost = bfs_distances(host, x);
    if (dhost[y] < 0) continue;
    ConeDag dag = cone_dag(m, x, y);
    std::vector<std::vector<int>> layers(dag.n + 1);
    for (int v : dag.on_dag) layers[dag.layer[v]].push_back(v);
    // every geodesic-layer path must extend: the min and max piecewise host
    // lengths over the layer DAG both have to equal the host distance
    std::map<int, std::pair<long long, long long>> range;  // min, max
    range[x] = {0, 0};
    for (int l = 0; l + 1 <= dag.n; ++l) {
      for (int u : layers[l]) {
        auto ru = range.find(u);
        if (ru == range.end()) continue;
        auto du = bfs_distances(host, u);
        for (int v : layers[l + 1]) {
          if (du[v] < 0 || !cone_adjacent(m, u, v)) continue;
          auto [lo, hi] = ru->second;
          auto rv = range.find(v);
          if (rv == range.end())
            range[v] = {lo + du[v], hi + du[v]};
          else
            rv->second = {std::min(rv->second.first, lo + du[v]),
                          std::max(rv->second.second, hi + du[v])};
        }
      }
    }
    auto ry = range.find(y);
    if (ry == range.end() || ry->second.first != dhost[y] ||
        ry->second.second != dhost[y]) {
      report.ok = false;
      report.counterexample = {{x, y}};
      return report;
    }
  }
  return report;
}

ClosureReport check_parallel_closure(const FiniteGraph& host,
                                     const median::HyperplaneDecomposition& dec,
                                     const Collection& coll,
                                     ClosureVariant variant, int max_base_pairs,
                                     int max_partners, std::uint64_t seed) {
  ClosureReport report;
  Rng rng(seed);
  median::SectorCache cache(host, dec);

  // Classes crossed by one BFS geodesic; empty optional when a class
  // repeats (the pair is then skipped). The separating classes of a pair
  // are always a subset of any path's classes, so once the orientation
  // check below confirms every listed class genuinely separates, the list
  // is exactly the separation set.
  auto geodesic_classes = [&](int from, int to,
                              const std::vector<int>& dist_from)
      -> std::optional<std::vector<int>> {
    std::vector<int> classes;
    int cur = to;
    while (cur != from) {
      int next = -1;
      for (int nb : host.neighbors(cur))
        if (dist_from[nb] == dist_from[cur] - 1) {
          next = nb;
          break;
        }
      classes.push_back(dec.edge_class[host.edge_index(cur, next)]);
      cur = next;
    }
    std::sort(classes.begin(), classes.end());
    if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
      return std::nullopt;
    return classes;
  };

  // member membership lookup
  std::vector<std::vector<int>> member_of(host.vertex_count());
  for (int i = 0; i < coll.member_count(); ++i)
    for (int v : coll.members[i]) member_of[v].push_back(i);
  auto share_member = [&](int u, int v) {
    const auto& a = member_of[u];
    const auto& b = member_of[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j])
        ++i;
      else
        ++j;
    }
    return false;
  };

  // base pairs (x,y) inside members, sampled by weight without
  // materializing the full pair list
  std::vector<std::pair<int, int>> base;
  {
    std::vector<long long> cum;
    long long total = 0;
    for (const auto& m : coll.members) {
      long long n = static_cast<long long>(m.size());
      total += n * (n - 1) / 2;
      cum.push_back(total);
    }
    if (total <= max_base_pairs) {
      for (const auto& m : coll.members)
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = i + 1; j < m.size(); ++j)
            base.emplace_back(m[i], m[j]);
    } else {
      std::set<std::pair<int, int>> seen;
      while (static_cast<int>(base.size()) < max_base_pairs) {
        long long t = static_cast<long long>(rng.below(total));
        std::size_t mi =
            std::lower_bound(cum.begin(), cum.end(), t + 1) - cum.begin();
        const auto& m = coll.members[mi];
        int i = static_cast<int>(rng.below(m.size()));
        int j = static_cast<int>(rng.below(m.size()));
        if (i == j) continue;
        auto pair = std::minmax(m[i], m[j]);
        if (seen.insert({pair.first, pair.second}).second)
          base.emplace_back(pair.first, pair.second);
      }
    }
  }

  for (auto [x, y] : base) {
    auto dist_x = bfs_distances(host, x);
    int dxy = dist_x[y];
    if (dxy <= 0) continue;
    auto base_classes = geodesic_classes(x, y, dist_x);
    if (!base_classes) continue;
    // certify that the listed classes are exactly the separation set
    bool base_clean = true;
    for (int cls : *base_classes) {
      const auto& sp = cache.get(cls);
      if (sp.component_of[x] == sp.component_of[y]) {
        base_clean = false;
        break;
      }
    }
    if (!base_clean) continue;

    // partner candidates a, then b at the right distance with matching
    // classes and orientation
    std::vector<int> anchors;
    if (host.vertex_count() <= max_partners) {
      anchors.resize(host.vertex_count());
      for (int v = 0; v < host.vertex_count(); ++v) anchors[v] = v;
    } else {
      anchors = rng.sample_distinct(host.vertex_count(), max_partners);
    }
    for (int a : anchors) {
      auto dist_a = bfs_distances(host, a);
      for (int b = 0; b < host.vertex_count(); ++b) {
        if (dist_a[b] != dxy) continue;
        auto cand_classes = geodesic_classes(a, b, dist_a);
        if (!cand_classes || *cand_classes != *base_classes) continue;
        // parallel iff every shared class separates (a,b) with a on the
        // sector of x; other classes separate neither pair since both
        // class lists are exact separation sets
        bool oriented = true;
        for (int cls : *base_classes) {
          const auto& sp = cache.get(cls);
          if (sp.component_of[a] != sp.component_of[x] ||
              sp.component_of[a] == sp.component_of[b]) {
            oriented = false;
            break;
          }
        }
        if (!oriented) continue;
        ++report.pairs_checked;
        int second = variant == ClosureVariant::image_pair ? b : y;
        if (!share_member(a, second)) {
          report.ok = false;
          report.counterexample = {{x, y, a, b}};
          return report;
        }
      }
    }
  }
  return report;
}

std::vector<long long> collection_growth(const FiniteGraph& host,
                                         const Collection& coll, int rmax) {
  if (rmax < 0) throw std::invalid_argument("collection_growth: negative range");
  std::vector<long long> growth(rmax + 1, 0);
  for (const auto& m : coll.members) {
    std::vector<char> in_member(host.vertex_count(), 0);
    for (int v : m) in_member[v] = 1;
    for (int x : m) {
      auto d = bfs_distances(host, x, rmax);
      std::vector<long long> layer(rmax + 1, 0);
      for (int v = 0; v < host.vertex_count(); ++v)
        if (in_member[v] && d[v] >= 0 && d[v] <= rmax) ++layer[d[v]];
      long long acc = 0;
      for (int r = 0; r <= rmax; ++r) {
        acc += layer[r];
        growth[r] = std::max(growth[r], acc);
      }
    }
  }
  return growth;
}

FiniteGraph horoball(const FiniteGraph& base, int levels) {
  if (levels < 0) throw std::invalid_argument("horoball: negative level count");
  int n = base.vertex_count();
  auto dist = all_pairs_distances(base);
  std::vector<std::pair<int, int>> edges;
  for (int lvl = 0; lvl <= levels; ++lvl) {
    long long reach = 1LL << std::min(lvl, 62);
    for (int x = 0; x < n; ++x) {
      if (lvl + 1 <= levels)
        edges.emplace_back(horoball_vertex(base, x, lvl),
                           horoball_vertex(base, x, lvl + 1));
      for (int y = x + 1; y < n; ++y)
        if (dist[x][y] >= 0 && dist[x][y] <= reach)
          edges.emplace_back(horoball_vertex(base, x, lvl),
                             horoball_vertex(base, y, lvl));
    }
  }
  return FiniteGraph(n * (levels + 1), std::move(edges));
}

}  // namespace ggt::coneoff
