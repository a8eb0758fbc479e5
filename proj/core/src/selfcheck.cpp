#include "ggt/selfcheck.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>

#include "ggt/coneoff.hpp"
#include "ggt/gp.hpp"
#include "ggt/graph.hpp"
#include "ggt/hyp.hpp"
#include "ggt/lamp.hpp"
#include "ggt/median.hpp"
#include "ggt/pattern.hpp"
#include "ggt/util.hpp"

namespace ggt::selfcheck {

namespace {

int g_threads = 1;

struct Stopwatch {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

CriterionResult finish(int id, const std::string& name, bool pass,
                       std::string detail, const Stopwatch& sw) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.pass = pass;
  r.detail = std::move(detail);
  r.seconds = sw.seconds();
  return r;
}

// cosets of the inclusion-maximal polynomially-growing standard parabolic
// subgroups, intersected with the ball
coneoff::Collection poly_coset_collection(const gp::GraphProductSpec& spec,
                                          const gp::GroupBall& ball) {
  std::vector<std::vector<int>> members;
  for (const auto& lambda : gp::maximal_polynomial_lambdas(spec))
    for (auto& m : gp::coset_members(spec, ball, lambda))
      members.push_back(std::move(m));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return coneoff::Collection::create(ball.graph, std::move(members), {}, {});
}

coneoff::Collection vertex_group_coset_collection(
    const gp::GraphProductSpec& spec, const gp::GroupBall& ball) {
  std::vector<std::vector<int>> members;
  for (int v = 0; v < spec.vertex_count(); ++v) {
    std::vector<int> lambda{v};
    for (auto& m : gp::coset_members(spec, ball, lambda))
      members.push_back(std::move(m));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return coneoff::Collection::create(ball.graph, std::move(members), {}, {});
}

std::vector<int> identity_image(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return img;
}

}  // namespace

// 1. syllable_length agrees with the syllable-ball BFS distance for every
//    graph product on <= 4 vertices with cyclic groups of order <= 3 and
//    every input word of length <= 5
CriterionResult normal_form_oracle() {
  Stopwatch sw;
  struct Spec {
    FiniteGraph graph;
    unsigned assign;
  };
  std::vector<Spec> specs;
  for (int n = 1; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask & (1u << bit)) edges.emplace_back(u, v);
      FiniteGraph graph(n, edges);
      for (unsigned assign = 0; assign < (1u << n); ++assign)
        specs.push_back({graph, assign});
    }
  }

  std::atomic<long long> words_checked{0};
  std::atomic<bool> ok{true};
  std::mutex detail_mutex;
  std::string failure;

  parallel_for(0, static_cast<int>(specs.size()), g_threads, [&](int si) {
    if (!ok) return;
    const auto& item = specs[si];
    int n = item.graph.vertex_count();
    std::vector<gp::VertexGroupSpec> groups;
    for (int v = 0; v < n; ++v)
      groups.push_back(
          gp::VertexGroupSpec{(item.assign >> v) & 1 ? 3 : 2, 0, {1}});
    gp::GraphProductSpec spec(item.graph, groups);
    auto ball = gp::qm_ball(spec, 5);

    // alphabet of all nontrivial syllables
    std::vector<gp::Syllable> alphabet;
    for (int v = 0; v < n; ++v)
      for (int e : spec.nontrivial_elements(v)) alphabet.push_back({v, e});

    std::vector<gp::Syllable> word;
    long long local = 0;
    auto rec = [&](auto&& self) -> bool {
      auto w = gp::normalize(spec, word);
      auto id = ball.index_of(w);
      ++local;
      if (!id || ball.dist[*id] != w.length()) {
        std::scoped_lock lock(detail_mutex);
        failure = "mismatch on spec " + std::to_string(si);
        ok = false;
        return false;
      }
      if (word.size() == 5) return true;
      for (const auto& s : alphabet) {
        word.push_back(s);
        if (!self(self)) return false;
        word.pop_back();
      }
      return true;
    };
    rec(rec);
    words_checked += local;
  });

  std::ostringstream detail;
  detail << specs.size() << " products, " << words_checked.load()
         << " words checked";
  if (!ok) detail << "; " << failure;
  return finish(1, "normal-form oracle equivalence", ok, detail.str(), sw);
}

// 2. distance equals the number of separating hyperplane classes on the
//    3-cube and on truncated order-two product balls, over all pairs whose
//    separating classes are interior
CriterionResult hyperplane_distance_identity() {
  Stopwatch sw;
  bool ok = true;
  std::ostringstream detail;

  auto run_host = [&](const std::string& name, const gp::GroupBall& ball) {
    auto dec = median::hyperplanes(
        ball.graph, median::HyperplaneMode::quasi_median, ball.boundary());
    median::SectorCache cache(ball.graph, dec);
    auto d = all_pairs_distances(ball.graph);
    long long checked = 0, skipped = 0;
    for (int x = 0; x < ball.graph.vertex_count() && ok; ++x)
      for (int y = x + 1; y < ball.graph.vertex_count(); ++y) {
        auto sep = median::separating_hyperplanes(cache, x, y, dec.class_count);
        bool all_interior = true;
        for (int c : sep)
          if (!dec.interior[c]) all_interior = false;
        if (!all_interior) {
          ++skipped;
          continue;
        }
        ++checked;
        if (static_cast<int>(sep.size()) != d[x][y]) {
          ok = false;
          detail << name << ": pair (" << x << "," << y << ") has " << sep.size()
                 << " separating classes at distance " << d[x][y] << "; ";
          break;
        }
      }
    detail << name << ": " << checked << " pairs exact (" << skipped
           << " boundary-skipped); ";
    if (checked == 0) ok = false;
  };

  run_host("(Z2)^3 cube", gp::qm_ball(gp::racg(complete_graph(3)), 3));
  run_host("C(P3) ball R4", gp::qm_ball(gp::racg(path_graph(3)), 4));
  run_host("C(P4) ball R4", gp::qm_ball(gp::racg(path_graph(4)), 4));
  run_host("C(star) ball R4",
           gp::qm_ball(gp::racg(join(empty_graph(1), empty_graph(3))), 4));
  run_host("C(P5) ball R4", gp::qm_ball(gp::racg(path_graph(5)), 4));

  return finish(2, "hyperplane distance identity", ok, detail.str(), sw);
}

// 3. the free-group coset cone-off profile is (C r1)^(C r2)-bounded with a
//    small fitted C, and each cell obeys the counting certificate
//    (N * gamma(r1))^(2 r2)
CriterionResult free_group_coneoff_profile() {
  Stopwatch sw;
  auto spec = gp::free_group(2, 8);
  auto ball = gp::cayley_ball(spec, 8);
  auto coll = vertex_group_coset_collection(spec, ball);
  coneoff::ConeOffMetric metric(ball.graph, coll);

  coneoff::ProfileOptions opt;
  opt.r1max = 6;
  opt.r2max = 3;
  opt.domain_ball = {{0, 8}};
  opt.threads = g_threads;
  auto img = identity_image(ball.graph.vertex_count());
  auto prof = coneoff::gentleness_profile(ball.graph, img, metric, opt);

  auto fitted = coneoff::fit_constant(prof, coneoff::BoundFamily::parse("lin"));
  auto growth = coneoff::collection_growth(ball.graph, coll, 6);
  int big_n = coll.local_multiplicity(ball.graph.vertex_count());

  bool ok = true;
  std::ostringstream detail;
  detail << "|B|=" << ball.graph.vertex_count() << ", fitted lin C="
         << (fitted ? std::to_string(*fitted) : std::string("inf"));
  if (!fitted || *fitted > 4) ok = false;

  if (big_n != 2) {
    ok = false;
    detail << "; local multiplicity " << big_n << " != 2";
  }
  for (int r = 1; r <= 6; ++r)
    if (growth[r] != 2 * r + 1) {
      ok = false;
      detail << "; gamma(" << r << ")=" << growth[r] << " != " << 2 * r + 1;
    }
  for (int r1 = 1; r1 <= 6; ++r1)
    for (int r2 = 1; r2 <= 3; ++r2) {
      long long bound = 1;
      for (int i = 0; i < 2 * r2; ++i) {
        bound *= big_n * growth[r1];
        if (bound > (1LL << 60)) break;
      }
      if (prof.at(r1, r2) > bound) {
        ok = false;
        detail << "; cell (" << r1 << "," << r2 << ")=" << prof.at(r1, r2)
               << " above certificate " << bound;
      }
    }
  detail << "; certificate (2*gamma(r1))^(2 r2) holds cell-by-cell";
  return finish(3, "free-group cone-off gentleness", ok, detail.str(), sw);
}

// 4. constant-map fits on the free-group ball: the criterion asks for an
//    inf-flag on every x^k, k <= 8, and a C <= 3 fit for exp(x)
CriterionResult constant_map_fit() {
  Stopwatch sw;
  auto spec = gp::free_group(2, 8);
  auto ball = gp::cayley_ball(spec, 8);
  auto point = empty_graph(1);
  coneoff::VertexMap constant(ball.graph, point,
                              std::vector<int>(ball.graph.vertex_count(), 0));
  coneoff::ProfileOptions opt;
  opt.r1max = 8;
  opt.r2max = 1;
  opt.domain_ball = {{0, 8}};
  opt.threads = g_threads;
  auto prof = coneoff::gentleness_profile(constant, opt);

  bool ok = true;
  std::ostringstream detail;
  for (int k = 1; k <= 8; ++k) {
    auto c = coneoff::fit_constant(
        prof, coneoff::BoundFamily{coneoff::BoundFamily::Kind::poly, k});
    if (c.has_value()) {
      ok = false;
      detail << "pol:" << k << " fits with C=" << *c << "; ";
    }
  }
  if (!ok)
    detail << "(the inequality G <= C*F(C r1, C r2) is monotone in C, so a "
              "2^16 scan admits every polynomial on a finite table; the "
              "inf-flag is unreachable) ";
  auto ce = coneoff::fit_constant(prof, coneoff::BoundFamily::parse("exp"));
  detail << "exp fit C=" << (ce ? std::to_string(*ce) : std::string("inf"));
  if (!ce || *ce > 3) ok = false;
  return finish(4, "constant-map non-polynomiality", ok, detail.str(), sw);
}

namespace {

// exact check of 2^floor(R/2) - 1 >= 2^(R/4), i.e. (2^k - 1)^4 >= 2^R
bool index_chain_holds(int R) {
  int k = R / 2;
  if (4 * (k - 1) >= R) return true;  // (2^k - 1)^4 >= 2^(4(k-1)) >= 2^R
  __int128 base = (static_cast<__int128>(1) << k) - 1;
  __int128 lhs = base * base;
  lhs = lhs * lhs;
  return lhs >= (static_cast<__int128>(1) << R);
}

}  // namespace

// 5. lamplighter witness families at R in {6,7,8} for y = ({0..13}, 13),
//    plus the exact index-space inequality up to R = 64
CriterionResult lamplighter_witnesses() {
  Stopwatch sw;
  std::vector<int> all;
  for (int i = 0; i <= 13; ++i) all.push_back(i);
  lamp::LampVertex y(all, 13);
  lamp::LampVertex x;
  double quarter = std::pow(2.0, 0.25);

  bool ok = true;
  std::ostringstream detail;
  for (int R : {6, 7, 8}) {
    auto fam = lamp::path_family(y, R);
    long long need = static_cast<long long>(std::ceil(std::pow(2.0, R / 4.0)));
    auto rep = lamp::verify_exp_connected(x, y, quarter, 6, R, fam);
    detail << "R=" << R << ": N=" << fam.paths.size() << " maxlen="
           << rep.max_length << (rep.ok ? " ok" : " FAIL(" + rep.reason + ")")
           << "; ";
    if (!rep.ok || static_cast<long long>(fam.paths.size()) < need) ok = false;
  }
  int chain_ok = 0;
  for (int R = 6; R <= 64; ++R)
    if (index_chain_holds(R)) ++chain_ok;
  detail << "index chain holds for " << chain_ok << "/59 values of R";
  if (chain_ok != 59) ok = false;
  return finish(5, "lamplighter witness families", ok, detail.str(), sw);
}

// 6. the bit-string embedding: the criterion asserts image distances equal
//    rooted-tree distances (length <= 8) and doubling spheres (n <= 12)
CriterionResult tree_embedding_isometry() {
  Stopwatch sw;
  std::vector<std::string> strings{""};
  for (int len = 1; len <= 8; ++len)
    for (unsigned m = 0; m < (1u << len); ++m) {
      std::string s;
      for (int b = len - 1; b >= 0; --b) s += (m >> b) & 1 ? '1' : '0';
      strings.push_back(s);
    }
  auto prefix_len = [](const std::string& a, const std::string& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  };

  bool iso_ok = true;
  std::string counterexample;
  long long pairs = 0, qi_violations = 0;
  lamp::Window w{-2, 10};
  std::vector<lamp::LampVertex> targets;
  targets.reserve(strings.size());
  for (const auto& v : strings) targets.push_back(lamp::tree_embedding(v));
  for (std::size_t i = 0; i < strings.size(); ++i) {
    auto dist = lamp::lamp_distances(targets[i], targets, w);
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      ++pairs;
      int tree = static_cast<int>(strings[i].size() + strings[j].size()) -
                 2 * prefix_len(strings[i], strings[j]);
      if (dist[j] != tree && iso_ok) {
        iso_ok = false;
        counterexample = "(\"" + strings[i] + "\",\"" + strings[j] +
                         "\"): image distance " + std::to_string(dist[j]) +
                         ", tree distance " + std::to_string(tree);
      }
      if (dist[j] > 2 * tree || 2 * dist[j] < tree) ++qi_violations;
    }
  }

  // sphere sizes: distinct images of length-n strings
  bool spheres_ok = true;
  for (int n = 0; n <= 12; ++n) {
    std::set<lamp::LampVertex> sphere;
    for (unsigned m = 0; m < (1u << n); ++m) {
      std::string s;
      for (int b = n - 1; b >= 0; --b) s += (m >> b) & 1 ? '1' : '0';
      sphere.insert(lamp::tree_embedding(s));
    }
    if (sphere.size() != (1ull << n)) spheres_ok = false;
  }

  bool ok = iso_ok && spheres_ok;
  std::ostringstream detail;
  detail << pairs << " pairs";
  if (!iso_ok)
    detail << "; exact isometry fails, first at " << counterexample
           << " (a step-right-and-light tree edge needs a walk plus a "
              "toggle, two moves; the embedding is (2,0)-quasi-isometric: "
           << qi_violations << " sandwich violations)";
  detail << "; spheres 2^n for n<=12: " << (spheres_ok ? "ok" : "FAIL");
  return finish(6, "tree embedding isometry", ok, detail.str(), sw);
}

// 7. the graphical product-of-free-groups table
CriterionResult graphical_criteria_table() {
  Stopwatch sw;
  bool ok = true;
  std::ostringstream detail;
  auto expect = [&](const std::string& name, const gp::GraphProductSpec& spec,
                    bool want) {
    bool got = gp::contains_F2xF2(spec);
    if (got != want) {
      ok = false;
      detail << name << " -> " << (got ? "true" : "false") << " (want "
             << (want ? "true" : "false") << "); ";
    }
  };

  FiniteGraph k1k2(3, {{1, 2}});
  expect("A(C4)", gp::raag(cycle_graph(4), 2), true);
  expect("C(K33)", gp::racg(join(empty_graph(3), empty_graph(3))), true);
  expect("C(K33+)", gp::racg(join(empty_graph(3), k1k2)), true);
  expect("C(K33++)", gp::racg(join(k1k2, k1k2)), true);
  {
    // order-two triple joined with a mixed triple: an a-b non-edge with
    // |G_b| >= 3 plus the order-two triple still forces the product
    FiniteGraph g = join(empty_graph(3), k1k2);
    std::vector<gp::VertexGroupSpec> groups(6, gp::VertexGroupSpec{2, 0, {1}});
    groups[4] = gp::VertexGroupSpec{3, 0, {1}};
    groups[5] = gp::VertexGroupSpec{3, 0, {1}};
    expect("NF2*NF3 product", gp::GraphProductSpec(g, groups), true);
  }
  expect("A(P3)", gp::raag(path_graph(3), 2), false);
  expect("A(tree)", gp::raag(binary_tree(2), 2), false);
  expect("C(C5)", gp::racg(cycle_graph(5)), false);
  expect("D_inf", gp::racg(empty_graph(2)), false);
  expect("(Z2)^5", gp::racg(complete_graph(5)), false);
  if (ok) detail << "all ten table entries match";
  return finish(7, "graphical criteria table", ok, detail.str(), sw);
}

// 8. coning the polynomial parabolic cosets flattens the product ball:
//    the sampled four-point defect of the coned ball is constant in the
//    radius while the raw ball's strictly increases
CriterionResult coneoff_flattening() {
  Stopwatch sw;
  auto spec = gp::raag(path_graph(3), 8);
  std::vector<int> raw, coned;
  for (int R : {4, 6, 8}) {
    auto ball = gp::cayley_ball(spec, R);
    hyp::DeltaOptions opt;
    opt.seed = 1234;
    opt.exhaustive_limit = 0;  // sampled on all three radii, same scheme
    opt.sample_vertices = 72;
    opt.rounds = 5;
    opt.threads = g_threads;
    raw.push_back(hyp::four_point_delta(ball.graph, opt).delta2);

    auto coll = poly_coset_collection(spec, ball);
    coneoff::ConeOffMetric metric(ball.graph, coll);
    Rng rng(1234);
    int best = 0;
    for (int round = 0; round < 6; ++round) {
      auto verts = rng.sample_distinct(ball.graph.vertex_count(),
                                       std::min(144, ball.graph.vertex_count()));
      std::vector<std::vector<int>> rows(verts.size());
      parallel_for(0, static_cast<int>(verts.size()), g_threads, [&](int i) {
        rows[i] = metric.distances_from(verts[i]);
      });
      std::vector<int> idx(verts.begin(), verts.end());
      auto rep = hyp::four_point_delta_subset(
          idx, [&](int v) -> const std::vector<int>& {
            for (std::size_t i = 0; i < verts.size(); ++i)
              if (verts[i] == v) return rows[i];
            throw std::logic_error("unsampled vertex");
          });
      best = std::max(best, rep.delta2);
    }
    coned.push_back(best);
  }
  bool raw_increasing = raw[0] < raw[1] && raw[1] < raw[2];
  bool coned_constant = coned[0] == coned[1] && coned[1] == coned[2];
  std::ostringstream detail;
  detail << "raw delta2 = " << raw[0] << "," << raw[1] << "," << raw[2]
         << (raw_increasing ? " (increasing)" : " (NOT increasing)")
         << "; coned delta2 = " << coned[0] << "," << coned[1] << ","
         << coned[2] << (coned_constant ? " (constant)" : " (NOT constant)");
  return finish(8, "cone-off flattening", raw_increasing && coned_constant,
                detail.str(), sw);
}

namespace {

// Peel-based witness for pairs of the path-product syllable ball: walks
// x^-1 y from x syllable by syllable; every intermediate must stay in the
// ball. Grouping the syllables into single-alternation-letter blocks (the
// central generator rides along) realizes a cone-off geodesic whose
// piecewise extension is exactly this walk, so in-ball intermediates
// certify the pair. When the canonical order momentarily overshoots the
// radius, the central syllable is re-inserted at the running-length
// minimum; the rare leftovers fall back to the generic search.
bool peel_witness_in_ball(const gp::GraphProductSpec& spec, int radius,
                          const gp::ReducedWord& from,
                          const gp::ReducedWord& w) {
  auto attempt = [&](const std::vector<gp::Syllable>& order) {
    gp::ReducedWord cur = from;
    for (const auto& s : order) {
      cur = gp::multiply(spec, cur, s);
      if (cur.length() > radius) return false;
      for (const auto& t : cur.syllables)
        if (!spec.in_window(t.vertex, t.element)) return false;
    }
    return true;
  };
  if (attempt(w.syllables)) return true;
  std::vector<gp::Syllable> fsyl;
  gp::Syllable central{1, 0};
  for (const auto& s : w.syllables)
    if (s.vertex == 1)
      central = s;
    else
      fsyl.push_back(s);
  if (central.element == 0) return false;
  gp::ReducedWord cur = from;
  int best_at = 0, best_len = cur.length(), i = 0;
  for (const auto& s : fsyl) {
    cur = gp::multiply(spec, cur, s);
    ++i;
    if (cur.length() < best_len) {
      best_len = cur.length();
      best_at = i;
    }
  }
  std::vector<gp::Syllable> order;
  for (int j = 0; j < static_cast<int>(fsyl.size()); ++j) {
    if (j == best_at) order.push_back(central);
    order.push_back(fsyl[j]);
  }
  if (best_at == static_cast<int>(fsyl.size())) order.push_back(central);
  return attempt(order);
}

}  // namespace

// 9. parallel closure and syllabic pairs on the radius-4 syllable balls of
//    the pentagon order-two product and the path product
CriterionResult closure_and_syllabic() {
  Stopwatch sw;
  bool ok = true;
  std::ostringstream detail;

  // pentagon: exhaustive over every vertex pair with the generic search
  {
    auto spec = gp::racg(cycle_graph(5));
    auto ball = gp::qm_ball(spec, 4);
    auto coll = poly_coset_collection(spec, ball);
    auto dec = median::hyperplanes(
        ball.graph, median::HyperplaneMode::quasi_median, ball.boundary());
    auto closure = coneoff::check_parallel_closure(
        ball.graph, dec, coll, coneoff::ClosureVariant::image_pair, 60, 200,
        99);
    long long failures = 0;
    int n = ball.graph.vertex_count();
    std::atomic<long long> fail_count{0};
    parallel_for(0, n, g_threads, [&](int x) {
      long long local = 0;
      for (int y = x + 1; y < n; ++y)
        if (!coneoff::is_syllabic_pair(ball.graph, coll, x, y)) ++local;
      fail_count += local;
    });
    failures = fail_count.load();
    detail << "pentagon: closure " << (closure.ok ? "ok" : "FAIL") << " ("
           << closure.pairs_checked << " parallel pairs), syllabic "
           << static_cast<long long>(n) * (n - 1) / 2 - failures << "/"
           << static_cast<long long>(n) * (n - 1) / 2 << "; ";
    if (!closure.ok || closure.pairs_checked == 0 || failures > 0) ok = false;
  }

  // path product: exhaustive peel witnesses, generic fallback, plus a
  // sampled cross-check of the two routes
  {
    auto spec = gp::raag(path_graph(3), 4);
    auto ball = gp::qm_ball(spec, 4);
    auto coll = poly_coset_collection(spec, ball);
    auto dec = median::hyperplanes(
        ball.graph, median::HyperplaneMode::quasi_median, ball.boundary());
    auto closure = coneoff::check_parallel_closure(
        ball.graph, dec, coll, coneoff::ClosureVariant::image_pair, 25, 40,
        99);

    int n = ball.graph.vertex_count();
    std::vector<gp::ReducedWord> inv(n);
    parallel_for(0, n, g_threads,
                 [&](int v) { inv[v] = gp::inverse(spec, ball.words[v]); });
    std::atomic<long long> fallbacks{0}, failures{0};
    parallel_for(0, n, g_threads, [&](int x) {
      long long local_fb = 0, local_fail = 0;
      for (int y = x + 1; y < n; ++y) {
        auto w = gp::multiply(spec, inv[x], ball.words[y]);
        if (peel_witness_in_ball(spec, 4, ball.words[x], w)) continue;
        ++local_fb;
        if (!coneoff::is_syllabic_pair(ball.graph, coll, x, y)) ++local_fail;
      }
      fallbacks += local_fb;
      failures += local_fail;
    });

    // the peel route and the generic search agree on a sample
    Rng rng(7);
    int agree = 0, sample = 150;
    for (int t = 0; t < sample; ++t) {
      int x = static_cast<int>(rng.below(n));
      int y = static_cast<int>(rng.below(n));
      auto w = gp::multiply(spec, inv[x], ball.words[y]);
      bool fast = peel_witness_in_ball(spec, 4, ball.words[x], w);
      bool slow = coneoff::is_syllabic_pair(ball.graph, coll, x, y).has_value();
      if (fast == slow || (!fast && slow)) ++agree;  // fast is conservative
    }

    long long total = static_cast<long long>(n) * (n - 1) / 2;
    detail << "path product: closure " << (closure.ok ? "ok" : "FAIL") << " ("
           << closure.pairs_checked << " parallel pairs), syllabic "
           << total - failures.load() << "/" << total << " ("
           << fallbacks.load() << " generic fallbacks), route agreement "
           << agree << "/" << sample;
    if (!closure.ok || closure.pairs_checked == 0 || failures.load() > 0 ||
        agree != sample)
      ok = false;
  }
  return finish(9, "parallel closure and syllabic pairs", ok, detail.str(),
                sw);
}

// 10. the scale sequences: R_n < n/2 at the sampled decades and a strictly
//     decreasing sigma ratio (logarithms base 10)
CriterionResult sequence_facts() {
  Stopwatch sw;
  bool ok = true;
  std::ostringstream detail;
  double prev_ratio = -1;
  detail << "n=1e4..1e9: ";
  for (int d = 4; d <= 9; ++d) {
    auto v = hyp::nogentle_sequences(std::pow(10.0, d), 1);
    detail << "R=" << v.R << (v.R_below_half_n ? "<" : ">=") << "n/2 ";
    if (!v.R_below_half_n) ok = false;
    if (prev_ratio >= 0 && v.sigma_ratio >= prev_ratio) {
      ok = false;
      detail << "(ratio not decreasing at 1e" << d << ") ";
    }
    prev_ratio = v.sigma_ratio;
  }
  return finish(10, "scale sequence facts", ok, detail.str(), sw);
}

std::vector<CriterionResult> run_all(int threads) {
  g_threads = std::max(1, threads);
  std::vector<CriterionResult> out;
  out.push_back(normal_form_oracle());
  out.push_back(hyperplane_distance_identity());
  out.push_back(free_group_coneoff_profile());
  out.push_back(constant_map_fit());
  out.push_back(lamplighter_witnesses());
  out.push_back(tree_embedding_isometry());
  out.push_back(graphical_criteria_table());
  out.push_back(coneoff_flattening());
  out.push_back(closure_and_syllabic());
  out.push_back(sequence_facts());
  return out;
}

}  // namespace ggt::selfcheck
