#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/median.hpp"

namespace ggt::coneoff {

enum class MemberKind { parabolic_coset, vertex_group_coset, custom };

// Vertex-set collection over a host graph. Members are non-empty, induce
// connected subgraphs, and are pairwise distinct as sets.
struct Collection {
  std::vector<std::vector<int>> members;  // sorted vertex lists
  std::vector<MemberKind> kinds;
  std::vector<std::string> tags;

  static Collection create(const FiniteGraph& host,
                           std::vector<std::vector<int>> members,
                           std::vector<MemberKind> kinds = {},
                           std::vector<std::string> tags = {});

  int member_count() const { return static_cast<int>(members.size()); }
  // max number of members through a single vertex (local finiteness N)
  int local_multiplicity(int host_vertices) const;
};

// Host plus a clique on every member; vertex set unchanged.
FiniteGraph cone_off(const FiniteGraph& host, const Collection& coll);

// Incidence view of the cone-off: BFS through members without
// materializing clique edges. Safe to share read-only.
class ConeOffMetric {
 public:
  ConeOffMetric(const FiniteGraph& host, const Collection& coll);
  std::vector<int> distances_from(int src, int cap = -1) const;
  const FiniteGraph& host() const { return *host_; }
  const Collection& collection() const { return *coll_; }
  std::span<const int> members_of(int v) const;

 private:
  const FiniteGraph* host_;
  const Collection* coll_;
  std::vector<std::vector<int>> member_of_;
};

// Total vertex map between two finite hosts.
struct VertexMap {
  const FiniteGraph* domain = nullptr;
  const FiniteGraph* codomain = nullptr;
  std::vector<int> image;

  VertexMap() = default;
  VertexMap(const FiniteGraph& dom, const FiniteGraph& cod,
            std::vector<int> img);

  // max over domain edges of the codomain distance between endpoint images
  int measure_lipschitz() const;
};

// |B(p,r1) n preimage(B(q,r2))|, both balls by BFS.
long long fiber_count(const VertexMap& map, int p, int q, int r1, int r2);
long long fiber_count(const FiniteGraph& domain, std::span<const int> image,
                      const ConeOffMetric& codomain, int p, int q, int r1,
                      int r2);

struct ProfileOptions {
  int r1max = 4;
  int r2max = 4;
  // empty = exhaustive over the domain (restricted to the inner ball of
  // radius ball_radius - r1max when domain ball metadata is given)
  std::vector<int> centers;
  // (center, radius) of the domain host when it is a generated ball
  std::optional<std::pair<int, int>> domain_ball;
  int threads = 1;
};

// Max-table of coarse fiber sizes plus derived exponent estimates.
struct GentlenessProfile {
  int r1max = 0;
  int r2max = 0;
  // g[r1][r2] = max over sampled (p,q) of the fiber count
  std::vector<std::vector<long long>> g;
  std::string sampling;
  // cells whose r1-ball around some sampled p exceeds the generated host
  std::vector<std::pair<int, int>> undercovered;
  // eta_hat[r2] = log g[r1max][r2] / log r1max
  std::vector<double> eta_hat;

  long long at(int r1, int r2) const { return g[r1][r2]; }
};

GentlenessProfile gentleness_profile(const VertexMap& map,
                                     const ProfileOptions& opt);
GentlenessProfile gentleness_profile(const FiniteGraph& domain,
                                     std::span<const int> image,
                                     const ConeOffMetric& codomain,
                                     const ProfileOptions& opt);

// Named bound families for fits: "pol:k" -> x^k, "lin" -> x^y, "exp" -> e^x.
struct BoundFamily {
  enum class Kind { poly, lin, exp_bound } kind = Kind::lin;
  int degree = 0;

  static BoundFamily parse(const std::string& name);
  std::string name() const;
};

// Smallest integer C in [1, cmax] with g[r1][r2] <= C * F(C*r1, C*r2) on
// every cell with r1, r2 >= 1 (F degenerates at 0); nullopt when no C fits.
std::optional<int> fit_constant(const GentlenessProfile& profile,
                                const BoundFamily& family,
                                int cmax = 1 << 16);

// --- syllabic checks ---------------------------------------------------------

struct SyllabicWitness {
  std::vector<int> cone_path;  // x = p0, ..., pn = y
};

// A cone-off geodesic whose piecewise host-geodesic extension is a host
// geodesic, when one exists between x and y.
std::optional<SyllabicWitness> is_syllabic_pair(const FiniteGraph& host,
                                                const Collection& coll, int x,
                                                int y);

struct StrongSyllabicReport {
  bool ok = true;
  long long pairs_checked = 0;
  std::optional<std::array<int, 2>> counterexample;
};

// Checks that ALL cone-off geodesics between the given pairs extend to host
// geodesics (min- and max-length extensions agree with the host distance
// over the geodesic layer graph).
StrongSyllabicReport is_strongly_syllabic_sample(
    const FiniteGraph& host, const Collection& coll,
    std::span<const std::pair<int, int>> pairs);

// --- parallel closure ----------------------------------------------------------

// Hypothesis readings: when parallel pairs (x,y), (a,b) have x,y in a common
// member, require a common member for (a,b), or for (a,y).
enum class ClosureVariant { image_pair, mixed };

struct ClosureReport {
  bool ok = true;
  long long pairs_checked = 0;
  std::optional<std::array<int, 4>> counterexample;  // x, y, a, b
};

// Samples pairs (x,y) inside members, searches for pairs (a,b) parallel to
// them (same separating classes with matching orientation), and verifies
// the closure hypothesis. Pairs whose geodesic meets a non-interior class
// are skipped; on quasi-median hosts the remaining checks are exact.
ClosureReport check_parallel_closure(const FiniteGraph& host,
                                     const median::HyperplaneDecomposition& dec,
                                     const Collection& coll,
                                     ClosureVariant variant, int max_base_pairs,
                                     int max_partners, std::uint64_t seed);

// --- growth and horoballs -------------------------------------------------------

// growth[r] = max over members P and x in P of |B_host(x,r) n P|
std::vector<long long> collection_growth(const FiniteGraph& host,
                                         const Collection& coll, int rmax);

// Layered horoball over a base graph: vertices V x {0..levels}, vertical
// edges (x,n)-(x,n+1), and level-n edges between distinct x,y with
// d_base(x,y) <= 2^n. Level 0 recovers the base.
FiniteGraph horoball(const FiniteGraph& base, int levels);
inline int horoball_vertex(const FiniteGraph& base, int x, int level) {
  return level * base.vertex_count() + x;
}

}  // namespace ggt::coneoff
