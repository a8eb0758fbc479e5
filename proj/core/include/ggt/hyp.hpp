#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggt/coneoff.hpp"
#include "ggt/graph.hpp"
#include "ggt/median.hpp"

namespace ggt::hyp {

// Four-point hyperbolicity defect. delta2 stores 2*delta so half-integers
// stay exact.
struct DeltaReport {
  int delta2 = 0;
  std::array<int, 4> witness{};
  long long quadruples = 0;
  bool sampled = false;
  int sample_size = 0;

  double delta() const { return delta2 / 2.0; }
};

struct DeltaOptions {
  // exhaustive below this vertex count, sampled above
  int exhaustive_limit = 200;
  int sample_vertices = 96;
  int rounds = 4;
  std::uint64_t seed = 1;
  int threads = 1;
};

DeltaReport four_point_delta(const FiniteGraph& g,
                             const DeltaOptions& opt = {});
// same scan over a fixed vertex subset with an explicit distance oracle
DeltaReport four_point_delta_subset(
    std::span<const int> vertices,
    const std::function<const std::vector<int>&(int)>& dist_from);

// Thin-family criterion data: eta assigns a connected vertex set containing
// both endpoints to each pair.
using EtaFamily = std::function<std::vector<int>(int, int)>;

struct BowditchReport {
  bool ok = true;
  std::string violation;  // empty when ok
  long long pairs_checked = 0;
  long long triples_checked = 0;
};

struct BowditchOptions {
  long long max_triples = 200000;
  std::uint64_t seed = 1;
};

// Verifies, over all pairs at distance <= 1 and over (sampled) triples:
//   diam(eta(x,y)) <= D, and eta(x,y) inside the D-neighbourhood of
//   eta(x,z) u eta(z,y).
BowditchReport bowditch_check(const FiniteGraph& g, const EtaFamily& eta,
                              int D, const BowditchOptions& opt = {});

enum class RectangleThinness { horizontal_thin, vertical_thin, both, neither };

struct RectangleClass {
  median::FlatRectangle rectangle;
  RectangleThinness thinness = RectangleThinness::neither;
  int max_row_hausdorff = 0;  // between horizontal lines, cone-off metric
  int max_col_hausdorff = 0;  // between vertical lines
};

// Classifies host rectangles by how thin their line families are in the
// cone-off metric at threshold K.
std::vector<RectangleClass> classify_rectangles(
    const FiniteGraph& host, const coneoff::ConeOffMetric& cone,
    std::span<const median::FlatRectangle> rects, int K);

// Length of the shortest x-y path avoiding the closed ball B(center, s);
// nullopt when every path meets the ball. The center must lie on a
// geodesic from x to y at distance >= s from both (and outside radius s of
// neither endpoint).
std::optional<int> detour_length(const FiniteGraph& g, int x, int y,
                                 int center, int s);

// The three scale sequences of the tree-obstruction argument, base-10
// logarithms: r = log(n)^2, R = log(n)^(2(s+1)), sigma = log(n)^(2s+3).
struct NoGentleValues {
  double r = 0;
  double R = 0;
  double sigma = 0;
  bool R_below_half_n = false;   // R < n/2
  double sigma_ratio = 0;        // sigma / (n / log n)^(1/s)
};

NoGentleValues nogentle_sequences(double n, int s);

// Per-level report for a map off a rooted binary tree: does some vertex at
// depth n land at least sigma(n) away from the root image, and is the
// sphere size exactly 2^n.
struct SphereGrowthReport {
  bool sphere_sizes_ok = true;
  std::vector<long long> sphere_sizes;      // per level
  std::vector<int> max_image_distance;      // per level
  std::optional<int> first_violation;       // first n with no far point
};

SphereGrowthReport sphere_growth_check(const FiniteGraph& tree, int root,
                                       const std::function<double(int)>& sigma,
                                       const coneoff::VertexMap& map);

}  // namespace ggt::hyp
