#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ggt/graph.hpp"

namespace ggt::median {

enum class HyperplaneMode { median, quasi_median };

// Partition of the edge set into hyperplane classes: the transitive closure
// of "opposite in an induced 4-cycle", plus "in a common 3-cycle" in
// quasi-median mode. A class is interior when none of its edges touches a
// designated boundary vertex (truncation artifacts live near the boundary).
struct HyperplaneDecomposition {
  HyperplaneMode mode = HyperplaneMode::median;
  int class_count = 0;
  std::vector<int> edge_class;              // per host edge index
  std::vector<std::vector<int>> class_edges;
  std::vector<bool> interior;               // per class
};

HyperplaneDecomposition hyperplanes(const FiniteGraph& g, HyperplaneMode mode,
                                    const std::vector<bool>& boundary = {});

// Connected components of the host minus one class's edges.
struct SectorPartition {
  int hyperplane = 0;
  int component_count = 0;
  std::vector<int> component_of;            // per vertex
  std::vector<std::vector<int>> components;
};

SectorPartition sectors(const FiniteGraph& g,
                        const HyperplaneDecomposition& dec, int cls);

// Sector partitions computed on demand and kept; not thread-safe.
class SectorCache {
 public:
  SectorCache(const FiniteGraph& g, const HyperplaneDecomposition& dec)
      : g_(&g), dec_(&dec), cache_(dec.class_count) {}
  const SectorPartition& get(int cls);

 private:
  const FiniteGraph* g_;
  const HyperplaneDecomposition* dec_;
  std::vector<std::optional<SectorPartition>> cache_;
};

// Classes whose sector of x differs from the sector of y.
std::vector<int> separating_hyperplanes(const FiniteGraph& g,
                                        const HyperplaneDecomposition& dec,
                                        int x, int y);
std::vector<int> separating_hyperplanes(SectorCache& cache, int x, int y,
                                        int class_count);

// Geodesic test: a path is geodesic iff it crosses every class at most
// once; the length-equals-distance check runs alongside as a consistency
// probe (the two agree on genuine median / quasi-median hosts).
struct GeodesicCheck {
  bool no_repeated_class = false;
  bool length_is_distance = false;
  explicit operator bool() const {
    return no_repeated_class && length_is_distance;
  }
};

GeodesicCheck is_geodesic(const FiniteGraph& g,
                          const HyperplaneDecomposition& dec,
                          std::span<const int> path);

// The unique m with d(a,b) = d(a,m) + d(m,b) for all pairs from {x,y,z},
// when it exists.
std::optional<int> median_vertex(const FiniteGraph& g, int x, int y, int z);

// Smallest triple (y1,y2,y3) with
// d(x_i,x_j) = d(x_i,y_i) + d(y_i,y_j) + d(y_j,x_j) for all i != j,
// minimizing d(x1,y1)+d(x2,y2)+d(x3,y3). Non-uniqueness is reported (it
// flags a host that is not quasi-median, or boundary truncation).
struct MedianTriangle {
  std::array<int, 3> corners{};
  bool unique = false;
};

MedianTriangle median_triangle(const FiniteGraph& g, int x, int y, int z);

// The unique y in Y through which every geodesic from x into Y can be
// routed, when it exists. Y must induce a connected subgraph.
std::optional<int> gate(const FiniteGraph& g, int x, std::span<const int> Y);

// (a,b) and (x,y) are parallel when, for every class and every sector,
// the sector contains a but not b iff it contains x but not y.
bool parallel_pairs(const FiniteGraph& g, const HyperplaneDecomposition& dec,
                    int a, int b, int x, int y);
bool parallel_pairs(SectorCache& cache, int class_count, int a, int b, int x,
                    int y);

// {z : d(x,z) + d(z,y) = d(x,y)}
std::vector<int> interval(const FiniteGraph& g, int x, int y);

// Transports a geodesic from a to b onto a geodesic from x to y crossing
// the same classes in the same order; succeeds on parallel pairs in median
// hosts.
std::optional<std::vector<int>> transport_geodesic(
    const FiniteGraph& g, const HyperplaneDecomposition& dec,
    std::span<const int> geodesic, int x);

// true when the two classes contain incident edges spanning an induced
// 4-cycle
bool classes_transverse(const FiniteGraph& g,
                        const HyperplaneDecomposition& dec, int c1, int c2);

// Isometric grid embedding [0,a] x [0,b] -> host; cells in row-major order
// (cell (i,j) at index j*(a+1)+i).
struct FlatRectangle {
  int a = 0;
  int b = 0;
  std::vector<int> cells;

  int at(int i, int j) const { return cells[j * (a + 1) + i]; }
};

// All isometric grid embeddings with 1 <= a <= a_max, 1 <= b <= b_max,
// deduplicated up to the symmetries of the grid (flips and, for a == b or
// when both orientations are in range, transposition).
std::vector<FlatRectangle> flat_rectangles(const FiniteGraph& g, int a_max,
                                           int b_max);

// Staircase with corner z and broken path inside the given geodesic: the
// subgrid of [0,a] x [0,b] under a monotone lattice path, embedded
// isometrically. heights[i] is the top row filled in column i.
struct Staircase {
  int a = 0;
  int b = 0;
  std::vector<int> heights;            // size a+1, non-increasing
  std::vector<std::vector<int>> cols;  // cols[i][j] = host vertex at (i,j)
};

struct StaircaseSearch {
  std::optional<Staircase> found;
  int shapes_tried = 0;
};

StaircaseSearch staircase_witness(const FiniteGraph& g,
                                  std::span<const int> geodesic, int z);

}  // namespace ggt::median
