#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ggt::lamp {

// State of the lamplighter street: finitely many lit lamps and a position.
struct LampVertex {
  std::vector<int> lamps;  // sorted, distinct
  int pos = 0;

  LampVertex() = default;
  LampVertex(std::vector<int> lamps, int pos);
  friend bool operator==(const LampVertex&, const LampVertex&) = default;
  friend auto operator<=>(const LampVertex&, const LampVertex&) = default;
};

std::string to_string(const LampVertex& v);

// Enumeration window for breadth-first searches; lamps and positions stay
// within [lo, hi].
struct Window {
  int lo = 0;
  int hi = 0;

  int width() const { return hi - lo + 1; }
  bool contains(int x) const { return x >= lo && x <= hi; }
  bool contains(const LampVertex& v) const;
};

// The three moves: step left/right, toggle the lamp under the lamplighter.
// Moves leaving the window are clipped away.
std::vector<LampVertex> lamp_neighbors(const LampVertex& v, const Window& w);

// BFS distance inside a window that auto-widens by 2 until the result
// stabilizes twice; throws when the state space outgrows the safety cap
// before stabilizing.
int lamp_distance(const LampVertex& x, const LampVertex& y);
int lamp_distance(const LampVertex& x, const LampVertex& y, Window start);

// distances from x to many targets in one search over the given window
std::vector<int> lamp_distances(const LampVertex& x,
                                const std::vector<LampVertex>& targets,
                                const Window& w);

// Exact distance by formula: lamps to toggle plus the shorter of the
// left-first / right-first walks covering them. Validated against BFS.
int lamp_distance_closed_form(const LampVertex& y);                      // from (empty, 0)
int lamp_distance_closed_form(const LampVertex& x, const LampVertex& y); // translated

// Rooted-binary-tree embedding: bits x1..xn map to ({i >= 1 : xi = 1}, n).
LampVertex tree_embedding(std::string_view bits);

// Family of witness paths between (empty,0) and y = (S,p) with S inside
// [0,p]: path i sweeps left to -ceil(R/2) lighting A_i, right to
// p + ceil(R/2) lighting S and B_i, back left clearing B_i then A_i, and
// returns to p. Distinct index sets keep the middle legs disjoint.
struct PathFamily {
  LampVertex from, to;
  int R = 0;
  std::vector<std::vector<LampVertex>> paths;
  std::vector<std::vector<int>> a_sets;  // A_i in [-ceil(R/2), -1]
  std::vector<std::vector<int>> b_sets;  // B_i in [p+1, p+ceil(R/2)]
};

PathFamily path_family(const LampVertex& y, int R);

struct ExpConnectivityReport {
  bool ok = true;
  std::string reason;  // empty when ok
  long long path_count = 0;
  int max_length = 0;
};

// Checks N >= a^R, every path length <= L*d(x,y), and pairwise disjointness
// of the paths outside the R-balls around the endpoints.
ExpConnectivityReport verify_exp_connected(const LampVertex& x,
                                           const LampVertex& y, double a,
                                           int L, int R,
                                           const PathFamily& family);

}  // namespace ggt::lamp
