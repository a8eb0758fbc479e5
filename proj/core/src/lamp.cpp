#include "ggt/lamp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ggt::lamp {

LampVertex::LampVertex(std::vector<int> lamps_, int pos_)
    : lamps(std::move(lamps_)), pos(pos_) {
  std::sort(lamps.begin(), lamps.end());
  lamps.erase(std::unique(lamps.begin(), lamps.end()), lamps.end());
}

std::string to_string(const LampVertex& v) {
  std::string s = "({";
  for (std::size_t i = 0; i < v.lamps.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.lamps[i]);
  }
  s += "}," + std::to_string(v.pos) + ")";
  return s;
}

bool Window::contains(const LampVertex& v) const {
  if (!contains(v.pos)) return false;
  for (int l : v.lamps)
    if (!contains(l)) return false;
  return true;
}

namespace {

LampVertex toggled(const LampVertex& v, int lamp) {
  LampVertex out = v;
  auto it = std::lower_bound(out.lamps.begin(), out.lamps.end(), lamp);
  if (it != out.lamps.end() && *it == lamp)
    out.lamps.erase(it);
  else
    out.lamps.insert(it, lamp);
  return out;
}

bool adjacent(const LampVertex& a, const LampVertex& b) {
  if (a.pos == b.pos) {
    // single toggle at the shared position
    std::vector<int> diff;
    std::set_symmetric_difference(a.lamps.begin(), a.lamps.end(),
                                  b.lamps.begin(), b.lamps.end(),
                                  std::back_inserter(diff));
    return diff.size() == 1 && diff[0] == a.pos;
  }
  return std::abs(a.pos - b.pos) == 1 && a.lamps == b.lamps;
}

constexpr long long kStateBudget = 30'000'000;

// packed-state BFS over a window
struct WindowedSearch {
  Window w;
  int width;

  explicit WindowedSearch(Window win) : w(win), width(win.width()) {
    if (width < 1) throw std::invalid_argument("lamp search: empty window");
    if (width > 48)
      throw std::invalid_argument("lamp search: window too wide to enumerate");
  }

  std::uint64_t encode(const LampVertex& v) const {
    std::uint64_t mask = 0;
    for (int l : v.lamps) mask |= 1ULL << (l - w.lo);
    return mask * static_cast<std::uint64_t>(width) +
           static_cast<std::uint64_t>(v.pos - w.lo);
  }

  // distances to the requested targets; -1 when unreached
  std::vector<int> run(const LampVertex& src,
                       const std::vector<LampVertex>& targets) const {
    for (const auto& t : targets)
      if (!w.contains(t)) throw std::invalid_argument("lamp search: target outside window");
    if (!w.contains(src)) throw std::invalid_argument("lamp search: source outside window");

    std::unordered_map<std::uint64_t, int> dist;
    std::unordered_map<std::uint64_t, int> wanted;
    for (std::size_t i = 0; i < targets.size(); ++i)
      wanted.emplace(encode(targets[i]), static_cast<int>(i));
    std::vector<int> out(targets.size(), -1);
    std::size_t remaining = wanted.size();

    struct State {
      std::uint64_t mask;
      int pos;
    };
    std::queue<State> q;
    std::uint64_t mask0 = 0;
    for (int l : src.lamps) mask0 |= 1ULL << (l - w.lo);
    dist[mask0 * width + (src.pos - w.lo)] = 0;
    if (auto it = wanted.find(mask0 * width + (src.pos - w.lo));
        it != wanted.end()) {
      out[it->second] = 0;
      --remaining;
    }
    q.push({mask0, src.pos - w.lo});
    long long visited = 1;

    auto offer = [&](std::uint64_t mask, int pos, int d) {
      std::uint64_t key = mask * static_cast<std::uint64_t>(width) + pos;
      if (dist.emplace(key, d).second) {
        if (++visited > kStateBudget)
          throw std::runtime_error("lamp search: state budget exceeded");
        if (auto it = wanted.find(key); it != wanted.end()) {
          if (out[it->second] < 0) {
            out[it->second] = d;
            --remaining;
          }
        }
        q.push({mask, pos});
      }
    };

    while (!q.empty() && remaining > 0) {
      auto [mask, pos] = q.front();
      q.pop();
      int d = dist[mask * static_cast<std::uint64_t>(width) + pos];
      if (pos > 0) offer(mask, pos - 1, d + 1);
      if (pos + 1 < width) offer(mask, pos + 1, d + 1);
      offer(mask ^ (1ULL << pos), pos, d + 1);
    }
    return out;
  }
};

Window hull_window(const LampVertex& x, const LampVertex& y) {
  int lo = std::min(x.pos, y.pos);
  int hi = std::max(x.pos, y.pos);
  for (int l : x.lamps) {
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  for (int l : y.lamps) {
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  return Window{lo, hi};
}

}  // namespace

std::vector<LampVertex> lamp_neighbors(const LampVertex& v, const Window& w) {
  if (!w.contains(v)) throw std::invalid_argument("lamp_neighbors: vertex outside window");
  std::vector<LampVertex> out;
  if (w.contains(v.pos - 1)) {
    LampVertex n = v;
    --n.pos;
    out.push_back(std::move(n));
  }
  if (w.contains(v.pos + 1)) {
    LampVertex n = v;
    ++n.pos;
    out.push_back(std::move(n));
  }
  out.push_back(toggled(v, v.pos));
  return out;
}

int lamp_distance(const LampVertex& x, const LampVertex& y) {
  return lamp_distance(x, y, hull_window(x, y));
}

int lamp_distance(const LampVertex& x, const LampVertex& y, Window start) {
  // widen by one on each side until the value repeats twice
  int prev1 = -2, prev2 = -3;
  Window w = start;
  for (;;) {
    WindowedSearch search(w);
    int d = search.run(x, {y})[0];
    if (d >= 0 && d == prev1 && d == prev2) return d;
    prev2 = prev1;
    prev1 = d;
    --w.lo;
    ++w.hi;
  }
}

std::vector<int> lamp_distances(const LampVertex& x,
                                const std::vector<LampVertex>& targets,
                                const Window& w) {
  WindowedSearch search(w);
  return search.run(x, targets);
}

int lamp_distance_closed_form(const LampVertex& y) {
  int lo = std::min(0, y.pos), hi = std::max(0, y.pos);
  for (int l : y.lamps) {
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  // walk covering [lo, hi] from 0 ending at pos: extreme-first both ways
  int left_first = -lo + (hi - lo) + (hi - y.pos);
  int right_first = hi + (hi - lo) + (y.pos - lo);
  return static_cast<int>(y.lamps.size()) + std::min(left_first, right_first);
}

int lamp_distance_closed_form(const LampVertex& x, const LampVertex& y) {
  // translate by x: lamp differences shifted to the origin frame
  std::vector<int> diff;
  std::set_symmetric_difference(x.lamps.begin(), x.lamps.end(),
                                y.lamps.begin(), y.lamps.end(),
                                std::back_inserter(diff));
  for (int& l : diff) l -= x.pos;
  return lamp_distance_closed_form(LampVertex(std::move(diff), y.pos - x.pos));
}

LampVertex tree_embedding(std::string_view bits) {
  std::vector<int> lamps;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      lamps.push_back(static_cast<int>(i) + 1);
    else if (bits[i] != '0')
      throw std::invalid_argument("tree_embedding: bits must be 0/1");
  }
  return LampVertex(std::move(lamps), static_cast<int>(bits.size()));
}

namespace {

// smallest integer N with N^4 >= 2^R, i.e. ceil(2^(R/4))
long long ceil_fourth_root_pow2(int R) {
  long long n = 1;
  while (true) {
    __int128 v = static_cast<__int128>(n) * n;
    v = v * n * n;
    if (v >= (static_cast<__int128>(1) << R)) return n;
    ++n;
  }
}

}  // namespace

PathFamily path_family(const LampVertex& y, int R) {
  const LampVertex x;  // (empty, 0)
  int p = y.pos;
  for (int l : y.lamps)
    if (l < 0 || l > p)
      throw std::invalid_argument("path_family: lamps must lie in [0, p]");
  int d = lamp_distance_closed_form(y);
  if (R < 6 || 2 * R >= d)
    throw std::invalid_argument("path_family: need 6 <= R < d(x,y)/2");

  int m = R / 2;  // lamp slots per side
  long long want = ceil_fourth_root_pow2(R);
  if (want > (1LL << m) - 1)
    throw std::invalid_argument("path_family: not enough index space");

  PathFamily fam;
  fam.from = x;
  fam.to = y;
  fam.R = R;

  std::set<int> s_lamps(y.lamps.begin(), y.lamps.end());
  for (long long i = 1; i <= want; ++i) {
    std::vector<int> A, B;
    for (int bit = 0; bit < m; ++bit)
      if (i & (1LL << bit)) {
        A.push_back(-(bit + 1));
        B.push_back(p + 1 + bit);
      }
    std::set<int> a_set(A.begin(), A.end());
    std::set<int> b_set(B.begin(), B.end());

    std::vector<LampVertex> path{x};
    auto walk_to = [&](int target, auto&& toggle_here) {
      while (path.back().pos != target) {
        LampVertex next = path.back();
        next.pos += target > next.pos ? 1 : -1;
        path.push_back(next);
        if (toggle_here(path.back().pos))
          path.push_back(toggled(path.back(), path.back().pos));
      }
    };

    // light the left signature, then carry it across while lighting the
    // target lamps and the right signature
    walk_to(-m, [&](int q) { return a_set.count(q) > 0; });
    walk_to(p + m, [&](int q) { return s_lamps.count(q) || b_set.count(q); });
    // clear the left signature while the right one still distinguishes us
    walk_to(-m, [&](int q) { return a_set.count(q) > 0; });
    // return; the right signature is cleared only on the final approach
    walk_to(p + m, [](int) { return false; });
    if (b_set.count(path.back().pos))
      path.push_back(toggled(path.back(), path.back().pos));
    walk_to(p, [&](int q) { return b_set.count(q) > 0; });

    if (!(path.back() == y))
      throw std::runtime_error("path_family: itinerary failed to land on y");
    fam.paths.push_back(std::move(path));
    fam.a_sets.push_back(std::move(A));
    fam.b_sets.push_back(std::move(B));
  }
  return fam;
}

ExpConnectivityReport verify_exp_connected(const LampVertex& x,
                                           const LampVertex& y, double a,
                                           int L, int R,
                                           const PathFamily& family) {
  ExpConnectivityReport rep;
  rep.path_count = static_cast<long long>(family.paths.size());
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.reason = std::move(why);
    return rep;
  };

  if (!(family.from == x) || !(family.to == y))
    return fail("family endpoints do not match");
  long double need = std::pow(static_cast<long double>(a), R);
  if (static_cast<long double>(rep.path_count) < need)
    return fail("too few paths: N < a^R");

  int d = lamp_distance_closed_form(x, y);
  for (const auto& path : family.paths) {
    if (path.empty() || !(path.front() == x) || !(path.back() == y))
      return fail("a path does not connect x to y");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!adjacent(path[i], path[i + 1]))
        return fail("a path has a non-edge step");
    int len = static_cast<int>(path.size()) - 1;
    rep.max_length = std::max(rep.max_length, len);
    if (len > L * d) return fail("a path exceeds the L*d length bound");
  }

  // pairwise disjointness outside the R-balls around x and y
  std::map<LampVertex, std::size_t> owner;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    for (const auto& v : family.paths[i]) {
      if (lamp_distance_closed_form(x, v) <= R) continue;
      if (lamp_distance_closed_form(y, v) <= R) continue;
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh && it->second != i)
        return fail("paths " + std::to_string(it->second) + " and " +
                    std::to_string(i) + " meet at " + to_string(v));
    }
  }
  return rep;
}

}  // namespace ggt::lamp
