#include "ggt/gp.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "ggt/util.hpp"

namespace ggt::gp {

using nlohmann::json;

GraphProductSpec::GraphProductSpec(FiniteGraph g,
                                   std::vector<VertexGroupSpec> gs)
    : graph(std::move(g)), groups(std::move(gs)) {
  if (static_cast<int>(groups.size()) != graph.vertex_count())
    throw std::invalid_argument("GraphProductSpec: one group per vertex");
  for (auto& vg : groups) {
    if (vg.order == 1 || vg.order < 0)
      throw std::invalid_argument("GraphProductSpec: vertex groups must be nontrivial");
    if (vg.infinite() && vg.window < 1)
      throw std::invalid_argument("GraphProductSpec: infinite factors need window >= 1");
    if (vg.gens.empty()) vg.gens = {1};
    for (int s : vg.gens) {
      int e = vg.infinite() ? s : ((s % vg.order) + vg.order) % vg.order;
      if (e == 0)
        throw std::invalid_argument("GraphProductSpec: identity generator rejected");
    }
  }
}

GroupClass GraphProductSpec::group_class(int v) const {
  graph.check_vertex(v);
  return groups[v].order == 2 ? GroupClass::order_two
                              : GroupClass::order_three_plus;
}

std::vector<GroupClass> GraphProductSpec::group_classes() const {
  std::vector<GroupClass> out;
  out.reserve(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) out.push_back(group_class(v));
  return out;
}

int GraphProductSpec::compose(int v, int a, int b) const {
  const auto& g = groups[v];
  if (g.infinite()) return a + b;
  return ((a + b) % g.order + g.order) % g.order;
}

int GraphProductSpec::invert(int v, int a) const {
  const auto& g = groups[v];
  if (g.infinite()) return -a;
  return (g.order - a % g.order) % g.order;
}

bool GraphProductSpec::in_window(int v, int a) const {
  const auto& g = groups[v];
  if (!g.infinite()) return true;
  return a >= -g.window && a <= g.window;
}

std::vector<int> GraphProductSpec::nontrivial_elements(int v) const {
  const auto& g = groups[v];
  std::vector<int> out;
  if (g.infinite()) {
    for (int e = -g.window; e <= g.window; ++e)
      if (e != 0) out.push_back(e);
  } else {
    for (int e = 1; e < g.order; ++e) out.push_back(e);
  }
  return out;
}

std::vector<int> GraphProductSpec::symmetric_gens(int v) const {
  const auto& g = groups[v];
  std::vector<int> out;
  for (int s : g.gens) {
    int e = g.infinite() ? s : ((s % g.order) + g.order) % g.order;
    out.push_back(e);
    out.push_back(invert(v, e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string GraphProductSpec::vertex_name(int v) const {
  if (!graph.labels().empty() && !graph.labels()[v].empty())
    return graph.labels()[v];
  return "v" + std::to_string(v);
}

std::uint64_t hash_word(const ReducedWord& w) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& s : w.syllables) {
    h = fnv1a64(&s.vertex, sizeof(int), h);
    h = fnv1a64(&s.element, sizeof(int), h);
  }
  return h;
}

std::string to_string(const GraphProductSpec& spec, const ReducedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ' ';
    out += spec.vertex_name(s.vertex);
    if (s.element != 1) out += '^' + std::to_string(s.element);
  }
  return out;
}

namespace {

// Appends one non-identity syllable to a graphically reduced prefix,
// merging with the unique same-vertex syllable visible from the right
// (everything after it adjacent) when one exists. Keeps the prefix reduced.
void push_syllable(const GraphProductSpec& spec, std::vector<Syllable>& w,
                   Syllable s) {
  if (s.element == 0) return;
  int slot = -1;
  for (int j = static_cast<int>(w.size()) - 1; j >= 0; --j) {
    if (w[j].vertex == s.vertex) {
      slot = j;
      break;
    }
    if (!spec.adjacent(w[j].vertex, s.vertex)) break;
  }
  if (slot >= 0) {
    int e = spec.compose(s.vertex, w[slot].element, s.element);
    if (e == 0)
      w.erase(w.begin() + slot);
    else
      w[slot].element = e;
  } else {
    w.push_back(s);
  }
}

// Shuffle-normal order: repeatedly move the least front-movable syllable to
// the output. A syllable is front-movable when every unprocessed syllable
// before it lies on an adjacent vertex; two same-vertex syllables are never
// simultaneously movable, so the choice is unique.
void canonical_order(const GraphProductSpec& spec, std::vector<Syllable>& w) {
  int n = static_cast<int>(w.size());
  if (n <= 1) return;
  std::vector<Syllable> out;
  out.reserve(n);
  std::vector<char> used(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool movable = true;
      for (int j = 0; j < i; ++j) {
        if (used[j]) continue;
        if (!spec.adjacent(w[j].vertex, w[i].vertex)) {
          movable = false;
          break;
        }
      }
      if (movable && (best < 0 || w[i].vertex < w[best].vertex)) best = i;
    }
    out.push_back(w[best]);
    used[best] = 1;
  }
  w = std::move(out);
}

int canon_element(const GraphProductSpec& spec, int v, int e) {
  const auto& g = spec.groups[v];
  if (g.infinite()) return e;
  return ((e % g.order) + g.order) % g.order;
}

}  // namespace

ReducedWord normalize(const GraphProductSpec& spec,
                      std::span<const Syllable> input) {
  std::vector<Syllable> w;
  w.reserve(input.size());
  for (Syllable s : input) {
    spec.graph.check_vertex(s.vertex);
    s.element = canon_element(spec, s.vertex, s.element);
    push_syllable(spec, w, s);
  }
  canonical_order(spec, w);
  return ReducedWord{std::move(w)};
}

ReducedWord multiply(const GraphProductSpec& spec, const ReducedWord& w,
                     const Syllable& s) {
  std::vector<Syllable> out = w.syllables;
  push_syllable(spec, out, Syllable{s.vertex, canon_element(spec, s.vertex, s.element)});
  canonical_order(spec, out);
  return ReducedWord{std::move(out)};
}

ReducedWord multiply(const GraphProductSpec& spec, const ReducedWord& a,
                     const ReducedWord& b) {
  std::vector<Syllable> out = a.syllables;
  for (const auto& s : b.syllables) push_syllable(spec, out, s);
  canonical_order(spec, out);
  return ReducedWord{std::move(out)};
}

ReducedWord inverse(const GraphProductSpec& spec, const ReducedWord& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.push_back(Syllable{it->vertex, spec.invert(it->vertex, it->element)});
  canonical_order(spec, out);
  return ReducedWord{std::move(out)};
}

bool equal(const GraphProductSpec& spec, std::span<const Syllable> w1,
           std::span<const Syllable> w2) {
  return normalize(spec, w1) == normalize(spec, w2);
}

int syllable_length(const GraphProductSpec& spec,
                    std::span<const Syllable> w) {
  return normalize(spec, w).length();
}

std::optional<int> GroupBall::index_of(const ReducedWord& w) const {
  std::uint64_t h = hash_word(w);
  auto it = std::lower_bound(index.begin(), index.end(),
                             std::pair<std::uint64_t, int>{h, -1});
  for (; it != index.end() && it->first == h; ++it)
    if (words[it->second] == w) return it->second;
  return std::nullopt;
}

std::vector<bool> GroupBall::boundary() const {
  std::vector<bool> b(graph.vertex_count(), false);
  if (saturated) return b;
  for (int v = 0; v < graph.vertex_count(); ++v) b[v] = dist[v] == radius;
  return b;
}

namespace {

// shared machinery for qm_ball / cayley_ball
struct BallBuilder {
  const GraphProductSpec& spec;
  int radius;
  GroupBall ball;
  std::unordered_map<std::uint64_t, std::vector<int>> lookup;
  std::unordered_map<std::uint64_t, int> edge_labels;  // packed (u,v) -> label
  std::queue<int> work;
  bool skipped_radius = false;

  explicit BallBuilder(const GraphProductSpec& s, int r) : spec(s), radius(r) {
    ball.radius = r;
    add_vertex(ReducedWord{}, 0);
  }

  std::optional<int> find(const ReducedWord& w) const {
    auto it = lookup.find(hash_word(w));
    if (it == lookup.end()) return std::nullopt;
    for (int id : it->second)
      if (ball.words[id] == w) return id;
    return std::nullopt;
  }

  int add_vertex(ReducedWord w, int d) {
    int id = static_cast<int>(ball.words.size());
    lookup[hash_word(w)].push_back(id);
    ball.words.push_back(std::move(w));
    ball.dist.push_back(d);
    work.push(id);
    return id;
  }

  void note_edge(int a, int b, int label) {
    if (a == b) return;
    std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
        static_cast<std::uint64_t>(std::max(a, b));
    edge_labels.emplace(key, label);
  }

  // candidate neighbour `c` of vertex `id`, reached by a `label`-generator;
  // `d` is its distance when newly inserted
  void offer(int id, const ReducedWord& c, int label, int d) {
    if (auto j = find(c)) {
      note_edge(id, *j, label);
      return;
    }
    if (d > radius) {
      skipped_radius = true;
      return;
    }
    int j = add_vertex(c, d);
    note_edge(id, j, label);
  }

  GroupBall finish() {
    ball.saturated = !skipped_radius && !ball.window_exhausted;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_labels.size());
    for (const auto& [key, label] : edge_labels)
      edges.emplace_back(static_cast<int>(key >> 32),
                         static_cast<int>(key & 0xffffffffu));
    ball.graph =
        FiniteGraph(static_cast<int>(ball.words.size()), std::move(edges));
    ball.edge_label.assign(ball.graph.edge_count(), -1);
    for (const auto& [key, label] : edge_labels) {
      int idx = ball.graph.edge_index(static_cast<int>(key >> 32),
                                      static_cast<int>(key & 0xffffffffu));
      ball.edge_label[idx] = label;
    }
    ball.index.reserve(ball.words.size());
    for (int id = 0; id < static_cast<int>(ball.words.size()); ++id)
      ball.index.emplace_back(hash_word(ball.words[id]), id);
    std::sort(ball.index.begin(), ball.index.end());
    return std::move(ball);
  }
};

}  // namespace

GroupBall qm_ball(const GraphProductSpec& spec, int radius) {
  if (radius < 0) throw std::invalid_argument("qm_ball: negative radius");
  for (int v = 0; v < spec.vertex_count(); ++v)
    if (spec.groups[v].infinite() && spec.groups[v].window < radius)
      throw std::invalid_argument(
          "qm_ball: infinite factor window narrower than the radius");

  BallBuilder b(spec, radius);
  std::vector<std::vector<int>> elems;
  elems.reserve(spec.vertex_count());
  for (int v = 0; v < spec.vertex_count(); ++v)
    elems.push_back(spec.nontrivial_elements(v));

  while (!b.work.empty()) {
    int id = b.work.front();
    b.work.pop();
    // syllables are value copies: ball.words may reallocate during offers
    const ReducedWord w = b.ball.words[id];
    int len = w.length();
    for (int u = 0; u < spec.vertex_count(); ++u) {
      // the unique same-vertex syllable visible from the right, if any
      int slot = -1;
      for (int j = len - 1; j >= 0; --j) {
        if (w.syllables[j].vertex == u) {
          slot = j;
          break;
        }
        if (!spec.adjacent(w.syllables[j].vertex, u)) break;
      }
      if (slot >= 0) {
        // replace (or delete) the element in that slot; true replacements
        // outside the window exist for every infinite factor
        if (spec.groups[u].infinite()) b.ball.window_exhausted = true;
        int old = w.syllables[slot].element;
        for (int e : elems[u]) {
          if (e == old) continue;
          std::vector<Syllable> syl = w.syllables;
          syl[slot].element = e;
          canonical_order(spec, syl);
          b.offer(id, ReducedWord{std::move(syl)}, u, len);
        }
        std::vector<Syllable> syl = w.syllables;
        syl.erase(syl.begin() + slot);
        canonical_order(spec, syl);
        b.offer(id, ReducedWord{std::move(syl)}, u, len - 1);
      } else {
        if (len + 1 <= radius && spec.groups[u].infinite())
          b.ball.window_exhausted = true;
        if (len + 1 > radius) {
          b.skipped_radius = true;
          continue;
        }
        for (int e : elems[u]) {
          std::vector<Syllable> syl = w.syllables;
          syl.push_back(Syllable{u, e});
          canonical_order(spec, syl);
          b.offer(id, ReducedWord{std::move(syl)}, u, len + 1);
        }
      }
    }
  }
  return b.finish();
}

GroupBall cayley_ball(const GraphProductSpec& spec, int radius) {
  if (radius < 0) throw std::invalid_argument("cayley_ball: negative radius");
  BallBuilder b(spec, radius);
  std::vector<std::vector<int>> gens;
  gens.reserve(spec.vertex_count());
  for (int v = 0; v < spec.vertex_count(); ++v)
    gens.push_back(spec.symmetric_gens(v));

  while (!b.work.empty()) {
    int id = b.work.front();
    b.work.pop();
    const ReducedWord w = b.ball.words[id];
    int d = b.ball.dist[id];
    for (int u = 0; u < spec.vertex_count(); ++u) {
      for (int s : gens[u]) {
        ReducedWord c = multiply(spec, w, Syllable{u, s});
        bool in_window = true;
        for (const auto& syl : c.syllables)
          if (!spec.in_window(syl.vertex, syl.element)) {
            in_window = false;
            break;
          }
        if (!in_window) {
          // a neighbour we cannot represent: a true truncation only when it
          // would have been admitted by the radius (it cannot coincide with
          // an in-window vertex)
          if (d + 1 <= radius)
            b.ball.window_exhausted = true;
          else
            b.skipped_radius = true;
          continue;
        }
        b.offer(id, c, u, d + 1);
      }
    }
  }
  return b.finish();
}

bool parabolic_has_polynomial_growth(const GraphProductSpec& spec,
                                     std::span<const int> lambda) {
  int k = static_cast<int>(lambda.size());
  for (int v : lambda) spec.graph.check_vertex(v);
  // factors of the maximal join decomposition = connected components of the
  // complement of the induced subgraph
  std::vector<int> comp(k, -1);
  int comps = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    int c = comps++;
    std::queue<int> q;
    comp[i] = c;
    q.push(i);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int bidx = 0; bidx < k; ++bidx) {
        if (comp[bidx] >= 0 || bidx == a) continue;
        if (!spec.adjacent(lambda[a], lambda[bidx])) {  // complement edge
          comp[bidx] = c;
          q.push(bidx);
        }
      }
    }
  }
  for (int c = 0; c < comps; ++c) {
    std::vector<int> factor;
    for (int i = 0; i < k; ++i)
      if (comp[i] == c) factor.push_back(lambda[i]);
    if (factor.size() == 1) continue;
    if (factor.size() == 2 &&
        spec.group_class(factor[0]) == GroupClass::order_two &&
        spec.group_class(factor[1]) == GroupClass::order_two)
      continue;  // infinite dihedral factor
    return false;
  }
  return true;
}

bool contains_F2(const GraphProductSpec& spec) {
  auto classes = spec.group_classes();
  for (const auto& pat : nf_patterns())
    if (find_induced(spec.graph, classes, pat)) return true;
  return false;
}

bool contains_F2xF2(const GraphProductSpec& spec) {
  auto classes = spec.group_classes();
  for (const auto& pat : nf_join_patterns())
    if (find_induced(spec.graph, classes, pat)) return true;
  return false;
}

std::vector<std::vector<int>> maximal_polynomial_lambdas(
    const GraphProductSpec& spec) {
  int n = spec.vertex_count();
  if (n > 20)
    throw std::invalid_argument(
        "maximal_polynomial_lambdas: presentation graph too large");
  std::vector<std::vector<int>> poly;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> lambda;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) lambda.push_back(v);
    if (parabolic_has_polynomial_growth(spec, lambda)) poly.push_back(lambda);
  }
  std::vector<std::vector<int>> maximal;
  for (const auto& a : poly) {
    bool contained = false;
    for (const auto& b : poly) {
      if (a.size() >= b.size() || &a == &b) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.push_back(a);
  }
  return maximal;
}

ReducedWord coset_rep(const GraphProductSpec& spec, const ReducedWord& g,
                      std::span<const int> lambda) {
  std::vector<char> in_lambda(spec.vertex_count(), 0);
  for (int v : lambda) in_lambda[v] = 1;
  std::vector<Syllable> w = g.syllables;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
      if (!in_lambda[w[i].vertex]) continue;
      bool movable = true;
      for (int j = i + 1; j < static_cast<int>(w.size()); ++j) {
        if (!spec.adjacent(w[j].vertex, w[i].vertex)) {
          movable = false;
          break;
        }
      }
      if (movable) {
        w.erase(w.begin() + i);
        changed = true;
        break;
      }
    }
  }
  canonical_order(spec, w);
  return ReducedWord{std::move(w)};
}

bool same_coset(const GraphProductSpec& spec, const ReducedWord& x,
                const ReducedWord& y, std::span<const int> lambda) {
  std::vector<char> in_lambda(spec.vertex_count(), 0);
  for (int v : lambda) in_lambda[v] = 1;
  ReducedWord diff = multiply(spec, inverse(spec, x), y);
  for (const auto& s : diff.syllables)
    if (!in_lambda[s.vertex]) return false;
  return true;
}

std::vector<std::vector<int>> coset_members(const GraphProductSpec& spec,
                                            const GroupBall& ball,
                                            std::span<const int> lambda) {
  std::unordered_map<std::uint64_t, std::vector<int>> by_rep;
  std::unordered_map<std::uint64_t, ReducedWord> rep_words;
  for (int id = 0; id < static_cast<int>(ball.words.size()); ++id) {
    ReducedWord rep = coset_rep(spec, ball.words[id], lambda);
    std::uint64_t h = hash_word(rep);
    // hash collisions across distinct reps would conflate cosets; guard
    auto it = rep_words.find(h);
    if (it == rep_words.end())
      rep_words.emplace(h, rep);
    else if (!(it->second == rep))
      throw std::runtime_error("coset_members: hash collision");
    by_rep[h].push_back(id);
  }
  // split each coset into connected components inside the ball
  std::vector<std::vector<int>> out;
  for (auto& [h, members] : by_rep) {
    std::sort(members.begin(), members.end());
    std::vector<char> in_member(ball.graph.vertex_count(), 0);
    for (int v : members) in_member[v] = 1;
    std::vector<char> seen(ball.graph.vertex_count(), 0);
    for (int v : members) {
      if (seen[v]) continue;
      std::vector<int> comp;
      std::queue<int> q;
      q.push(v);
      seen[v] = 1;
      while (!q.empty()) {
        int a = q.front();
        q.pop();
        comp.push_back(a);
        for (int b : ball.graph.neighbors(a))
          if (in_member[b] && !seen[b]) {
            seen[b] = 1;
            q.push(b);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

VertexGroupSpec parse_group_descriptor(const std::string& s) {
  VertexGroupSpec g;
  if (s.size() >= 2 && s[0] == 'c') {
    g.order = std::atoi(s.c_str() + 1);
    if (g.order < 2)
      throw std::invalid_argument("group descriptor: cyclic order must be >= 2: " + s);
    return g;
  }
  if (s.rfind("z:window=", 0) == 0) {
    g.order = 0;
    g.window = std::atoi(s.c_str() + 9);
    if (g.window < 1)
      throw std::invalid_argument("group descriptor: window must be >= 1: " + s);
    return g;
  }
  throw std::invalid_argument("group descriptor: expected cN or z:window=W, got " + s);
}

std::string group_descriptor(const VertexGroupSpec& g) {
  if (g.infinite()) return "z:window=" + std::to_string(g.window);
  return "c" + std::to_string(g.order);
}

}  // namespace

GraphProductSpec read_spec_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("group spec: 'vertices' and 'edges' required");
  std::vector<std::string> names;
  std::vector<VertexGroupSpec> groups;
  std::unordered_map<std::string, int> by_name;
  for (const auto& jv : j["vertices"]) {
    std::string name = jv.at("name").get<std::string>();
    if (by_name.count(name))
      throw std::invalid_argument("group spec: duplicate vertex " + name);
    by_name[name] = static_cast<int>(names.size());
    names.push_back(name);
    groups.push_back(parse_group_descriptor(jv.at("group").get<std::string>()));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& je : j["edges"]) {
    auto endpoint = [&](const json& e) {
      if (e.is_string()) {
        auto it = by_name.find(e.get<std::string>());
        if (it == by_name.end())
          throw std::invalid_argument("group spec: unknown vertex " +
                                      e.get<std::string>());
        return it->second;
      }
      return e.get<int>();
    };
    edges.emplace_back(endpoint(je.at(0)), endpoint(je.at(1)));
  }
  if (j.contains("generators")) {
    for (auto& [name, jgens] : j["generators"].items()) {
      auto it = by_name.find(name);
      if (it == by_name.end())
        throw std::invalid_argument("group spec: unknown vertex " + name);
      groups[it->second].gens = jgens.get<std::vector<int>>();
    }
  }
  FiniteGraph graph(static_cast<int>(names.size()), std::move(edges));
  graph.set_labels(std::move(names));
  return GraphProductSpec(std::move(graph), std::move(groups));
}

GraphProductSpec read_spec_file(const std::string& path) {
  std::string text;
  {
    // graph_io has the file helpers, but avoid the include cycle
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open " + path);
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
    std::fclose(f);
  }
  return read_spec_json(text);
}

std::string write_spec_json(const GraphProductSpec& spec) {
  json j;
  j["format"] = "ggt-group";
  j["version"] = 1;
  json verts = json::array();
  for (int v = 0; v < spec.vertex_count(); ++v) {
    verts.push_back({{"name", spec.vertex_name(v)},
                     {"group", group_descriptor(spec.groups[v])}});
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (auto [u, v] : spec.graph.edges())
    edges.push_back(json::array({spec.vertex_name(u), spec.vertex_name(v)}));
  j["edges"] = edges;
  json gens;
  bool any = false;
  for (int v = 0; v < spec.vertex_count(); ++v) {
    if (spec.groups[v].gens != std::vector<int>{1}) {
      gens[spec.vertex_name(v)] = spec.groups[v].gens;
      any = true;
    }
  }
  if (any) j["generators"] = gens;
  return j.dump(2) + "\n";
}

GraphProductSpec raag(FiniteGraph graph, int window) {
  std::vector<VertexGroupSpec> groups(graph.vertex_count(),
                                      VertexGroupSpec{0, window, {1}});
  return GraphProductSpec(std::move(graph), std::move(groups));
}

GraphProductSpec racg(FiniteGraph graph) {
  std::vector<VertexGroupSpec> groups(graph.vertex_count(),
                                      VertexGroupSpec{2, 0, {1}});
  return GraphProductSpec(std::move(graph), std::move(groups));
}

GraphProductSpec free_group(int rank, int window) {
  return raag(empty_graph(rank), window);
}

}  // namespace ggt::gp
