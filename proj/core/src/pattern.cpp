#include "ggt/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggt {

bool satisfies(GroupClass host, ClassConstraint c) {
  switch (c) {
    case ClassConstraint::exactly_two:
      return host == GroupClass::order_two;
    case ClassConstraint::at_least_three:
      return host == GroupClass::order_three_plus;
    case ClassConstraint::any_nontrivial:
    case ClassConstraint::unconstrained:
      return true;
  }
  return false;
}

LabeledPattern::LabeledPattern(std::string name_, FiniteGraph g,
                               std::vector<ClassConstraint> cs)
    : name(std::move(name_)), graph(std::move(g)), constraints(std::move(cs)) {
  if (static_cast<int>(constraints.size()) != graph.vertex_count())
    throw std::invalid_argument(
        "LabeledPattern: constraint required for every pattern vertex");
}

LabeledPattern join(const std::string& name, const LabeledPattern& a,
                    const LabeledPattern& b) {
  std::vector<ClassConstraint> cs = a.constraints;
  cs.insert(cs.end(), b.constraints.begin(), b.constraints.end());
  return LabeledPattern(name, join(a.graph, b.graph), std::move(cs));
}

namespace {

bool needs_classes(const LabeledPattern& pat) {
  return std::any_of(pat.constraints.begin(), pat.constraints.end(),
                     [](ClassConstraint c) {
                       return c == ClassConstraint::exactly_two ||
                              c == ClassConstraint::at_least_three;
                     });
}

struct Search {
  const FiniteGraph& g;
  std::span<const GroupClass> classes;
  const LabeledPattern& pat;
  std::vector<int> image;      // pattern vertex -> host vertex, -1 unset
  std::vector<bool> used;      // host vertex already taken

  bool extend(int k) {
    int m = pat.graph.vertex_count();
    if (k == m) return true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (used[v]) continue;
      if (!classes.empty() && !satisfies(classes[v], pat.constraints[k]))
        continue;
      if (g.degree(v) < pat.graph.degree(k)) continue;
      bool ok = true;
      for (int j = 0; j < k; ++j) {
        bool pe = pat.graph.has_edge(j, k);
        bool he = g.has_edge(image[j], v);
        if (pe != he) {  // induced: edges and non-edges both preserved
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[k] = v;
      used[v] = true;
      if (extend(k + 1)) return true;
      used[v] = false;
      image[k] = -1;
    }
    return false;
  }
};

LabeledPattern unlabeled(const std::string& name, FiniteGraph g) {
  std::vector<ClassConstraint> cs(g.vertex_count(),
                                  ClassConstraint::unconstrained);
  return LabeledPattern(name, std::move(g), std::move(cs));
}

}  // namespace

std::optional<std::vector<int>> find_induced(
    const FiniteGraph& g, std::span<const GroupClass> host_classes,
    const LabeledPattern& pat) {
  int m = pat.graph.vertex_count();
  if (m == 0) return std::vector<int>{};
  if (m > g.vertex_count()) return std::nullopt;
  if (needs_classes(pat) &&
      static_cast<int>(host_classes.size()) != g.vertex_count())
    throw std::invalid_argument(
        "find_induced: host classes must cover every vertex");
  Search s{g, host_classes, pat, std::vector<int>(m, -1),
           std::vector<bool>(g.vertex_count(), false)};
  if (s.extend(0)) return s.image;
  return std::nullopt;
}

std::vector<LabeledPattern> nf_patterns() {
  using CC = ClassConstraint;
  std::vector<LabeledPattern> out;
  out.emplace_back("NF1", empty_graph(2),
                   std::vector<CC>{CC::any_nontrivial, CC::at_least_three});
  out.emplace_back("NF2", empty_graph(3),
                   std::vector<CC>(3, CC::exactly_two));
  // vertices (a,b,c) = (0,1,2); only b-c adjacent
  out.emplace_back("NF3", FiniteGraph(3, {{1, 2}}),
                   std::vector<CC>(3, CC::exactly_two));
  return out;
}

std::vector<LabeledPattern> nf_join_patterns() {
  auto nf = nf_patterns();
  std::vector<LabeledPattern> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.push_back(join(nf[i].name + "*" + nf[j].name, nf[i], nf[j]));
  return out;
}

std::vector<LabeledPattern> builtin_patterns() {
  std::vector<LabeledPattern> out = nf_patterns();
  auto joins = nf_join_patterns();
  out.insert(out.end(), joins.begin(), joins.end());
  out.push_back(unlabeled("C4", cycle_graph(4)));
  FiniteGraph k1k2(3, {{1, 2}});  // isolated vertex plus an edge
  out.push_back(unlabeled("K33", join(empty_graph(3), empty_graph(3))));
  out.push_back(unlabeled("K33+", join(empty_graph(3), k1k2)));
  out.push_back(unlabeled("K33++", join(k1k2, k1k2)));
  return out;
}

const LabeledPattern& builtin_pattern(const std::string& name) {
  static const std::vector<LabeledPattern> lib = builtin_patterns();
  for (const auto& p : lib)
    if (p.name == name) return p;
  throw std::out_of_range("builtin_pattern: no pattern named " + name);
}

}  // namespace ggt
