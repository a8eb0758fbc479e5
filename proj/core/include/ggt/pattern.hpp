#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggt/graph.hpp"

namespace ggt {

// Constraint a pattern vertex places on the cardinality class of its image.
enum class ClassConstraint {
  exactly_two,
  at_least_three,
  any_nontrivial,
  unconstrained,
};

bool satisfies(GroupClass host, ClassConstraint c);

// Pattern graph with a class constraint on every vertex.
struct LabeledPattern {
  std::string name;
  FiniteGraph graph;
  std::vector<ClassConstraint> constraints;  // one per pattern vertex

  LabeledPattern() = default;
  LabeledPattern(std::string name, FiniteGraph g,
                 std::vector<ClassConstraint> cs);
};

// join of two patterns: disjoint union plus all cross edges
LabeledPattern join(const std::string& name, const LabeledPattern& a,
                    const LabeledPattern& b);

// Exhaustive backtracking search for an induced, class-consistent copy of
// `pat` in `g`. Returns the embedding (pattern vertex -> host vertex) or
// nullopt; a nullopt answer certifies no copy exists. `host_classes` must
// cover every host vertex (only consulted for constrained pattern vertices).
std::optional<std::vector<int>> find_induced(
    const FiniteGraph& g, std::span<const GroupClass> host_classes,
    const LabeledPattern& pat);

// The fixed pattern library:
//   NF1          two non-adjacent vertices, classes (nontrivial, >=3)
//   NF2          three pairwise non-adjacent class-2 vertices
//   NF3          a,b,c with a-b, a-c non-edges, b-c edge, all class 2
//   NFi*NFj      the nine pairwise joins
//   C4, K33, K33+, K33++   unlabeled shapes
std::vector<LabeledPattern> builtin_patterns();

// The three obstruction patterns NF1, NF2, NF3 alone.
std::vector<LabeledPattern> nf_patterns();

// The nine join patterns NFi*NFj alone.
std::vector<LabeledPattern> nf_join_patterns();

const LabeledPattern& builtin_pattern(const std::string& name);

}  // namespace ggt
