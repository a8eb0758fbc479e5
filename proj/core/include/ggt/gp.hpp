#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/pattern.hpp"

namespace ggt::gp {

// One vertex group of a graph product: finite cyclic of order n >= 2, or
// infinite cyclic (order == 0) enumerated in the window -W..W. Elements are
// stored as integers, 0 being the identity (residues for finite cyclic).
struct VertexGroupSpec {
  int order = 2;              // 0 = infinite cyclic
  int window = 0;             // enumeration window, order == 0 only
  std::vector<int> gens;      // generating set; defaults to {1}

  bool infinite() const { return order == 0; }
};

struct GraphProductSpec {
  FiniteGraph graph;                   // presentation graph
  std::vector<VertexGroupSpec> groups; // one per vertex

  GraphProductSpec() = default;
  GraphProductSpec(FiniteGraph g, std::vector<VertexGroupSpec> gs);

  int vertex_count() const { return graph.vertex_count(); }
  bool adjacent(int u, int v) const { return graph.has_edge(u, v); }
  // cardinality class of a vertex group (order 2 vs. >= 3 or infinite)
  GroupClass group_class(int v) const;
  std::vector<GroupClass> group_classes() const;

  // group arithmetic on a single vertex group; 0 is the identity
  int compose(int v, int a, int b) const;
  int invert(int v, int a) const;
  bool in_window(int v, int a) const;
  // all nontrivial elements enumerable for vertex v (whole group when
  // finite, the window when infinite)
  std::vector<int> nontrivial_elements(int v) const;
  // generating set, symmetrized (closed under inverses)
  std::vector<int> symmetric_gens(int v) const;

  std::string vertex_name(int v) const;
};

struct Syllable {
  int vertex = 0;
  int element = 0;  // never 0 in a reduced word

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Graphically reduced word in shuffle-normal order: the lexicographically
// least representative (by vertex id) among the shuffle-equivalent reduced
// words. Two words represent the same group element iff their canonical
// forms agree syllable by syllable. Construct via normalize()/multiply().
struct ReducedWord {
  std::vector<Syllable> syllables;

  int length() const { return static_cast<int>(syllables.size()); }
  bool empty() const { return syllables.empty(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

std::uint64_t hash_word(const ReducedWord& w);
std::string to_string(const GraphProductSpec& spec, const ReducedWord& w);

// Canonical graphically reduced representative of the element spelled by
// `input`. Identity syllables are deleted; merging may push elements of
// infinite factors outside their enumeration window (words are exact, the
// window only constrains ball enumeration).
ReducedWord normalize(const GraphProductSpec& spec,
                      std::span<const Syllable> input);

// right multiplication
ReducedWord multiply(const GraphProductSpec& spec, const ReducedWord& w,
                     const Syllable& s);
ReducedWord multiply(const GraphProductSpec& spec, const ReducedWord& a,
                     const ReducedWord& b);
ReducedWord inverse(const GraphProductSpec& spec, const ReducedWord& w);

bool equal(const GraphProductSpec& spec, std::span<const Syllable> w1,
           std::span<const Syllable> w2);

// length of the canonical form; equals the distance to the identity in the
// syllable metric
int syllable_length(const GraphProductSpec& spec,
                    std::span<const Syllable> w);

// Ball around the identity in either the syllable metric (all nontrivial
// vertex-group elements as generators) or the word metric of the chosen
// generating sets. Vertices carry their canonical words, edges the
// presentation-graph vertex of their generator.
struct GroupBall {
  FiniteGraph graph;                 // induced ball; vertex 0 = identity
  std::vector<ReducedWord> words;    // per vertex
  std::vector<int> dist;             // distance to the identity
  std::vector<int> edge_label;       // per edge: presentation-graph vertex
  int radius = 0;
  // true when some true neighbour fell outside an enumeration window; the
  // returned graph is then a window truncation of the real ball
  bool window_exhausted = false;
  // true when the whole group was exhausted before the radius bound, so no
  // vertex is a truncation artifact
  bool saturated = false;

  std::optional<int> index_of(const ReducedWord& w) const;
  // vertices at distance == radius; all-false when saturated
  std::vector<bool> boundary() const;

  std::vector<std::pair<std::uint64_t, int>> index;  // sorted (hash, id)
};

// Ball of radius R in the syllable metric. Requires window >= R on every
// infinite vertex group (a narrower window would silently misshape cliques).
GroupBall qm_ball(const GraphProductSpec& spec, int radius);

// Ball of radius R in the word metric of the (symmetrized) generating sets.
GroupBall cayley_ball(const GraphProductSpec& spec, int radius);

// --- graphical decision procedures ----------------------------------------

// true iff the subgroup generated by the vertex groups of `lambda` has
// polynomial growth: every factor of the maximal join decomposition of the
// induced subgraph is a single vertex or a non-adjacent pair of class-2
// vertices
bool parabolic_has_polynomial_growth(const GraphProductSpec& spec,
                                     std::span<const int> lambda);

// true iff the group contains a rank-2 free subgroup (NF1/NF2/NF3 search)
bool contains_F2(const GraphProductSpec& spec);

// true iff some NFi*NFj join pattern embeds induced and class-consistently
bool contains_F2xF2(const GraphProductSpec& spec);

// all inclusion-maximal vertex subsets whose parabolic subgroup has
// polynomial growth
std::vector<std::vector<int>> maximal_polynomial_lambdas(
    const GraphProductSpec& spec);

// --- cosets ----------------------------------------------------------------

// Minimal-length representative of the coset g<lambda>: strips
// suffix-movable syllables with vertex in lambda until none remain.
ReducedWord coset_rep(const GraphProductSpec& spec, const ReducedWord& g,
                      std::span<const int> lambda);

// true iff the reduced form of x^-1 y uses only vertices of lambda
bool same_coset(const GraphProductSpec& spec, const ReducedWord& x,
                const ReducedWord& y, std::span<const int> lambda);

// The ball's vertices grouped into cosets of <lambda>, each coset split into
// its connected components when the truncation disconnects it.
std::vector<std::vector<int>> coset_members(const GraphProductSpec& spec,
                                            const GroupBall& ball,
                                            std::span<const int> lambda);

// --- spec files --------------------------------------------------------------

// JSON spec document: vertices with group descriptors ("c2", "c3",
// "z:window=8"), edge list by vertex name, optional generating sets.
GraphProductSpec read_spec_json(const std::string& text);
GraphProductSpec read_spec_file(const std::string& path);
std::string write_spec_json(const GraphProductSpec& spec);

// --- common fixtures ----------------------------------------------------------

// all vertex groups infinite cyclic with the given window
GraphProductSpec raag(FiniteGraph graph, int window);
// all vertex groups of order two
GraphProductSpec racg(FiniteGraph graph);
// free group of the given rank (isolated infinite-cyclic vertices)
GraphProductSpec free_group(int rank, int window);

}  // namespace ggt::gp
