#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfop/core/perm.hpp"
#include "hopfop/core/scalar.hpp"

namespace hopfop {

/// A multigraph on vertices numbered 1..n with external legs. Self-loops are
/// forbidden, parallel edges are allowed. Legs carry no labels beyond the
/// vertex they are attached to.
struct LabelledGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, stored i < j
  std::vector<int> legs;                   // leg slot -> vertex

  /// Throws std::invalid_argument on self-loops or out-of-range vertices.
  void validate() const;

  /// |l_η(k)|: edges and legs attached to vertex k.
  int valence(int k) const;
  int leg_count(int k) const;
  int total_legs() const { return static_cast<int>(legs.size()); }
  std::vector<int> leg_counts() const;

  friend auto operator<=>(const LabelledGraph&, const LabelledGraph&) = default;
  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;
};

/// `n=3;e={1-2,1-2,2-3};legs=[1,1,3]` (whitespace ignored on input).
LabelledGraph parse_graph(std::string_view text);
std::string format_graph(const LabelledGraph& g);

struct CanonicalGraph {
  LabelledGraph graph;
  std::uint64_t numbered_aut_count = 0;  // |Aut(η)|
};

/// Canonical representative of the numbered isomorphism class: vertex
/// numbering is kept, parallel edges and the legs at each vertex are
/// interchangeable, so the minimum is the sorted edge and leg lists.
/// |Aut(η)| is counted by enumerating the compatible edge and leg bijections.
CanonicalGraph canonical_graph(const LabelledGraph& g);

/// Shorthand: canonical form only, no automorphism count.
LabelledGraph normalize(const LabelledGraph& g);

/// Renumbers vertex v as perm[v-1].
LabelledGraph relabel_vertices(const LabelledGraph& g, const Perm& perm);

/// Canonical representative of the unnumbered class η̄: minimum over all
/// vertex renumberings of the numbered canonical form.
LabelledGraph unnumbered_canonical(const LabelledGraph& g);

struct IsoResult {
  bool iso = false;
  std::uint64_t unnumbered_aut_count = 0;  // |Aut(η̄)| when iso
};

/// Isomorphism up to vertex renumbering; brute force over S_n.
IsoResult unnumbered_iso(const LabelledGraph& g, const LabelledGraph& h);

/// Number of vertex permutations fixing the numbered class of g; equals
/// |Aut(η̄)| / |Aut(η)|.
std::uint64_t vertex_stabilizer_size(const LabelledGraph& g);

/// S(η̄) = |Aut(η̄)| / |Aut(η)|.
Scalar symmetry_factor(const LabelledGraph& g);

bool is_connected(const LabelledGraph& g);

/// Connected, bridgeless, at least two legs, every valence in {2,3}.
bool is_1pi(const LabelledGraph& g);

/// 1PI with at most three legs, so that it can be inserted at a vertex of a
/// graph whose valences are at most three.
bool is_insertable_1pi(const LabelledGraph& g);

/// One vertex with m legs.
LabelledGraph corolla_graph(int m);

/// All numbered classes (canonical forms) on n vertices whose valences are at
/// most max_valence.
std::vector<LabelledGraph> enumerate_graphs(int n, int max_valence);

}  // namespace hopfop
