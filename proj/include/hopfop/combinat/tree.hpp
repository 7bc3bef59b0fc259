#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hopfop {

/// Rooted tree whose vertices carry extra external legs (beyond the root
/// leg). Legs are labelled by positive integers or left unlabelled (0).
/// Trees of the Connes-Kreimer algebra have no extra legs at all.
struct RootedTree {
  std::vector<int> legs;
  std::vector<RootedTree> children;

  int vertex_count() const;
  int leg_total() const;
  int edge_count() const { return vertex_count() - 1; }

  friend std::strong_ordering operator<=>(const RootedTree&, const RootedTree&) = default;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Sorts legs and children recursively; equal canonical forms iff isomorphic.
RootedTree canonicalize(RootedTree t);

/// `(l:0 (l:0) (l:1))`; labelled legs print as `l:[1,3]`. Canonical input
/// gives a canonical key.
std::string format_tree(const RootedTree& t);
RootedTree parse_tree(std::string_view text);

RootedTree single_vertex();
/// n vertices in a line.
RootedTree chain_tree(int n);
/// A root with n leaf children.
RootedTree corolla_tree(int n);

/// Vertices in preorder (root = 1, children in canonical order).
std::vector<const RootedTree*> preorder(const RootedTree& t);

/// t ∘_v s: attach the root of s as a new child of vertex v (preorder,
/// 1-based). Throws std::out_of_range for an invalid vertex.
RootedTree graft(const RootedTree& t, int v, const RootedTree& s);

/// Drops every extra leg.
RootedTree strip_legs(const RootedTree& t);

struct Cut {
  std::vector<int> edges;       // preorder index of the lower endpoint of each cut edge
  RootedTree root_part;         // R^c
  std::vector<RootedTree> pruned;  // P^c, canonical and sorted
};

/// All admissible cuts of t, the empty cut first.
std::vector<Cut> admissible_cuts(const RootedTree& t);

/// Unlabelled legless trees with n vertices, canonical and sorted.
std::vector<RootedTree> enumerate_trees(int n);

/// Leg-labelled trees with legs {1..n}, every vertex carrying at least two
/// legs-plus-children. Canonical and sorted.
std::vector<RootedTree> enumerate_tm_trees(int n);

/// True when some vertex has no extra legs.
bool has_saturated_vertex(const RootedTree& t);

}  // namespace hopfop
