#pragma once

#include "hopfop/combinat/graph.hpp"
#include "hopfop/hopf/bialgebra.hpp"

namespace hopfop {

/// Unnumbered 1PI classes with n vertices (n >= 2), as canonical keys.
std::vector<BasisKey> one_pi_classes(int n);

/// Polynomial algebra on unnumbered 1PI classes with at least two vertices;
/// one-vertex graphs are the unit. Monomials join class keys with '*'.
/// Δ(η̄) = Σ η̄/ζ̄ ⊗ ζ̄ over vertex partitions whose nontrivial blocks induce
/// 1PI subgraphs; the quotient contracts each block to a vertex.
/// Degree = vertices − 1.
class GraphGeneratorSource final : public GeneratorSource {
 public:
  bool commutative() const override { return true; }
  char separator() const override { return '*'; }
  int degree(const BasisKey& generator) const override;
  std::vector<BasisKey> generators(int degree) const override;
  LinComb generator_coproduct(const BasisKey& generator) const override;
};

const FreeBialgebra& ck_graph_algebra();

/// Canonical monomial key of a product of graphs (one-vertex factors dropped).
BasisKey graph_monomial_key(const std::vector<LabelledGraph>& factors);

LinComb graph_hopf_coproduct(const LinComb& monomials);

/// Insertion bracket of Γ_PI on coinvariants:
/// Σ_v Σ_[b] η ∘_b ζ − Σ_w Σ_[b'] ζ ∘_b' η, reduced to unnumbered classes.
LinComb graph_lie_bracket(const LabelledGraph& eta, const LabelledGraph& zeta);

/// Bracket of the dual basis elements δ_η̄, δ_ζ̄ in the Lie algebra dual to the
/// graph coproduct: coefficient of δ_g is ⟨Δg, η̄⊗ζ̄ − ζ̄⊗η̄⟩.
LinComb graph_dual_bracket(const LabelledGraph& eta, const LabelledGraph& zeta);

/// Checks Ψ([a,b]) = [Ψa, Ψb] for Ψ(η̄) = S(η̄)·δ_η̄ on all pairs of 1PI
/// classes with 2..max_vertices vertices.
AxiomReport ck_iso_check(int max_vertices);

}  // namespace hopfop
