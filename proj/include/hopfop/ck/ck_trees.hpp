#pragma once

#include <memory>

#include "hopfop/combinat/tree.hpp"
#include "hopfop/hopf/bialgebra.hpp"

namespace hopfop {

/// Polynomial algebra on legless rooted trees; forests are tree keys joined by
/// '*', the empty forest is kUnitKey. Δ(t) = Σ_cuts R^c ⊗ P^c + 1 ⊗ t with the
/// empty cut giving t ⊗ 1. Degree = number of vertices.
class TreeGeneratorSource final : public GeneratorSource {
 public:
  bool commutative() const override { return true; }
  char separator() const override { return '*'; }
  int degree(const BasisKey& generator) const override;
  std::vector<BasisKey> generators(int degree) const override;
  LinComb generator_coproduct(const BasisKey& generator) const override;
};

/// The Hopf algebra of rooted trees.
const FreeBialgebra& ck_tree_algebra();

BasisKey tree_key(const RootedTree& t);
BasisKey forest_key(std::vector<RootedTree> trees);
LinComb parse_forest_combination(const std::string& text);

LinComb ck_tree_coproduct(const LinComb& forests);
LinComb ck_tree_antipode(const LinComb& forests);

/// t • s = Σ_v t ∘_v s and [t,s] = t•s − s•t, over tree keys.
LinComb tree_bullet(const LinComb& t, const LinComb& s);
LinComb tree_lie_bracket(const LinComb& t, const LinComb& s);

/// φ(t) = t̃ · Π_v i_t(v)!: legs stripped, weighted by factorials of the
/// numbers of stripped legs. The identity of TM maps to 0.
LinComb phi_tm_to_lr(const LinComb& tm_element);
/// The variant that also kills every tree with a saturated vertex.
LinComb phi_tm_to_lr_mod_saturated(const LinComb& tm_element);

}  // namespace hopfop
