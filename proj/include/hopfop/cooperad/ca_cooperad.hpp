#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfop/cooperad/finite_bialgebra.hpp"
#include "hopfop/hopf/bialgebra.hpp"

namespace hopfop {

/// A basis element (a_1,…,a_n) of C_A(n) = A^{⊗n}, keyed "[a1,a2,…]".
using ATuple = std::vector<std::string>;

BasisKey tuple_key(const ATuple& t);
ATuple parse_tuple(std::string_view key);

/// γ* of the C_A cooperad for one composition n = n_1+…+n_k: every x_i is
/// Sweedler-expanded, the primed parts of each block are multiplied in A and
/// the double-primed parts are kept. Keys are "[outer]|[block1]|…|[blockk]".
/// Throws invalid_argument if a key's arity differs from Σ n_i.
LinComb ca_cocomposition(const FiniteBialgebra& A, const LinComb& x, const std::vector<int>& parts);

/// Both nestings of γ* agree for every basis tuple of arity ≤ max_arity and
/// every pair of nested compositions; counit laws for k = 1 and k = n.
AxiomReport verify_ca_cooperad(const FiniteBialgebra& A, int max_arity);

/// Compatibility of γ* with permutations of tensor factors: within-block
/// permutations and block permutations, on all basis tuples up to max_arity.
/// Holds exactly when the product of A is commutative.
AxiomReport verify_ca_equivariance(const FiniteBialgebra& A, int max_arity);

enum class BcaVariant { Tensor, Symmetric };

/// Generators of B_{C_A} (Tensor) or of the symmetric algebra on invariants
/// (Symmetric, keys "{…}" naming orbit sums). Generator degree is arity − 1.
/// With pinter the arity-one part is collapsed to k through ε, leaving a
/// connected algebra.
class CaGeneratorSource final : public GeneratorSource {
 public:
  CaGeneratorSource(std::shared_ptr<const FiniteBialgebra> A, BcaVariant variant, bool pinter);

  bool commutative() const override { return variant_ == BcaVariant::Symmetric; }
  char separator() const override { return '.'; }
  int degree(const BasisKey& generator) const override;
  std::vector<BasisKey> generators(int degree) const override;
  LinComb generator_coproduct(const BasisKey& generator) const override;
  Scalar generator_counit(const BasisKey& generator) const override;

  bool pinter() const { return pinter_; }

 private:
  LinComb tuple_coproduct(const ATuple& t) const;

  std::shared_ptr<const FiniteBialgebra> A_;
  BcaVariant variant_;
  bool pinter_;
};

/// Throws invalid_argument for the symmetric variant over noncommutative A.
std::shared_ptr<FreeBialgebra> build_bca(std::shared_ptr<const FiniteBialgebra> A, BcaVariant variant,
                                         bool pinter);

/// Bialgebra axioms up to max_degree; the antipode only in the Pinter case.
AxiomReport verify_bca(std::shared_ptr<const FiniteBialgebra> A, BcaVariant variant, bool pinter,
                       int max_degree);

}  // namespace hopfop
