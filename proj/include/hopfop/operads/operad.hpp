#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfop/core/lincomb.hpp"
#include "hopfop/core/perm.hpp"
#include "hopfop/core/report.hpp"

namespace hopfop {

/// Library-wide truncation: arity spaces are only enumerated up to max_arity.
inline constexpr int kDefaultMaxArity = 6;

/// A symmetric operad of finite type, given by a basis per arity, the right
/// action of S_n and the partial compositions ∘_i on basis elements.
/// Conventions: (p·σ)(x_1..x_n) = p(x_σ(1)..x_σ(n)); p ∘_i q plugs q into
/// input i and renumbers the inputs left to right.
class Operad {
 public:
  virtual ~Operad() = default;

  virtual std::string name() const = 0;
  virtual int max_arity() const { return kDefaultMaxArity; }

  /// Canonical keys of the basis of P(n), sorted. Empty for n > max_arity.
  virtual std::vector<BasisKey> basis(int n) const = 0;
  virtual int arity(const BasisKey& key) const = 0;
  virtual LinComb identity() const = 0;

  virtual LinComb circ(const BasisKey& p, int i, const BasisKey& q) const = 0;
  virtual LinComb act(const BasisKey& p, const Perm& sigma) const = 0;

  /// Representative of the S_n-orbit of a basis element. The default takes the
  /// smallest key over all σ and needs the action to permute the basis.
  virtual BasisKey orbit_key(const BasisKey& p) const;
};

using OperadPtr = std::shared_ptr<const Operad>;

/// Arity of a nonzero homogeneous element; throws std::invalid_argument on
/// mixed arities or the zero element.
int arity_of(const Operad& P, const LinComb& x);

LinComb circ(const Operad& P, const LinComb& p, int i, const LinComb& q);
LinComb act(const Operad& P, const LinComb& p, const Perm& sigma);

/// γ(p; q_1..q_k) built from partial compositions, innermost slot last so
/// earlier slots keep their numbering. Throws on an arity mismatch.
LinComb gamma(const Operad& P, const LinComb& p, const std::vector<LinComb>& qs);

/// Σ_i p ∘_i q − Σ_j q ∘_j p.
LinComb lie_bracket(const Operad& P, const LinComb& p, const LinComb& q);

/// Replaces each key by its orbit representative.
LinComb to_coinvariants(const Operad& P, const LinComb& x);

/// Exhaustive check on basis elements whose composites stay within
/// max_arity: unit laws, sequential and parallel associativity of ∘_i, and
/// equivariance of ∘_i under S_n on either argument.
AxiomReport verify_operad_axioms(const Operad& P, int max_arity);

}  // namespace hopfop
