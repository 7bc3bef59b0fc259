#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "hopfop/core/linalg.hpp"
#include "hopfop/operads/classic.hpp"

namespace hopfop {

/// Images in Ass(n) of the right-nested brackets
/// [a_τ(1),[a_τ(2),…,[a_τ(n−1),a_n]…]] for τ ∈ S_{n−1}, in lexicographic
/// order of τ. Each is the signed sum over unimodal words.
std::vector<LinComb> lie_to_ass(int n);

/// Lie as the suboperad of Ass spanned by the right-nested brackets. Keys
/// "lie<n>[τ]", e.g. "lie3[2,1]" for [a_2,[a_1,a_3]]; the identity is
/// "lie1[]". Compositions are computed in Ass and read back in this basis.
class LieOperad final : public Operad {
 public:
  explicit LieOperad(int max_arity = kDefaultMaxArity) : ass_(max_arity), max_arity_(max_arity) {}

  std::string name() const override { return "lie"; }
  int max_arity() const override { return max_arity_; }
  std::vector<BasisKey> basis(int n) const override;
  int arity(const BasisKey& key) const override;
  LinComb identity() const override { return LinComb("lie1[]"); }
  LinComb circ(const BasisKey& p, int i, const BasisKey& q) const override;
  LinComb act(const BasisKey& p, const Perm& sigma) const override;
  /// Not a permutation action; orbits are not defined on this basis.
  BasisKey orbit_key(const BasisKey& p) const override;

  static BasisKey key(const Perm& tau);
  /// The Ass image of a Lie element.
  LinComb to_ass(const LinComb& x) const;
  /// Expresses an element of Ass(n) in the bracket basis; throws
  /// std::domain_error when it is not a Lie element.
  LinComb from_ass(const LinComb& x, int n) const;

 private:
  struct Arity {
    std::vector<BasisKey> keys;
    std::vector<LinComb> images;
    SpanBasis span;
  };
  const Arity& data(int n) const;

  AssOperad ass_;
  int max_arity_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Arity>> cache_;
};

}  // namespace hopfop
