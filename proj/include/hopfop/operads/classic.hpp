#pragma once

#include "hopfop/operads/operad.hpp"

namespace hopfop {

/// Com(n) = k·e_n; keys "e<n>".
class ComOperad final : public Operad {
 public:
  explicit ComOperad(int max_arity = kDefaultMaxArity) : max_arity_(max_arity) {}

  std::string name() const override { return "com"; }
  int max_arity() const override { return max_arity_; }
  std::vector<BasisKey> basis(int n) const override;
  int arity(const BasisKey& key) const override;
  LinComb identity() const override { return LinComb(key(1)); }
  LinComb circ(const BasisKey& p, int i, const BasisKey& q) const override;
  LinComb act(const BasisKey& p, const Perm& sigma) const override;
  BasisKey orbit_key(const BasisKey& p) const override { return p; }

  static BasisKey key(int n) { return "e" + std::to_string(n); }

 private:
  int max_arity_;
};

/// Ass(n) with basis x^σ, σ ∈ S_n, read as the word a_σ(1)…a_σ(n); keys
/// "x[2,3,1]". x^σ·π = x^{π∘σ}.
class AssOperad final : public Operad {
 public:
  explicit AssOperad(int max_arity = kDefaultMaxArity) : max_arity_(max_arity) {}

  std::string name() const override { return "ass"; }
  int max_arity() const override { return max_arity_; }
  std::vector<BasisKey> basis(int n) const override;
  int arity(const BasisKey& key) const override;
  LinComb identity() const override { return LinComb(key(identity_perm(1))); }
  LinComb circ(const BasisKey& p, int i, const BasisKey& q) const override;
  LinComb act(const BasisKey& p, const Perm& sigma) const override;
  BasisKey orbit_key(const BasisKey& p) const override;

  static BasisKey key(const Perm& sigma) { return "x" + perm_to_string(sigma); }
  static Perm perm_of(const BasisKey& key);

 private:
  int max_arity_;
};

}  // namespace hopfop
