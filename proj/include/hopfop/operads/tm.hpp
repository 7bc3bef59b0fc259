#pragma once

#include <map>
#include <mutex>

#include "hopfop/combinat/tree.hpp"
#include "hopfop/operads/operad.hpp"

namespace hopfop {

/// The free operad on one generator in each arity n >= 2: leg-labelled
/// rooted trees with at least two legs-plus-children at every vertex.
/// Keys are tree encodings with labelled legs; the identity is "id".
/// p ∘_i q grafts the root of q onto the vertex carrying leg i.
class TmOperad final : public Operad {
 public:
  explicit TmOperad(int max_arity = 5) : max_arity_(max_arity) {}

  std::string name() const override { return "tm"; }
  int max_arity() const override { return max_arity_; }
  std::vector<BasisKey> basis(int n) const override;
  int arity(const BasisKey& key) const override;
  LinComb identity() const override { return LinComb(kIdentity); }
  LinComb circ(const BasisKey& p, int i, const BasisKey& q) const override;
  LinComb act(const BasisKey& p, const Perm& sigma) const override;
  BasisKey orbit_key(const BasisKey& p) const override;

  static inline const BasisKey kIdentity = "id";

 private:
  int max_arity_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<BasisKey>> cache_;
};

/// t ∘_i s on leg-labelled trees.
RootedTree tm_graft(const RootedTree& t, int i, const RootedTree& s);

}  // namespace hopfop
