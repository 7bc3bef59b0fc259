#pragma once

#include <map>
#include <mutex>

#include "hopfop/combinat/graph.hpp"
#include "hopfop/operads/operad.hpp"

namespace hopfop {

enum class GraphVariant {
  Gamma,       // one term per class of bijections
  GammaTilde,  // every bijection counted
};

/// η ∘_b ζ for one bijection b: b[h] is the leg slot of ζ receiving the h-th
/// half-edge at vertex k, where the half-edges are the edges at k in edge-list
/// order followed by the legs at k. Vertex k is replaced by the vertices of ζ
/// (numbered k..k+m−1) and later vertices of η shift up by m−1.
LabelledGraph graph_compose_with(const LabelledGraph& eta, int k, const LabelledGraph& zeta,
                                 const std::vector<int>& b);

/// Σ over bijections of the canonical results; 0 when the valence of vertex k
/// differs from the number of legs of ζ. Keys are format_graph of normal forms.
LinComb graph_circ(GraphVariant variant, const LabelledGraph& eta, int k, const LabelledGraph& zeta);

/// Γ, Γ̃ or the 1PI suboperad Γ_PI, truncated to vertex valence at most
/// max_valence (composition never raises a valence, so this is a suboperad).
/// Arity one holds the corollas ξ_m for m up to max_valence·max_arity, enough
/// legs to receive any basis graph, so the identity Σ_m ξ_m (scaled by 1/m!
/// in Γ̃) is a unit for the whole truncation.
class GraphOperad final : public Operad {
 public:
  GraphOperad(GraphVariant variant, bool one_pi, int max_valence = 3, int max_arity = 4);

  std::string name() const override;
  int max_arity() const override { return max_arity_; }
  int max_valence() const { return max_valence_; }
  GraphVariant variant() const { return variant_; }
  bool one_pi() const { return one_pi_; }

  std::vector<BasisKey> basis(int n) const override;
  int arity(const BasisKey& key) const override;
  LinComb identity() const override;
  LinComb circ(const BasisKey& p, int i, const BasisKey& q) const override;
  LinComb act(const BasisKey& p, const Perm& sigma) const override;
  BasisKey orbit_key(const BasisKey& p) const override;

  static BasisKey key(const LabelledGraph& g) { return format_graph(normalize(g)); }

 private:
  int corolla_bound() const { return one_pi_ ? max_valence_ : max_valence_ * max_arity_; }

  GraphVariant variant_;
  bool one_pi_;
  int max_valence_;
  int max_arity_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<BasisKey>> cache_;
};

}  // namespace hopfop
