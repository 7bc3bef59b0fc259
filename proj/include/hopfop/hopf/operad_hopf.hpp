#pragma once

#include <map>
#include <mutex>

#include "hopfop/hopf/bialgebra.hpp"
#include "hopfop/operads/operad.hpp"

namespace hopfop {

enum class HopfVariant {
  H,     // tensor algebra on the duals p*, p in P(n), n >= 2
  Hbar,  // polynomial algebra on orbit duals u_O = Σ_{r∈O} r*
  Sym,   // polynomial algebra on all duals p*; receives both H and Hbar
};

HopfVariant parse_hopf_variant(const std::string& text);

/// Generators and coproducts of the pointed Hopf algebras of an operad,
/// obtained by transposing γ over the finite bases: Δ(r*) collects
/// ⟨r*, γ(p; q_1..q_k)⟩ p* ⊗ q_1*…q_k* with arity-one duals set to 1.
/// Generator keys are dual keys "p*"; an orbit dual is named after the dual
/// of its representative. Degree of p* is arity(p) − 1.
class OperadHopfSource final : public GeneratorSource {
 public:
  OperadHopfSource(OperadPtr operad, HopfVariant variant, int max_degree);

  bool commutative() const override { return variant_ != HopfVariant::H; }
  char separator() const override { return '.'; }
  int degree(const BasisKey& generator) const override;
  std::vector<BasisKey> generators(int degree) const override;
  LinComb generator_coproduct(const BasisKey& generator) const override;

  const Operad& operad() const { return *operad_; }
  HopfVariant variant() const { return variant_; }
  int max_degree() const { return max_degree_; }

  /// Members of the orbit with representative `rep` (primal keys).
  std::vector<BasisKey> orbit(const BasisKey& rep) const;

 private:
  const std::map<BasisKey, LinComb>& table(int arity) const;
  void check_degree(int degree) const;

  OperadPtr operad_;
  HopfVariant variant_;
  int max_degree_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::map<BasisKey, LinComb>> tables_;  // r -> Δ(r*) in Sym form
  mutable std::map<int, std::map<BasisKey, LinComb>> raw_;     // r -> Δ(r*) in H form
};

FreeBialgebra make_operad_hopf(OperadPtr operad, HopfVariant variant, int max_degree);

/// H → Sym: forget the order of letters (per tensor factor).
LinComb symmetrize(const FreeBialgebra& sym, const LinComb& x);
/// Hbar → Sym: u_O ↦ Σ_{r∈O} r*, extended multiplicatively (per tensor factor).
LinComb expand_orbit_duals(const FreeBialgebra& hbar, const FreeBialgebra& sym, const LinComb& x);

/// Both maps into Sym commute with Δ on all generators up to max_degree.
AxiomReport verify_symmetric_maps(OperadPtr operad, int max_degree);

/// The full report for one variant: bialgebra axioms, antipode law, and for
/// Hbar commutativity of the product.
AxiomReport verify_hopf(OperadPtr operad, HopfVariant variant, int max_degree);

}  // namespace hopfop
