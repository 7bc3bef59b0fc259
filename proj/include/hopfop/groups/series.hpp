#pragma once

#include <string>
#include <vector>

#include "hopfop/hopf/bialgebra.hpp"
#include "hopfop/operads/operad.hpp"

namespace hopfop {

/// Σ_n p_n with p_1 the operad identity, truncated at arity N.
class OperadSeries {
 public:
  OperadSeries(OperadPtr operad, int order);

  /// The neutral series (all components above arity one vanish).
  static OperadSeries identity(OperadPtr operad, int order) { return OperadSeries(std::move(operad), order); }

  const Operad& operad() const { return *operad_; }
  const OperadPtr& operad_ptr() const { return operad_; }
  int order() const { return order_; }

  /// p_n; component(1) is the operad identity.
  LinComb component(int n) const;
  /// Sets p_n for 2 <= n <= order; throws on keys of the wrong arity.
  void set_component(int n, LinComb value);

  /// All components are reduced to orbit representatives.
  bool coinvariant() const { return coinvariant_; }

  friend bool operator==(const OperadSeries& a, const OperadSeries& b);

 private:
  friend OperadSeries to_coinvariants(const OperadSeries& f);
  OperadPtr operad_;
  int order_;
  std::vector<LinComb> components_;  // index n, entries 0 and 1 unused
  bool coinvariant_ = false;
};

/// (f∘g)_n = Σ_k Σ_{m_1+…+m_k=n} γ(f_k; g_{m_1},…,g_{m_k}). Throws
/// std::invalid_argument for different operads or orders.
OperadSeries compose(const OperadSeries& f, const OperadSeries& g);

/// The two-sided inverse, solved degree by degree from f∘g = id and then
/// checked against g∘f = id (std::logic_error if that fails).
OperadSeries invert(const OperadSeries& f);

/// Orbit reduction of every component.
OperadSeries to_coinvariants(const OperadSeries& f);

/// χ_f on generators p* of H_P (or orbit duals of Hbar_P): the coefficient
/// of p in f.
GeneratorValues series_character(const OperadSeries& f);

/// Com series ↔ power series: e_n ↦ x^n. Accepts "x + x^2 - 1/2 x^3".
OperadSeries parse_com_polynomial(OperadPtr com, const std::string& text, int order);
std::string format_com_polynomial(const OperadSeries& f);

/// Per-arity text "n: <lincomb>" lines for arities 2..N.
std::string format_series(const OperadSeries& f);
OperadSeries parse_series(OperadPtr operad, const std::string& text, int order);

}  // namespace hopfop
