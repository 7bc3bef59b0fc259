#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfop/core/lincomb.hpp"

namespace hopfop {

/// A finite-dimensional bialgebra given by structure constants on named basis
/// elements. Products and coproducts are combinations of labels and of
/// "a|b" tensor keys respectively.
class FiniteBialgebra {
 public:
  /// Text fixture, one statement per line ('#' comments):
  ///   basis e g
  ///   unit e
  ///   counit g 1
  ///   mul g g = e
  ///   coprod g = g|g
  /// Missing mul/coprod entries are zero, missing counits are 0. The axioms
  /// are checked on load; violations throw ParseError naming the first one.
  static FiniteBialgebra parse(const std::string& text);

  const std::vector<std::string>& basis() const { return basis_; }
  const LinComb& unit() const { return unit_; }
  Scalar counit(const std::string& label) const;
  Scalar counit(const LinComb& x) const;
  LinComb multiply(const std::string& a, const std::string& b) const;
  LinComb multiply(const LinComb& a, const LinComb& b) const;
  const LinComb& coproduct(const std::string& label) const;

  bool is_commutative() const;

  /// Empty string if every bialgebra axiom holds, otherwise the first failure.
  std::string axiom_violation() const;

 private:
  std::vector<std::string> basis_;
  LinComb unit_;
  std::map<std::string, Scalar> counit_;
  std::map<std::pair<std::string, std::string>, LinComb> mul_;
  std::map<std::string, LinComb> coprod_;
};

}  // namespace hopfop
