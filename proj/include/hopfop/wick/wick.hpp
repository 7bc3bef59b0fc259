#pragma once

#include <string>
#include <vector>

#include "hopfop/combinat/graph.hpp"
#include "hopfop/core/lincomb.hpp"

namespace hopfop {

/// V = k^d with a symmetric bilinear form b (indices 1..d).
struct QuadraticSpace {
  int d = 0;
  std::vector<std::vector<Scalar>> b;

  /// Throws std::invalid_argument when b is not a symmetric d×d array.
  void validate() const;
  const Scalar& form(int i, int j) const { return b[i - 1][j - 1]; }
};

/// d lines of d rationals separated by whitespace; '#' starts a comment.
QuadraticSpace parse_quadratic_space(const std::string& text);

/// A monomial of S^k V as a sorted multiset of indices; key "{1,1,2}".
using SymWord = std::vector<int>;

BasisKey sym_word_key(SymWord w);
SymWord parse_sym_word(std::string_view key);
/// All monomials of length k in d letters.
std::vector<SymWord> sym_words(int k, int d);

/// Contracts edge (i,j) of a tuple of monomials: sum over one letter chosen
/// from slot i and one from slot j, weighted by b, both letters removed.
/// Keys of the result are tensor keys of the slots.
LinComb contract_edge(const std::vector<SymWord>& slots, int i, int j, const QuadraticSpace& V);

/// τ^η: 0 unless slot i has exactly valence(i) letters; otherwise contract
/// every edge, merge the surviving letters, and multiply by Π_i (legs at i)!.
LinComb tau_eta(const LabelledGraph& eta, const std::vector<SymWord>& args, const QuadraticSpace& V);

/// τ^η / |Aut(η)|.
LinComb gamma_algebra(const LabelledGraph& eta, const std::vector<SymWord>& args, const QuadraticSpace& V);

/// τ^η ∘_1 τ^ζ versus Σ_b τ^{η ∘_b ζ} on every argument tuple. Returns the
/// number of tuples checked; sets `witness` and returns -1 on a mismatch.
long check_wick_composition(const LabelledGraph& eta, const LabelledGraph& zeta, const QuadraticSpace& V,
                            std::string* witness = nullptr);

}  // namespace hopfop
