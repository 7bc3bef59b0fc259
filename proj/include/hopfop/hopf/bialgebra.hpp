#pragma once

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfop/core/lincomb.hpp"
#include "hopfop/core/report.hpp"

namespace hopfop {

/// Raised when a computation needs data beyond the configured truncation.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Generators and their coproducts for a free graded bialgebra (tensor algebra
/// or, when commutative, polynomial algebra). Coproduct keys are tensor keys
/// "left|right" of words in the same generators, with kUnitKey for 1.
class GeneratorSource {
 public:
  virtual ~GeneratorSource() = default;
  virtual bool commutative() const = 0;
  /// Joins the letters of a word; must not occur inside generator keys.
  virtual char separator() const = 0;
  virtual int degree(const BasisKey& generator) const = 0;
  virtual std::vector<BasisKey> generators(int degree) const = 0;
  virtual LinComb generator_coproduct(const BasisKey& generator) const = 0;
  /// ε on a generator; zero for the connected algebras.
  virtual Scalar generator_counit(const BasisKey&) const { return 0; }
};

/// Words in the generators with the multiplicative extension of the
/// generator coproducts, the counit, and the connected graded antipode.
class FreeBialgebra {
 public:
  explicit FreeBialgebra(std::shared_ptr<const GeneratorSource> source);

  const GeneratorSource& source() const { return *source_; }

  BasisKey word_key(std::vector<BasisKey> letters) const;
  std::vector<BasisKey> letters(const BasisKey& word) const;
  int degree(const BasisKey& word) const;

  LinComb multiply(const LinComb& a, const LinComb& b) const;
  LinComb coproduct(const LinComb& x) const;
  LinComb coproduct_word(const BasisKey& word) const;
  LinComb generator_coproduct(const BasisKey& generator) const;
  Scalar counit(const LinComb& x) const;
  /// S(g) = −g − Σ S(g′)g″ over the reduced coproduct; anti-multiplicative.
  LinComb antipode(const LinComb& x) const;

  /// All words of exactly this degree (sorted multisets when commutative).
  std::vector<BasisKey> words(int degree) const;

  /// Applies f to tensor factor `index` of every key, flattening the result.
  static LinComb on_factor(const LinComb& x, std::size_t index,
                           const std::function<LinComb(const BasisKey&)>& f);
  /// Multiplies adjacent tensor factors `index` and `index+1`.
  LinComb multiply_factors(const LinComb& x, std::size_t index) const;
  /// Factorwise product of two tensors with the same number of factors.
  LinComb tensor_multiply(const LinComb& a, const LinComb& b) const;

 private:
  LinComb generator_antipode(const BasisKey& generator) const;

  std::shared_ptr<const GeneratorSource> source_;
  mutable std::shared_mutex mutex_;
  mutable std::map<BasisKey, LinComb> coproduct_cache_;
  mutable std::map<BasisKey, LinComb> antipode_cache_;
};

struct BialgebraVerifyOptions {
  int min_degree = 1;  // 0 when degree-zero generators exist (no antipode then)
  int max_degree = 3;
  bool antipode = true;
  bool commutative_product = false;  // also check that the product commutes
};

/// Coassociativity, counit, degree preservation and multiplicativity of Δ on
/// generators, plus the antipode law on every word, up to max_degree.
AxiomReport verify_bialgebra(const FreeBialgebra& B, const BialgebraVerifyOptions& options);

/// Value of a character given on generators, extended multiplicatively.
using GeneratorValues = std::function<Scalar(const BasisKey& generator)>;
Scalar evaluate_character(const FreeBialgebra& B, const GeneratorValues& chi, const LinComb& x);

/// (χ ⋆ ψ)(x) = (χ ⊗ ψ)Δ(x).
Scalar convolve(const FreeBialgebra& B, const GeneratorValues& chi, const GeneratorValues& psi,
                const LinComb& x);

}  // namespace hopfop
