#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfop/core/scalar.hpp"

namespace hopfop {

/// Canonical byte encoding of a basis element. Each producer guarantees that
/// equal elements have byte-identical keys; this layer never interprets them.
using BasisKey = std::string;

/// Key of the empty word / empty forest / unit.
inline const BasisKey kUnitKey = "1";

/// Separator between the factors of a tensor key.
inline constexpr char kTensorSep = '|';

/// Suffix marking a dual-basis key p* of a primal key p.
inline constexpr char kDualMark = '*';

/// A finite formal rational combination of basis keys. No stored coefficient
/// is zero, and iteration follows the byte order of the keys.
class LinComb {
 public:
  using Terms = std::map<BasisKey, Scalar>;
  using const_iterator = Terms::const_iterator;

  LinComb() = default;
  explicit LinComb(BasisKey key, const Scalar& coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const BasisKey& key) const;

  /// Adds coeff·key, dropping the entry if the sum cancels.
  LinComb& add(const BasisKey& key, const Scalar& coeff);
  LinComb& add(BasisKey&& key, const Scalar& coeff);

  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb& operator*=(const Scalar& s);

  /// Adds s·other in one pass.
  LinComb& add_scaled(const LinComb& other, const Scalar& s);

  /// Applies a key transform, summing coefficients that collide.
  template <typename F>
  LinComb map_keys(F&& f) const {
    LinComb out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

LinComb operator+(LinComb a, const LinComb& b);
LinComb operator-(LinComb a, const LinComb& b);
LinComb operator-(LinComb a);
LinComb operator*(const Scalar& s, LinComb a);
LinComb operator*(LinComb a, const Scalar& s);

/// Joins factor keys into one flat tensor key; tensors of tensors flatten.
BasisKey tensor_key(std::span<const BasisKey> factors);
BasisKey tensor_key(const BasisKey& a, const BasisKey& b);
std::vector<BasisKey> split_tensor(std::string_view key);

/// Formal tensor product a ⊗ b.
LinComb tensor(const LinComb& a, const LinComb& b);

BasisKey dual_key(const BasisKey& primal);
bool is_dual_key(std::string_view key);
BasisKey primal_key(std::string_view dual);

/// Dual pairing <dual | primal> with <p*, q> = δ_{p,q}. Throws
/// std::invalid_argument when the dual side is not made of dual keys or the
/// primal side contains dual keys.
Scalar pair(const LinComb& dual, const LinComb& primal);

/// The (key, "num/den") list in key byte order.
std::vector<std::pair<std::string, std::string>> to_pairs(const LinComb& x);
LinComb from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

/// Human text: "2 e4* + e2*.e3* - 1/2 e3*"; "0" for the zero combination.
std::string to_text(const LinComb& x);

/// Inverse of to_text. Terms are split at top-level " + " / " - "; a term is
/// an optional leading rational coefficient followed by a key. A bare number
/// is a multiple of the unit key.
LinComb parse_lincomb(std::string_view text);

/// Splits on `sep` at bracket depth zero, trimming each piece.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string trim(std::string_view s);

}  // namespace hopfop
