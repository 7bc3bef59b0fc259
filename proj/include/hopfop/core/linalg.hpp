#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hopfop/core/lincomb.hpp"

namespace hopfop {

/// Exact reduced row-echelon form of a finite family of combinations, with
/// enough bookkeeping to express members of the span in the original family.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(std::span<const LinComb> vectors);

  /// Adds one vector; returns false if it was already in the span.
  bool insert(const LinComb& v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t family_size() const noexcept { return family_size_; }

  bool contains(const LinComb& v) const;

  /// Coefficients c_i with Σ c_i·family_i = v, or nullopt outside the span.
  /// Unique when the family is independent.
  std::optional<std::vector<Scalar>> coordinates(const LinComb& v) const;

 private:
  struct Row {
    BasisKey pivot;
    LinComb vec;                      // pivot coefficient normalised to 1
    std::map<std::size_t, Scalar> combo;  // vec = Σ combo[i]·family_i
  };
  void reduce(LinComb& v, std::map<std::size_t, Scalar>* combo) const;

  std::vector<Row> rows_;
  std::map<BasisKey, std::size_t> pivot_index_;
  std::size_t family_size_ = 0;
};

std::size_t rank(std::span<const LinComb> vectors);

}  // namespace hopfop
