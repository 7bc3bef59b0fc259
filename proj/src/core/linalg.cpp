#include "hopfop/core/linalg.hpp"

namespace hopfop {

SpanBasis::SpanBasis(std::span<const LinComb> vectors) {
  for (const auto& v : vectors) insert(v);
}

void SpanBasis::reduce(LinComb& v, std::map<std::size_t, Scalar>* combo) const {
  // Rows are kept fully reduced against each other, so one pass suffices.
  for (const auto& row : rows_) {
    Scalar c = v.coefficient(row.pivot);
    if (c == 0) continue;
    v.add_scaled(row.vec, -c);
    if (combo)
      for (const auto& [i, x] : row.combo) {
        auto& slot = (*combo)[i];
        slot -= c * x;
      }
  }
}

bool SpanBasis::insert(const LinComb& v) {
  std::size_t index = family_size_++;
  LinComb r = v;
  std::map<std::size_t, Scalar> combo{{index, Scalar(1)}};
  reduce(r, &combo);
  if (r.is_zero()) return false;
  auto [pivot, pc] = *r.begin();
  Scalar inv = 1 / pc;
  r *= inv;
  for (auto& [i, x] : combo) x *= inv;
  // Eliminate the new pivot from earlier rows to stay in reduced form.
  for (auto& row : rows_) {
    Scalar c = row.vec.coefficient(pivot);
    if (c == 0) continue;
    row.vec.add_scaled(r, -c);
    for (const auto& [i, x] : combo) row.combo[i] -= c * x;
  }
  pivot_index_[pivot] = rows_.size();
  rows_.push_back(Row{pivot, std::move(r), std::move(combo)});
  return true;
}

bool SpanBasis::contains(const LinComb& v) const {
  LinComb r = v;
  reduce(r, nullptr);
  return r.is_zero();
}

std::optional<std::vector<Scalar>> SpanBasis::coordinates(const LinComb& v) const {
  LinComb r = v;
  std::map<std::size_t, Scalar> combo;
  reduce(r, &combo);
  if (!r.is_zero()) return std::nullopt;
  // reduce() subtracted the expansion; negate to get v = Σ c_i family_i.
  std::vector<Scalar> out(family_size_, Scalar(0));
  for (const auto& [i, x] : combo) out[i] = -x;
  return out;
}

std::size_t rank(std::span<const LinComb> vectors) {
  return SpanBasis(vectors).rank();
}

}  // namespace hopfop
