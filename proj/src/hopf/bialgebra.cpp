#include "hopfop/hopf/bialgebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace hopfop {

FreeBialgebra::FreeBialgebra(std::shared_ptr<const GeneratorSource> source) : source_(std::move(source)) {}

BasisKey FreeBialgebra::word_key(std::vector<BasisKey> letters) const {
  if (letters.empty()) return kUnitKey;
  if (source_->commutative()) std::sort(letters.begin(), letters.end());
  BasisKey out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out.push_back(source_->separator());
    out += letters[i];
  }
  return out;
}

std::vector<BasisKey> FreeBialgebra::letters(const BasisKey& word) const {
  if (word == kUnitKey) return {};
  return split_top_level(word, source_->separator());
}

int FreeBialgebra::degree(const BasisKey& word) const {
  int d = 0;
  for (const auto& l : letters(word)) d += source_->degree(l);
  return d;
}

LinComb FreeBialgebra::multiply(const LinComb& a, const LinComb& b) const {
  LinComb out;
  for (const auto& [ka, ca] : a) {
    auto la = letters(ka);
    for (const auto& [kb, cb] : b) {
      auto w = la;
      auto lb = letters(kb);
      w.insert(w.end(), lb.begin(), lb.end());
      out.add(word_key(std::move(w)), ca * cb);
    }
  }
  return out;
}

LinComb FreeBialgebra::generator_coproduct(const BasisKey& g) const {
  {
    std::shared_lock lock(mutex_);
    auto it = coproduct_cache_.find(g);
    if (it != coproduct_cache_.end()) return it->second;
  }
  LinComb d = source_->generator_coproduct(g);
  std::unique_lock lock(mutex_);
  return coproduct_cache_.emplace(g, std::move(d)).first->second;
}

LinComb FreeBialgebra::tensor_multiply(const LinComb& a, const LinComb& b) const {
  LinComb out;
  for (const auto& [ka, ca] : a) {
    auto fa = split_tensor(ka);
    for (const auto& [kb, cb] : b) {
      auto fb = split_tensor(kb);
      if (fa.size() != fb.size()) throw std::invalid_argument("tensor_multiply: factor count mismatch");
      std::vector<BasisKey> f(fa.size());
      for (std::size_t i = 0; i < fa.size(); ++i) {
        auto w = letters(fa[i]);
        auto l = letters(fb[i]);
        w.insert(w.end(), l.begin(), l.end());
        f[i] = word_key(std::move(w));
      }
      out.add(tensor_key(f), ca * cb);
    }
  }
  return out;
}

LinComb FreeBialgebra::coproduct_word(const BasisKey& word) const {
  LinComb acc(tensor_key(kUnitKey, kUnitKey));
  for (const auto& l : letters(word)) acc = tensor_multiply(acc, generator_coproduct(l));
  return acc;
}

LinComb FreeBialgebra::coproduct(const LinComb& x) const {
  LinComb out;
  for (const auto& [k, c] : x) out.add_scaled(coproduct_word(k), c);
  return out;
}

Scalar FreeBialgebra::counit(const LinComb& x) const {
  Scalar total = 0;
  for (const auto& [k, c] : x) {
    Scalar v = c;
    for (const auto& l : letters(k)) {
      v *= source_->generator_counit(l);
      if (v == 0) break;
    }
    total += v;
  }
  return total;
}

LinComb FreeBialgebra::generator_antipode(const BasisKey& g) const {
  {
    std::shared_lock lock(mutex_);
    auto it = antipode_cache_.find(g);
    if (it != antipode_cache_.end()) return it->second;
  }
  LinComb s(g, -1);
  for (const auto& [k, c] : generator_coproduct(g)) {
    auto f = split_tensor(k);
    if (f[0] == kUnitKey || f[1] == kUnitKey) continue;
    s.add_scaled(multiply(antipode(LinComb(f[0])), LinComb(f[1])), -c);
  }
  std::unique_lock lock(mutex_);
  return antipode_cache_.emplace(g, std::move(s)).first->second;
}

LinComb FreeBialgebra::antipode(const LinComb& x) const {
  LinComb out;
  for (const auto& [k, c] : x) {
    LinComb acc(kUnitKey);
    auto ls = letters(k);
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) acc = multiply(acc, generator_antipode(*it));
    out.add_scaled(acc, c);
  }
  return out;
}

std::vector<BasisKey> FreeBialgebra::words(int degree) const {
  std::set<BasisKey> out;
  std::vector<BasisKey> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.insert(word_key(cur));
      return;
    }
    for (int e = 1; e <= remaining; ++e)
      for (const auto& g : source_->generators(e)) {
        // Commutative words are generated in sorted order only.
        if (source_->commutative() && !cur.empty() && g < cur.back()) continue;
        cur.push_back(g);
        rec(remaining - e);
        cur.pop_back();
      }
  };
  if (degree == 0) return {kUnitKey};
  rec(degree);
  return {out.begin(), out.end()};
}

LinComb FreeBialgebra::on_factor(const LinComb& x, std::size_t index,
                                 const std::function<LinComb(const BasisKey&)>& f) {
  LinComb out;
  for (const auto& [k, c] : x) {
    auto factors = split_tensor(k);
    if (index >= factors.size()) throw std::out_of_range("on_factor: no such tensor factor");
    for (const auto& [r, rc] : f(factors[index])) {
      std::vector<BasisKey> parts(factors.begin(), factors.begin() + index);
      parts.push_back(r);
      parts.insert(parts.end(), factors.begin() + index + 1, factors.end());
      out.add(tensor_key(parts), c * rc);
    }
  }
  return out;
}

LinComb FreeBialgebra::multiply_factors(const LinComb& x, std::size_t index) const {
  LinComb out;
  for (const auto& [k, c] : x) {
    auto factors = split_tensor(k);
    if (index + 1 >= factors.size()) throw std::out_of_range("multiply_factors: no such factors");
    auto w = letters(factors[index]);
    auto l = letters(factors[index + 1]);
    w.insert(w.end(), l.begin(), l.end());
    std::vector<BasisKey> parts(factors.begin(), factors.begin() + index);
    parts.push_back(word_key(std::move(w)));
    parts.insert(parts.end(), factors.begin() + index + 2, factors.end());
    out.add(tensor_key(parts), c);
  }
  return out;
}

AxiomReport verify_bialgebra(const FreeBialgebra& B, const BialgebraVerifyOptions& o) {
  AxiomCheck unit{"coproduct of unit"}, degree{"degree preservation"}, counit{"counit"},
      coassoc{"coassociativity"}, mult{"multiplicativity"}, comm{"commutative product"},
      anti{"antipode"};
  const auto& src = B.source();
  auto delta = [&](const BasisKey& w) { return B.coproduct_word(w); };

  record(unit, B.coproduct_word(kUnitKey) == LinComb(tensor_key(kUnitKey, kUnitKey)),
         [] { return std::string("Δ(1) != 1|1"); });

  std::vector<BasisKey> gens;
  for (int d = o.min_degree; d <= o.max_degree; ++d)
    for (const auto& g : src.generators(d)) {
      gens.push_back(g);
      LinComb dg = B.generator_coproduct(g);
      bool deg_ok = true;
      for (const auto& [k, c] : dg) {
        auto f = split_tensor(k);
        if (f.size() != 2 || B.degree(f[0]) + B.degree(f[1]) != d) deg_ok = false;
      }
      record(degree, deg_ok, [&] { return "Δ(" + g + ") = " + to_text(dg); });

      LinComb left, right;
      for (const auto& [k, c] : dg) {
        auto f = split_tensor(k);
        left.add(f[1], c * B.counit(LinComb(f[0])));
        right.add(f[0], c * B.counit(LinComb(f[1])));
      }
      record(counit, left == LinComb(g) && right == LinComb(g), [&] {
        return "(ε⊗id)Δ(" + g + ") = " + to_text(left) + ", (id⊗ε)Δ = " + to_text(right);
      });

      LinComb l = FreeBialgebra::on_factor(dg, 0, delta);
      LinComb r = FreeBialgebra::on_factor(dg, 1, delta);
      record(coassoc, l == r, [&] { return g + ": (Δ⊗id)Δ - (id⊗Δ)Δ = " + to_text(l - r); });
    }

  for (const auto& g : gens)
    for (const auto& h : gens) {
      if (src.degree(g) + src.degree(h) > o.max_degree) continue;
      BasisKey w = B.word_key({g, h});
      LinComb lhs = B.coproduct_word(w);
      LinComb rhs = B.tensor_multiply(B.generator_coproduct(g), B.generator_coproduct(h));
      record(mult, lhs == rhs, [&] { return "Δ(" + g + "·" + h + ") - Δ·Δ = " + to_text(lhs - rhs); });
      if (o.commutative_product) {
        LinComb gh = B.multiply(LinComb(g), LinComb(h)), hg = B.multiply(LinComb(h), LinComb(g));
        record(comm, gh == hg, [&] { return g + " and " + h + " do not commute"; });
      }
    }

  if (o.antipode) {
    auto S = [&](const BasisKey& w) { return B.antipode(LinComb(w)); };
    for (int d = 1; d <= o.max_degree; ++d)
      for (const auto& w : B.words(d)) {
        LinComb dw = B.coproduct_word(w);
        LinComb l = B.multiply_factors(FreeBialgebra::on_factor(dw, 0, S), 0);
        LinComb r = B.multiply_factors(FreeBialgebra::on_factor(dw, 1, S), 0);
        record(anti, l.is_zero() && r.is_zero(), [&] {
          return "m(S⊗id)Δ(" + w + ") = " + to_text(l) + ", m(id⊗S)Δ = " + to_text(r);
        });
      }
  }

  AxiomReport report;
  report.checks = {unit, degree, counit, coassoc, mult};
  if (o.commutative_product) report.checks.push_back(comm);
  if (o.antipode) report.checks.push_back(anti);
  return report;
}

Scalar evaluate_character(const FreeBialgebra& B, const GeneratorValues& chi, const LinComb& x) {
  Scalar total = 0;
  for (const auto& [k, c] : x) {
    Scalar v = c;
    for (const auto& l : B.letters(k)) {
      v *= chi(l);
      if (v == 0) break;
    }
    total += v;
  }
  return total;
}

Scalar convolve(const FreeBialgebra& B, const GeneratorValues& chi, const GeneratorValues& psi,
                const LinComb& x) {
  Scalar total = 0;
  for (const auto& [k, c] : B.coproduct(x)) {
    auto f = split_tensor(k);
    total += c * evaluate_character(B, chi, LinComb(f[0])) * evaluate_character(B, psi, LinComb(f[1]));
  }
  return total;
}

}  // namespace hopfop
