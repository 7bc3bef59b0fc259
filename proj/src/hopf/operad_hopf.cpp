#include "hopfop/hopf/operad_hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfop {

HopfVariant parse_hopf_variant(const std::string& text) {
  if (text == "H") return HopfVariant::H;
  if (text == "Hbar") return HopfVariant::Hbar;
  if (text == "Sym") return HopfVariant::Sym;
  throw std::invalid_argument("unknown Hopf variant '" + text + "' (expected H, Hbar or Sym)");
}

OperadHopfSource::OperadHopfSource(OperadPtr operad, HopfVariant variant, int max_degree)
    : operad_(std::move(operad)), variant_(variant), max_degree_(max_degree) {
  if (max_degree_ + 1 > operad_->max_arity())
    throw TruncationError(operad_->name() + ": degree " + std::to_string(max_degree_) +
                          " needs arity " + std::to_string(max_degree_ + 1) + " > max arity " +
                          std::to_string(operad_->max_arity()));
  for (const auto& [k, c] : operad_->identity())
    if (c != 1)
      throw std::invalid_argument(operad_->name() +
                                  ": the pointed construction needs an identity that is a sum of basis "
                                  "elements with coefficient 1");
}

void OperadHopfSource::check_degree(int degree) const {
  if (degree > max_degree_)
    throw TruncationError("degree " + std::to_string(degree) + " exceeds the cap " +
                          std::to_string(max_degree_));
}

int OperadHopfSource::degree(const BasisKey& generator) const {
  return operad_->arity(primal_key(generator)) - 1;
}

std::vector<BasisKey> OperadHopfSource::generators(int degree) const {
  check_degree(degree);
  std::vector<BasisKey> out;
  if (degree < 1) return out;
  for (const auto& r : operad_->basis(degree + 1))
    if (variant_ != HopfVariant::Hbar || operad_->orbit_key(r) == r) out.push_back(dual_key(r));
  return out;
}

std::vector<BasisKey> OperadHopfSource::orbit(const BasisKey& rep) const {
  std::vector<BasisKey> out;
  for (const auto& r : operad_->basis(operad_->arity(rep)))
    if (operad_->orbit_key(r) == rep) out.push_back(r);
  return out;
}

const std::map<BasisKey, LinComb>& OperadHopfSource::table(int n) const {
  std::lock_guard lock(mutex_);
  auto found = raw_.find(n);
  if (found != raw_.end()) return variant_ == HopfVariant::H ? found->second : tables_.at(n);

  const Operad& P = *operad_;
  std::map<BasisKey, LinComb> raw, sym;
  for (int k = 1; k <= n; ++k) {
    auto outer = P.basis(k);
    for (const auto& m : compositions(n, k)) {
      std::vector<std::vector<BasisKey>> inner;
      std::vector<std::size_t> sizes{outer.size()};
      for (int mi : m) {
        inner.push_back(P.basis(mi));
        sizes.push_back(inner.back().size());
      }
      for_each_index_tuple(sizes, [&](std::span<const std::size_t> idx) {
        const BasisKey& p = outer[idx[0]];
        std::vector<LinComb> qs;
        std::vector<BasisKey> right;
        for (int i = 0; i < k; ++i) {
          const BasisKey& q = inner[i][idx[i + 1]];
          qs.emplace_back(q);
          if (m[i] >= 2) right.push_back(dual_key(q));
        }
        LinComb composed = gamma(P, LinComb(p), qs);
        if (composed.is_zero()) return;
        BasisKey left = k >= 2 ? dual_key(p) : kUnitKey;
        auto join = [](const std::vector<BasisKey>& letters) {
          if (letters.empty()) return kUnitKey;
          BasisKey w;
          for (std::size_t i = 0; i < letters.size(); ++i) w += (i ? "." : "") + letters[i];
          return w;
        };
        BasisKey h_key = tensor_key(left, join(right));
        auto sorted = right;
        std::sort(sorted.begin(), sorted.end());
        BasisKey s_key = tensor_key(left, join(sorted));
        for (const auto& [r, c] : composed) {
          raw[r].add(h_key, c);
          sym[r].add(s_key, c);
        }
      });
    }
  }
  tables_[n] = std::move(sym);
  auto& slot = raw_[n] = std::move(raw);
  return variant_ == HopfVariant::H ? slot : tables_.at(n);
}

LinComb OperadHopfSource::generator_coproduct(const BasisKey& generator) const {
  const BasisKey r = primal_key(generator);
  const int n = operad_->arity(r);
  check_degree(n - 1);
  if (n < 2) throw std::invalid_argument("arity-one elements are identified with the unit");
  const auto& t = table(n);
  if (variant_ != HopfVariant::Hbar) {
    auto it = t.find(r);
    return it == t.end() ? LinComb() : it->second;
  }
  if (operad_->orbit_key(r) != r) throw std::invalid_argument(generator + " is not an orbit representative");
  LinComb total;
  for (const auto& member : orbit(r)) {
    auto it = t.find(member);
    if (it != t.end()) total += it->second;
  }
  // The sum is invariant, so its coefficient on a product of representative
  // duals is its coefficient on the corresponding product of orbit duals.
  auto is_rep_word = [&](const BasisKey& w) {
    if (w == kUnitKey) return true;
    for (const auto& l : split_top_level(w, '.'))
      if (operad_->orbit_key(primal_key(l)) != primal_key(l)) return false;
    return true;
  };
  LinComb out;
  for (const auto& [k, c] : total) {
    auto f = split_tensor(k);
    if (is_rep_word(f[0]) && is_rep_word(f[1])) out.add(k, c);
  }
  return out;
}

FreeBialgebra make_operad_hopf(OperadPtr operad, HopfVariant variant, int max_degree) {
  return FreeBialgebra(std::make_shared<OperadHopfSource>(std::move(operad), variant, max_degree));
}

namespace {

LinComb per_factor(const LinComb& x, const std::function<LinComb(const BasisKey&)>& f) {
  LinComb out;
  for (const auto& [k, c] : x) {
    auto factors = split_tensor(k);
    LinComb acc(kUnitKey);
    bool first = true;
    for (const auto& fac : factors) {
      LinComb image = f(fac);
      if (first) {
        acc = image;
        first = false;
      } else {
        acc = tensor(acc, image);
      }
    }
    out.add_scaled(acc, c);
  }
  return out;
}

}  // namespace

LinComb symmetrize(const FreeBialgebra& sym, const LinComb& x) {
  return per_factor(x, [&](const BasisKey& w) { return LinComb(sym.word_key(sym.letters(w))); });
}

LinComb expand_orbit_duals(const FreeBialgebra& hbar, const FreeBialgebra& sym, const LinComb& x) {
  const auto& src = dynamic_cast<const OperadHopfSource&>(hbar.source());
  return per_factor(x, [&](const BasisKey& w) {
    LinComb acc(kUnitKey);
    for (const auto& l : hbar.letters(w)) {
      LinComb u;
      for (const auto& r : src.orbit(primal_key(l))) u.add(dual_key(r), 1);
      acc = sym.multiply(acc, u);
    }
    return acc;
  });
}

AxiomReport verify_symmetric_maps(OperadPtr operad, int max_degree) {
  FreeBialgebra h = make_operad_hopf(operad, HopfVariant::H, max_degree);
  FreeBialgebra hbar = make_operad_hopf(operad, HopfVariant::Hbar, max_degree);
  FreeBialgebra sym = make_operad_hopf(operad, HopfVariant::Sym, max_degree);
  AxiomCheck surj{"H -> Sym commutes with coproduct"}, inj{"Hbar -> Sym commutes with coproduct"};
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& g : h.source().generators(d)) {
      LinComb lhs = symmetrize(sym, h.generator_coproduct(g));
      LinComb rhs = sym.coproduct(symmetrize(sym, LinComb(g)));
      ++surj.cases;
      if (lhs != rhs && surj.pass) {
        surj.pass = false;
        surj.witness = g + ": difference " + to_text(lhs - rhs);
      }
    }
    for (const auto& g : hbar.source().generators(d)) {
      LinComb lhs = expand_orbit_duals(hbar, sym, hbar.generator_coproduct(g));
      LinComb rhs = sym.coproduct(expand_orbit_duals(hbar, sym, LinComb(g)));
      ++inj.cases;
      if (lhs != rhs && inj.pass) {
        inj.pass = false;
        inj.witness = g + ": difference " + to_text(lhs - rhs);
      }
    }
  }
  return AxiomReport{{surj, inj}};
}

AxiomReport verify_hopf(OperadPtr operad, HopfVariant variant, int max_degree) {
  FreeBialgebra B = make_operad_hopf(std::move(operad), variant, max_degree);
  BialgebraVerifyOptions o;
  o.max_degree = max_degree;
  o.commutative_product = variant != HopfVariant::H;
  return verify_bialgebra(B, o);
}

}  // namespace hopfop
