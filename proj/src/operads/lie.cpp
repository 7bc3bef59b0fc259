#include "hopfop/operads/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfop {

namespace {

// σ with σ(1)<…<σ(i)=n>σ(i+1)>…>σ(n); sign (−1)^{n−i}.
void unimodal_words(int n, std::vector<std::pair<Perm, int>>& out) {
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Perm left, right;
    for (int v = 1; v < n; ++v) (mask >> (v - 1) & 1 ? left : right).push_back(v);
    Perm sigma = left;
    sigma.push_back(n);
    sigma.insert(sigma.end(), right.rbegin(), right.rend());
    int i = static_cast<int>(left.size()) + 1;
    out.emplace_back(std::move(sigma), (n - i) % 2 ? -1 : 1);
  }
}

}  // namespace

std::vector<LinComb> lie_to_ass(int n) {
  if (n < 2) throw std::invalid_argument("lie_to_ass: n >= 2 required");
  std::vector<std::pair<Perm, int>> words;
  unimodal_words(n, words);
  std::vector<LinComb> out;
  for (const auto& tau : all_permutations(n - 1)) {
    Perm t = tau;
    t.push_back(n);
    LinComb x;
    for (const auto& [sigma, sign] : words) x.add(AssOperad::key(compose(t, sigma)), sign);
    out.push_back(std::move(x));
  }
  return out;
}

BasisKey LieOperad::key(const Perm& tau) {
  return "lie" + std::to_string(tau.size() + 1) + (tau.empty() ? "[]" : perm_to_string(tau));
}

const LieOperad::Arity& LieOperad::data(int n) const {
  std::lock_guard lock(mutex_);
  auto& slot = cache_[n];
  if (!slot) {
    slot = std::make_unique<Arity>();
    if (n == 1) {
      slot->keys.push_back("lie1[]");
      slot->images.push_back(ass_.identity());
    } else {
      slot->images = lie_to_ass(n);
      for (const auto& tau : all_permutations(n - 1)) slot->keys.push_back(key(tau));
    }
    for (const auto& v : slot->images) slot->span.insert(v);
  }
  return *slot;
}

std::vector<BasisKey> LieOperad::basis(int n) const {
  if (n < 1 || n > max_arity_) return {};
  auto keys = data(n).keys;
  std::sort(keys.begin(), keys.end());
  return keys;
}

int LieOperad::arity(const BasisKey& k) const {
  auto open = k.find('[');
  if (k.rfind("lie", 0) != 0 || open == std::string::npos || open <= 3 || k.back() != ']')
    throw ParseError("lie: bad key '" + k + "'");
  int n = std::stoi(k.substr(3, open - 3));
  if (n < 1) throw ParseError("lie: bad arity in '" + k + "'");
  return n;
}

LinComb LieOperad::to_ass(const LinComb& x) const {
  LinComb out;
  for (const auto& [k, c] : x) {
    const auto& d = data(arity(k));
    auto it = std::find(d.keys.begin(), d.keys.end(), k);
    if (it == d.keys.end()) throw ParseError("lie: unknown key '" + k + "'");
    out.add_scaled(d.images[it - d.keys.begin()], c);
  }
  return out;
}

LinComb LieOperad::from_ass(const LinComb& x, int n) const {
  const auto& d = data(n);
  auto coords = d.span.coordinates(x);
  if (!coords) throw std::domain_error("lie: element of Ass(" + std::to_string(n) + ") is not in Lie");
  LinComb out;
  for (std::size_t i = 0; i < coords->size(); ++i) out.add(d.keys[i], (*coords)[i]);
  return out;
}

LinComb LieOperad::circ(const BasisKey& p, int i, const BasisKey& q) const {
  int n = arity(p), m = arity(q);
  LinComb composed = hopfop::circ(ass_, to_ass(LinComb(p)), i, to_ass(LinComb(q)));
  return from_ass(composed, n + m - 1);
}

LinComb LieOperad::act(const BasisKey& p, const Perm& sigma) const {
  return from_ass(hopfop::act(ass_, to_ass(LinComb(p)), sigma), arity(p));
}

BasisKey LieOperad::orbit_key(const BasisKey&) const {
  throw std::logic_error("lie: the S_n action does not permute the bracket basis");
}

}  // namespace hopfop
