#include "hopfop/operads/operad.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hopfop {

BasisKey Operad::orbit_key(const BasisKey& p) const {
  const int n = arity(p);
  BasisKey best = p;
  for (const auto& sigma : all_permutations(n)) {
    LinComb image = act(p, sigma);
    if (image.size() != 1 || image.begin()->second != 1)
      throw std::logic_error(name() + ": orbit_key needs a permutation action on the basis");
    if (image.begin()->first < best) best = image.begin()->first;
  }
  return best;
}

int arity_of(const Operad& P, const LinComb& x) {
  if (x.is_zero()) throw std::invalid_argument("arity_of: zero element has no arity");
  int n = -1;
  for (const auto& [k, c] : x) {
    int a = P.arity(k);
    if (n >= 0 && a != n) throw std::invalid_argument("arity_of: inhomogeneous element");
    n = a;
  }
  return n;
}

LinComb circ(const Operad& P, const LinComb& p, int i, const LinComb& q) {
  LinComb out;
  for (const auto& [pk, pc] : p)
    for (const auto& [qk, qc] : q) out.add_scaled(P.circ(pk, i, qk), pc * qc);
  return out;
}

LinComb act(const Operad& P, const LinComb& p, const Perm& sigma) {
  LinComb out;
  for (const auto& [k, c] : p) out.add_scaled(P.act(k, sigma), c);
  return out;
}

LinComb gamma(const Operad& P, const LinComb& p, const std::vector<LinComb>& qs) {
  if (p.is_zero()) return {};
  const int n = arity_of(P, p);
  if (static_cast<int>(qs.size()) != n)
    throw std::invalid_argument("gamma: expected " + std::to_string(n) + " inputs, got " +
                                std::to_string(qs.size()));
  LinComb r = p;
  for (int i = n; i >= 1; --i) {
    r = circ(P, r, i, qs[i - 1]);
    if (r.is_zero()) break;
  }
  return r;
}

LinComb lie_bracket(const Operad& P, const LinComb& p, const LinComb& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const int n = arity_of(P, p), m = arity_of(P, q);
  LinComb out;
  for (int i = 1; i <= n; ++i) out += circ(P, p, i, q);
  for (int j = 1; j <= m; ++j) out -= circ(P, q, j, p);
  return out;
}

LinComb to_coinvariants(const Operad& P, const LinComb& x) {
  return x.map_keys([&](const BasisKey& k) { return P.orbit_key(k); });
}

AxiomReport verify_operad_axioms(const Operad& P, int max_arity) {
  AxiomCheck unit{"operad unit"}, seq{"sequential associativity"}, par{"parallel associativity"},
      outer{"equivariance in the outer argument"}, inner{"equivariance in the inner argument"};
  max_arity = std::min(max_arity, P.max_arity());
  const LinComb id = P.identity();
  std::vector<std::vector<BasisKey>> basis(max_arity + 1);
  for (int n = 1; n <= max_arity; ++n) basis[n] = P.basis(n);
  auto name = [](const BasisKey& p, int i, const BasisKey& q) { return p + " o" + std::to_string(i) + " " + q; };

  for (int n = 1; n <= max_arity; ++n)
    for (const auto& p : basis[n]) {
      const LinComb lp(p);
      record(unit, circ(P, id, 1, lp) == lp, [&] { return "id o1 " + p; });
      for (int i = 1; i <= n; ++i)
        record(unit, circ(P, lp, i, id) == lp, [&] { return name(p, i, "id"); });
    }

  for (int n = 1; n <= max_arity; ++n)
    for (int m = 1; n + m - 1 <= max_arity; ++m)
      for (int l = 1; n + m + l - 2 <= max_arity; ++l)
        for (const auto& p : basis[n])
          for (const auto& q : basis[m])
            for (const auto& r : basis[l]) {
              const LinComb lp(p), lq(q), lr(r);
              for (int i = 1; i <= n; ++i) {
                LinComb pq = P.circ(p, i, q);
                for (int j = 1; j <= m; ++j)
                  record(seq, circ(P, pq, i - 1 + j, lr) == circ(P, lp, i, P.circ(q, j, r)),
                         [&] { return "(" + name(p, i, q) + ") o" + std::to_string(i - 1 + j) + " " + r; });
                for (int k = i + 1; k <= n; ++k)
                  record(par, circ(P, pq, k - 1 + m, lr) == circ(P, P.circ(p, k, r), i, lq),
                         [&] { return name(p, i, q) + ", o" + std::to_string(k) + " " + r; });
              }
            }

  for (int n = 1; n <= max_arity; ++n)
    for (int m = 1; n + m - 1 <= max_arity; ++m) {
      const auto perms_n = all_permutations(n), perms_m = all_permutations(m);
      for (const auto& p : basis[n])
        for (const auto& q : basis[m])
          for (int i = 1; i <= n; ++i) {
            std::vector<int> sizes(n, 1);
            sizes[i - 1] = m;
            std::vector<LinComb> qs(n, id);
            qs[i - 1] = LinComb(q);
            for (const auto& sigma : perms_n) {
              std::vector<LinComb> permuted;
              for (int t = 0; t < n; ++t) permuted.push_back(qs[sigma[t] - 1]);
              LinComb lhs = gamma(P, P.act(p, sigma), qs);
              LinComb rhs = act(P, gamma(P, LinComb(p), permuted), block_permutation(sigma, sizes));
              record(outer, lhs == rhs, [&] { return "(" + p + "·" + perm_to_string(sigma) + ") o" + std::to_string(i) + " " + q; });
            }
            const LinComb base = P.circ(p, i, q);
            for (const auto& tau : perms_m) {
              std::vector<Perm> blocks(n, identity_perm(1));
              blocks[i - 1] = tau;
              LinComb lhs = circ(P, LinComb(p), i, P.act(q, tau));
              record(inner, lhs == act(P, base, block_product(blocks)),
                     [&] { return p + " o" + std::to_string(i) + " (" + q + "·" + perm_to_string(tau) + ")"; });
            }
          }
    }
  return AxiomReport{{unit, seq, par, outer, inner}};
}

}  // namespace hopfop
