#pragma once

// Shared fixtures and random generators for the test binaries.

#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfop/cooperad/finite_bialgebra.hpp"
#include "hopfop/core/perm.hpp"
#include "hopfop/groups/series.hpp"
#include "hopfop/operads/classic.hpp"
#include "hopfop/operads/operad.hpp"
#include "hopfop/wick/wick.hpp"
#include "oracles.hpp"

#ifndef HOPFOP_DATA_DIR
#error "HOPFOP_DATA_DIR must point at the data directory"
#endif

namespace test_support {

using namespace hopfop;

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(HOPFOP_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::shared_ptr<const FiniteBialgebra> load_bialgebra(const std::string& name) {
  return std::make_shared<const FiniteBialgebra>(FiniteBialgebra::parse(read_data(name)));
}

inline OperadSeries com_series(OperadPtr com, const oracle::Poly& p) {
  OperadSeries f(com, static_cast<int>(p.size()) - 1);
  for (int n = 2; n < static_cast<int>(p.size()); ++n) f.set_component(n, LinComb(ComOperad::key(n), p[n]));
  return f;
}

inline oracle::Poly com_coefficients(const OperadSeries& f) {
  oracle::Poly p(f.order() + 1, Scalar(0));
  p[1] = 1;
  for (int n = 2; n <= f.order(); ++n) p[n] = f.component(n).coefficient(ComOperad::key(n));
  return p;
}

/// Each component is a random combination of up to three basis elements.
inline OperadSeries random_series(OperadPtr P, int order, std::mt19937& rng) {
  OperadSeries f(P, order);
  for (int n = 2; n <= order; ++n) {
    auto basis = P->basis(n);
    LinComb c;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 3; ++t) c.add(basis[pick(rng)], oracle::small_rational(rng));
    f.set_component(n, c);
  }
  return f;
}

inline QuadraticSpace random_form(int d, std::mt19937& rng) {
  QuadraticSpace V;
  V.d = d;
  V.b.assign(d, std::vector<Scalar>(d, Scalar(0)));
  std::uniform_int_distribution<int> val(-3, 3);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) V.b[i][j] = V.b[j][i] = Scalar(val(rng));
  if (V.b[0][0] == 0) V.b[0][0] = 1;  // keep at least one pairing alive
  return V;
}

/// Composable pairs (η, ζ) for ∘_1 with each side on at most max_vertices
/// vertices of valence at most max_valence.
inline std::vector<std::pair<LabelledGraph, LabelledGraph>> wick_pairs(int max_vertices, int max_valence) {
  std::vector<LabelledGraph> graphs;
  for (int n = 1; n <= max_vertices; ++n)
    for (auto& g : enumerate_graphs(n, max_valence)) graphs.push_back(std::move(g));
  std::vector<std::pair<LabelledGraph, LabelledGraph>> out;
  for (const auto& eta : graphs)
    for (const auto& zeta : graphs)
      if (eta.valence(1) == zeta.total_legs() && eta.n + zeta.n - 1 <= max_vertices) out.emplace_back(eta, zeta);
  return out;
}

struct OperadLawStats {
  std::size_t triples = 0;
  std::size_t equivariance = 0;
  std::string failure;  // empty when every check held
};

/// Random nonzero composable triples (p, q, r): sequential and parallel
/// associativity of ∘_i, plus equivariance of γ under σ ∈ S_n and under
/// τ_1×…×τ_n. Elements are drawn from arities 1..max_draw_arity.
inline OperadLawStats random_operad_law_checks(const Operad& P, int count, std::mt19937& rng, int max_draw_arity) {
  OperadLawStats st;
  std::vector<BasisKey> pool;
  for (int n = 1; n <= max_draw_arity; ++n)
    for (const auto& k : P.basis(n)) pool.push_back(k);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto ri = [&](int n) { return std::uniform_int_distribution<int>(1, n)(rng); };
  auto fail = [&](const std::string& s) {
    if (st.failure.empty()) st.failure = s;
  };

  int attempts = 0;
  while (static_cast<int>(st.triples) < count && attempts++ < 200000) {
    const BasisKey &p = pool[pick(rng)], &q = pool[pick(rng)], &r = pool[pick(rng)];
    const int n = P.arity(p), m = P.arity(q), l = P.arity(r);
    if (n + m + l - 2 > P.max_arity()) continue;
    const int i = ri(n);
    LinComb pq = P.circ(p, i, q);
    if (pq.is_zero()) continue;
    bool used = false;
    // sequential: (p ∘_i q) ∘_{i-1+j} r = p ∘_i (q ∘_j r)
    const int j = ri(m);
    LinComb lhs = circ(P, pq, i - 1 + j, LinComb(r));
    LinComb rhs = circ(P, LinComb(p), i, P.circ(q, j, r));
    if (!lhs.is_zero() || !rhs.is_zero()) {
      used = true;
      if (lhs != rhs) fail("sequential associativity: " + p + " o" + std::to_string(i) + " " + q + " o" + std::to_string(j) + " " + r);
    }
    // parallel: for i < k, (p ∘_i q) ∘_{k-1+m} r = (p ∘_k r) ∘_i q
    if (n >= 2) {
      int a = ri(n), b = ri(n);
      if (a != b) {
        if (a > b) std::swap(a, b);
        LinComb l1 = circ(P, circ(P, LinComb(p), a, LinComb(q)), b - 1 + m, LinComb(r));
        LinComb l2 = circ(P, circ(P, LinComb(p), b, LinComb(r)), a, LinComb(q));
        if (!l1.is_zero() || !l2.is_zero()) {
          used = true;
          if (l1 != l2) fail("parallel associativity: " + p + " o" + std::to_string(a) + " " + q + ", o" + std::to_string(b) + " " + r);
        }
      }
    }
    if (!used) continue;
    ++st.triples;

    // Equivariance of γ(p; q_1..q_n) with q's drawn from {q, r, identity terms}.
    std::vector<LinComb> qs;
    std::vector<int> sizes;
    for (int t = 0; t < n; ++t) {
      const BasisKey& pickq = (t % 2 == 0) ? q : r;
      qs.emplace_back(pickq);
      sizes.push_back(P.arity(pickq));
    }
    int total = 0;
    for (int s : sizes) total += s;
    if (total > P.max_arity()) continue;
    LinComb base = gamma(P, LinComb(p), qs);
    auto perms = all_permutations(n);
    const Perm& sigma = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    std::vector<LinComb> permuted;
    for (int t = 0; t < n; ++t) permuted.push_back(qs[sigma[t] - 1]);
    LinComb e1 = gamma(P, act(P, LinComb(p), sigma), qs);
    LinComb e2 = act(P, gamma(P, LinComb(p), permuted), block_permutation(sigma, sizes));
    ++st.equivariance;
    if (e1 != e2) fail("equivariance in the outer argument: " + p + " by " + perm_to_string(sigma));
    std::vector<Perm> taus;
    std::vector<LinComb> twisted;
    for (int t = 0; t < n; ++t) {
      auto ps = all_permutations(sizes[t]);
      taus.push_back(ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)]);
      twisted.push_back(act(P, qs[t], taus.back()));
    }
    LinComb f1 = gamma(P, LinComb(p), twisted);
    LinComb f2 = act(P, base, block_product(taus));
    ++st.equivariance;
    if (f1 != f2) fail("equivariance in the inner arguments: " + p);
  }
  if (static_cast<int>(st.triples) < count && st.failure.empty())
    st.failure = "only " + std::to_string(st.triples) + " composable triples found";
  return st;
}

}  // namespace test_support
