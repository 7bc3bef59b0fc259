#include "hopfop/operads/graph_operads.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfop {

namespace {

struct HalfEdge {
  int other = 0;  // other endpoint, 0 for a leg
};

std::vector<HalfEdge> half_edges_at(const LabelledGraph& g, int k) {
  std::vector<HalfEdge> out;
  for (auto [a, b] : g.edges) {
    if (a == k) out.push_back({b});
    else if (b == k) out.push_back({a});
  }
  for (int v : g.legs)
    if (v == k) out.push_back({0});
  return out;
}

}  // namespace

LabelledGraph graph_compose_with(const LabelledGraph& eta, int k, const LabelledGraph& zeta,
                                 const std::vector<int>& b) {
  const int n = eta.n, m = zeta.n;
  auto ren = [&](int v) { return v < k ? v : v + m - 1; };
  auto hs = half_edges_at(eta, k);
  if (hs.size() != zeta.legs.size() || b.size() != hs.size())
    throw std::invalid_argument("graph compose: bijection size mismatch");
  LabelledGraph r;
  r.n = n + m - 1;
  for (auto [x, y] : eta.edges)
    if (x != k && y != k) r.edges.emplace_back(ren(x), ren(y));
  for (int v : eta.legs)
    if (v != k) r.legs.push_back(ren(v));
  for (auto [x, y] : zeta.edges) r.edges.emplace_back(x + k - 1, y + k - 1);
  for (std::size_t h = 0; h < hs.size(); ++h) {
    int target = zeta.legs[b[h]] + k - 1;
    if (hs[h].other == 0) {
      r.legs.push_back(target);
    } else {
      int o = ren(hs[h].other);
      r.edges.emplace_back(std::min(o, target), std::max(o, target));
    }
  }
  return normalize(r);
}

LinComb graph_circ(GraphVariant variant, const LabelledGraph& eta, int k, const LabelledGraph& zeta) {
  if (k < 1 || k > eta.n) throw std::out_of_range("graph compose: no vertex " + std::to_string(k));
  LinComb out;
  if (eta.valence(k) != zeta.total_legs()) return out;
  // Plugging into or inserting a bare corolla gives the same graph for every bijection.
  auto corolla = [](const LabelledGraph& g) { return g.n == 1 && g.edges.empty(); };
  if (corolla(eta) || corolla(zeta)) {
    Scalar c = variant == GraphVariant::GammaTilde ? Scalar(factorial(static_cast<int>(zeta.legs.size()))) : Scalar(1);
    out.add(format_graph(normalize(corolla(eta) ? zeta : eta)), c);
    return out;
  }
  std::vector<int> b(zeta.legs.size());
  std::iota(b.begin(), b.end(), 0);
  LabelledGraph z = normalize(zeta);
  do {
    BasisKey key = format_graph(graph_compose_with(eta, k, z, b));
    if (variant == GraphVariant::GammaTilde) out.add(key, 1);
    else if (out.coefficient(key) == 0) out.add(key, 1);
  } while (std::next_permutation(b.begin(), b.end()));
  return out;
}

GraphOperad::GraphOperad(GraphVariant variant, bool one_pi, int max_valence, int max_arity)
    : variant_(variant), one_pi_(one_pi), max_valence_(max_valence), max_arity_(max_arity) {
  if (one_pi && variant != GraphVariant::Gamma)
    throw std::invalid_argument("the 1PI suboperad is built on the Gamma variant");
  if (one_pi && max_valence > 3) max_valence_ = 3;
}

std::string GraphOperad::name() const {
  if (one_pi_) return "gamma-1pi";
  return variant_ == GraphVariant::Gamma ? "gamma" : "gamma-tilde";
}

std::vector<BasisKey> GraphOperad::basis(int n) const {
  if (n < 1 || n > max_arity_) return {};
  std::lock_guard lock(mutex_);
  auto& slot = cache_[n];
  if (slot.empty()) {
    if (n == 1 && !one_pi_) {
      for (int m = 0; m <= corolla_bound(); ++m) slot.push_back(key(corolla_graph(m)));
    } else {
      for (const auto& g : enumerate_graphs(n, max_valence_))
        if (!one_pi_ || is_insertable_1pi(g)) slot.push_back(format_graph(g));
    }
    std::sort(slot.begin(), slot.end());
  }
  return slot;
}

int GraphOperad::arity(const BasisKey& key) const { return parse_graph(key).n; }

LinComb GraphOperad::identity() const {
  LinComb id;
  for (int m = one_pi_ ? 2 : 0; m <= corolla_bound(); ++m) {
    Scalar c = 1;
    if (variant_ == GraphVariant::GammaTilde) c = Scalar(1, 1) / Scalar(factorial(m));
    id.add(key(corolla_graph(m)), c);
  }
  return id;
}

LinComb GraphOperad::circ(const BasisKey& p, int i, const BasisKey& q) const {
  return graph_circ(variant_, parse_graph(p), i, parse_graph(q));
}

LinComb GraphOperad::act(const BasisKey& p, const Perm& sigma) const {
  LabelledGraph g = parse_graph(p);
  if (static_cast<int>(sigma.size()) != g.n) throw std::invalid_argument("graph: permutation size");
  return LinComb(format_graph(relabel_vertices(g, sigma)));
}

BasisKey GraphOperad::orbit_key(const BasisKey& p) const {
  return format_graph(unnumbered_canonical(parse_graph(p)));
}

}  // namespace hopfop
