#include "hopfop/ck/ck_graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "hopfop/operads/graph_operads.hpp"

namespace hopfop {

std::vector<BasisKey> one_pi_classes(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<BasisKey>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::set<BasisKey> keys;
  if (n >= 2)
    for (const auto& g : enumerate_graphs(n, 3))
      if (is_insertable_1pi(g)) keys.insert(format_graph(unnumbered_canonical(g)));
  return cache[n] = {keys.begin(), keys.end()};
}

BasisKey graph_monomial_key(const std::vector<LabelledGraph>& factors) {
  std::vector<BasisKey> keys;
  for (const auto& g : factors)
    if (g.n >= 2) keys.push_back(format_graph(unnumbered_canonical(g)));
  if (keys.empty()) return kUnitKey;
  std::sort(keys.begin(), keys.end());
  BasisKey out;
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "*" : "") + keys[i];
  return out;
}

int GraphGeneratorSource::degree(const BasisKey& generator) const { return parse_graph(generator).n - 1; }

std::vector<BasisKey> GraphGeneratorSource::generators(int degree) const {
  return one_pi_classes(degree + 1);
}

namespace {

void set_partitions(int n, int v, std::vector<std::vector<int>>& blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (v > n) {
    emit(blocks);
    return;
  }
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    blocks[j].push_back(v);
    set_partitions(n, v + 1, blocks, emit);
    blocks[j].pop_back();
  }
  blocks.push_back({v});
  set_partitions(n, v + 1, blocks, emit);
  blocks.pop_back();
}

// Subgraph induced on `block` with every other incident half-edge as a leg.
LabelledGraph induced_component(const LabelledGraph& g, const std::vector<int>& block) {
  std::map<int, int> index;
  for (std::size_t i = 0; i < block.size(); ++i) index[block[i]] = static_cast<int>(i) + 1;
  LabelledGraph z;
  z.n = static_cast<int>(block.size());
  for (auto [a, b] : g.edges) {
    bool ia = index.count(a), ib = index.count(b);
    if (ia && ib) z.edges.emplace_back(std::min(index[a], index[b]), std::max(index[a], index[b]));
    else if (ia) z.legs.push_back(index[a]);
    else if (ib) z.legs.push_back(index[b]);
  }
  for (int v : g.legs)
    if (index.count(v)) z.legs.push_back(index[v]);
  return normalize(z);
}

LabelledGraph contract_blocks(const LabelledGraph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(g.n + 1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int v : blocks[i]) owner[v] = static_cast<int>(i) + 1;
  LabelledGraph q;
  q.n = static_cast<int>(blocks.size());
  for (auto [a, b] : g.edges)
    if (owner[a] != owner[b]) q.edges.emplace_back(std::min(owner[a], owner[b]), std::max(owner[a], owner[b]));
  for (int v : g.legs) q.legs.push_back(owner[v]);
  return normalize(q);
}

}  // namespace

LinComb GraphGeneratorSource::generator_coproduct(const BasisKey& generator) const {
  LabelledGraph g = parse_graph(generator);
  if (!is_insertable_1pi(g)) throw std::invalid_argument("graph Hopf algebra generators must be 1PI with at most three legs: " + generator);
  LinComb out;
  std::vector<std::vector<int>> blocks;
  set_partitions(g.n, 1, blocks, [&](const std::vector<std::vector<int>>& part) {
    std::vector<LabelledGraph> components;
    for (const auto& b : part) {
      if (b.size() < 2) continue;
      LabelledGraph z = induced_component(g, b);
      // The contracted vertex must itself have valence 2 or 3.
      if (!is_insertable_1pi(z)) return;
      components.push_back(std::move(z));
    }
    LabelledGraph quotient = contract_blocks(g, part);
    out.add(tensor_key(graph_monomial_key({quotient}), graph_monomial_key(components)), 1);
  });
  return out;
}

const FreeBialgebra& ck_graph_algebra() {
  static const FreeBialgebra algebra(std::make_shared<GraphGeneratorSource>());
  return algebra;
}

LinComb graph_hopf_coproduct(const LinComb& monomials) { return ck_graph_algebra().coproduct(monomials); }

namespace {

LinComb insertions(const LabelledGraph& outer, const LabelledGraph& inner) {
  LinComb out;
  for (int v = 1; v <= outer.n; ++v)
    for (const auto& [k, c] : graph_circ(GraphVariant::Gamma, outer, v, inner))
      out.add(format_graph(unnumbered_canonical(parse_graph(k))), c);
  return out;
}

}  // namespace

LinComb graph_lie_bracket(const LabelledGraph& eta, const LabelledGraph& zeta) {
  return insertions(eta, zeta) - insertions(zeta, eta);
}

LinComb graph_dual_bracket(const LabelledGraph& eta, const LabelledGraph& zeta) {
  BasisKey a = graph_monomial_key({eta}), b = graph_monomial_key({zeta});
  std::set<BasisKey> candidates;
  for (const auto& [k, c] : insertions(eta, zeta)) candidates.insert(k);
  for (const auto& [k, c] : insertions(zeta, eta)) candidates.insert(k);
  LinComb out;
  for (const auto& g : candidates) {
    LinComb d = ck_graph_algebra().generator_coproduct(g);
    out.add(g, d.coefficient(tensor_key(a, b)) - d.coefficient(tensor_key(b, a)));
  }
  return out;
}

AxiomReport ck_iso_check(int max_vertices) {
  AxiomCheck check{"S(g)-weighted insertion bracket matches the dual bracket"};
  std::vector<LabelledGraph> classes;
  for (int n = 2; n <= max_vertices; ++n)
    for (const auto& k : one_pi_classes(n)) classes.push_back(parse_graph(k));
  for (const auto& a : classes)
    for (const auto& b : classes) {
      LinComb lhs;
      for (const auto& [k, c] : graph_lie_bracket(a, b)) lhs.add(k, c * symmetry_factor(parse_graph(k)));
      LinComb rhs = graph_dual_bracket(a, b) * (symmetry_factor(a) * symmetry_factor(b));
      ++check.cases;
      if (lhs != rhs && check.pass) {
        check.pass = false;
        check.witness = format_graph(a) + " , " + format_graph(b) + ": " + to_text(lhs - rhs);
      }
    }
  return AxiomReport{{check}};
}

}  // namespace hopfop
