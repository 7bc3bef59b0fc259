#include <catch_amalgamated.hpp>

#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "hopfop/wick/wick.hpp"
#include "support.hpp"

using namespace hopfop;

namespace {

QuadraticSpace form(int d, std::vector<std::vector<int>> rows) {
  QuadraticSpace V;
  V.d = d;
  for (auto& r : rows) V.b.emplace_back(r.begin(), r.end());
  return V;
}

// Wick pairings by brute force: every half-edge at v takes a distinct letter
// position of args[v]; the leftover letters are merged and weighted by the
// leg factorials at each vertex.
LinComb pairing_oracle(const LabelledGraph& g, const std::vector<SymWord>& args, const QuadraticSpace& V) {
  for (int v = 1; v <= g.n; ++v)
    if (static_cast<int>(args[v - 1].size()) != g.valence(v)) return {};
  // half-edges per vertex: (edge index, side)
  std::vector<std::vector<std::pair<std::size_t, int>>> half(g.n + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    half[g.edges[e].first].push_back({e, 0});
    half[g.edges[e].second].push_back({e, 1});
  }
  Scalar weight = 1;
  for (int c : g.leg_counts()) weight *= Scalar(factorial(c));
  LinComb out;
  std::vector<std::array<int, 2>> letter(g.edges.size());
  std::vector<int> leftover;
  std::function<void(int)> rec = [&](int v) {
    if (v > g.n) {
      Scalar c = weight;
      for (const auto& l : letter) c *= V.form(l[0], l[1]);
      if (c != 0) out.add(sym_word_key(leftover), c);
      return;
    }
    const auto& w = args[v - 1];
    std::vector<int> pos(w.size());
    std::iota(pos.begin(), pos.end(), 0);
    // every ordering of positions; the first |half| go to the half-edges
    const std::size_t h = half[v].size();
    std::set<std::vector<int>> seen;
    do {
      std::vector<int> used(pos.begin(), pos.begin() + h);
      if (!seen.insert(used).second) continue;
      std::vector<bool> taken(w.size(), false);
      for (std::size_t i = 0; i < h; ++i) {
        letter[half[v][i].first][half[v][i].second] = w[used[i]];
        taken[used[i]] = true;
      }
      std::size_t mark = leftover.size();
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!taken[i]) leftover.push_back(w[i]);
      rec(v + 1);
      leftover.resize(mark);
    } while (std::next_permutation(pos.begin(), pos.end()));
  };
  rec(1);
  return out;
}

std::vector<SymWord> random_args(const LabelledGraph& g, int d, std::mt19937& rng) {
  std::vector<SymWord> args;
  for (int v = 1; v <= g.n; ++v) {
    SymWord w;
    for (int i = 0; i < g.valence(v); ++i) w.push_back(1 + static_cast<int>(rng() % d));
    std::sort(w.begin(), w.end());
    args.push_back(w);
  }
  return args;
}

}  // namespace

TEST_CASE("single edge contractions") {
  QuadraticSpace one = form(1, {{1}});
  LinComb r = contract_edge({{1}, {1}}, 1, 2, one);
  REQUIRE(r == LinComb(tensor_key(sym_word_key({}), sym_word_key({}))));
  QuadraticSpace id2 = form(2, {{1, 0}, {0, 1}});
  REQUIRE(contract_edge({{1}, {2}}, 1, 2, id2).is_zero());
  REQUIRE(contract_edge({{1, 1}, {1}}, 1, 2, one) == 2 * LinComb(tensor_key(sym_word_key({1}), sym_word_key({}))));
}

TEST_CASE("tau on small graphs") {
  QuadraticSpace one = form(1, {{1}});
  LabelledGraph edge = parse_graph("n=2;e={1-2};legs=[]");
  REQUIRE(tau_eta(edge, {{1}, {1}}, one) == LinComb(sym_word_key({})));
  REQUIRE(tau_eta(edge, {{1, 1}, {1}}, one).is_zero());
  QuadraticSpace id2 = form(2, {{1, 0}, {0, 1}});
  LabelledGraph legs2 = parse_graph("n=1;e={};legs=[1,1]");
  REQUIRE(tau_eta(legs2, {{1, 2}}, id2) == 2 * LinComb(sym_word_key({1, 2})));
  REQUIRE_THROWS_AS(tau_eta(edge, {{1}}, one), std::invalid_argument);
}

TEST_CASE("normalised contractions") {
  QuadraticSpace one = form(1, {{1}});
  LabelledGraph theta = parse_graph("n=2;e={1-2,1-2,1-2};legs=[]");
  // 3!·3! position pairings, |Aut| = 6
  REQUIRE(tau_eta(theta, {{1, 1, 1}, {1, 1, 1}}, one) == 36 * LinComb(sym_word_key({})));
  REQUIRE(gamma_algebra(theta, {{1, 1, 1}, {1, 1, 1}}, one) == 6 * LinComb(sym_word_key({})));
  LabelledGraph path = parse_graph("n=2;e={1-2};legs=[1,2]");
  REQUIRE(gamma_algebra(path, {{1, 1}, {1, 1}}, one) == tau_eta(path, {{1, 1}, {1, 1}}, one));
  REQUIRE(gamma_algebra(path, {{1}, {1, 1}}, one).is_zero());
}

TEST_CASE("tau matches the pairing oracle") {
  std::mt19937 rng(12);
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : enumerate_graphs(n, 3)) {
        QuadraticSpace V = test_support::random_form(d, rng);
        for (int t = 0; t < 3; ++t) {
          auto args = random_args(g, d, rng);
          INFO(format_graph(g));
          REQUIRE(tau_eta(g, args, V) == pairing_oracle(g, args, V));
        }
      }
}

TEST_CASE("edge order does not matter") {
  std::mt19937 rng(13);
  QuadraticSpace V = form(2, {{1, 2}, {2, -1}});
  for (const auto& g : enumerate_graphs(3, 3)) {
    auto args = random_args(g, 2, rng);
    LabelledGraph h = g;
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    REQUIRE(tau_eta(h, args, V) == tau_eta(g, args, V));
  }
}

TEST_CASE("renumbering vertices permutes the arguments") {
  std::mt19937 rng(14);
  QuadraticSpace V = form(2, {{1, 1}, {1, 3}});
  for (const auto& g : enumerate_graphs(3, 3)) {
    auto args = random_args(g, 2, rng);
    for (const auto& p : all_permutations(3)) {
      std::vector<SymWord> moved(3);
      for (int v = 1; v <= 3; ++v) moved[p[v - 1] - 1] = args[v - 1];
      REQUIRE(tau_eta(relabel_vertices(g, p), moved, V) == tau_eta(g, args, V));
    }
  }
}

TEST_CASE("contractions compose like gamma-tilde on a sample") {
  std::mt19937 rng(15);
  auto pairs = test_support::wick_pairs(3, 4);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min<std::size_t>(pairs.size(), 150));
  QuadraticSpace V = form(2, {{2, -1}, {-1, 1}});
  for (const auto& [eta, zeta] : pairs) {
    std::string witness;
    INFO(format_graph(eta) << " o1 " << format_graph(zeta));
    REQUIRE(check_wick_composition(eta, zeta, V, &witness) >= 0);
  }
}

TEST_CASE("quadratic form input") {
  QuadraticSpace V = parse_quadratic_space("# b\n1 1/2\n1/2 -3\n");
  REQUIRE(V.d == 2);
  REQUIRE(V.form(1, 2) == Scalar(1, 2));
  REQUIRE_THROWS(parse_quadratic_space("1 2\n3 4\n"));
}
