#include <catch_amalgamated.hpp>

#include <random>

#include "hopfop/core/linalg.hpp"
#include "hopfop/operads/classic.hpp"
#include "hopfop/operads/graph_operads.hpp"
#include "hopfop/operads/lie.hpp"
#include "hopfop/operads/registry.hpp"
#include "hopfop/operads/tm.hpp"
#include "support.hpp"

using namespace hopfop;

namespace {

using Word = std::vector<int>;

// Ass by substitution of words: letter j of the outer word becomes the j-th
// inner word with its letters shifted past the earlier blocks.
Word substitute_words(const Word& outer, const std::vector<Word>& inner) {
  std::vector<int> offset(inner.size() + 1, 0);
  for (std::size_t j = 0; j < inner.size(); ++j) offset[j + 1] = offset[j] + static_cast<int>(inner[j].size());
  Word out;
  for (int letter : outer)
    for (int x : inner[letter - 1]) out.push_back(x + offset[letter - 1]);
  return out;
}

BasisKey word_key(const Word& w) { return AssOperad::key(Perm(w.begin(), w.end())); }

// Expands a right-nested commutator [a_t1,[a_t2,…]] in the free associative algebra.
std::map<Word, int> nested_commutator(const Word& letters) {
  if (letters.size() == 1) return {{letters, 1}};
  auto rest = nested_commutator(Word(letters.begin() + 1, letters.end()));
  std::map<Word, int> out;
  for (const auto& [w, c] : rest) {
    Word left{letters[0]}, right = w;
    left.insert(left.end(), w.begin(), w.end());
    right.push_back(letters[0]);
    out[left] += c;
    out[right] -= c;
  }
  return out;
}

}  // namespace

TEST_CASE("identity laws in every registered operad") {
  for (const auto& name : operad_names()) {
    OperadOptions o;
    o.max_arity = 3;
    auto P = make_operad(name, o);
    const LinComb id = P->identity();
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : P->basis(n)) {
        INFO(name << " " << p);
        REQUIRE(gamma(*P, id, {LinComb(p)}) == LinComb(p));
        REQUIRE(gamma(*P, LinComb(p), std::vector<LinComb>(n, id)) == LinComb(p));
      }
  }
}

TEST_CASE("Com compositions") {
  ComOperad com;
  REQUIRE(gamma(com, LinComb("e2"), {LinComb("e2"), LinComb("e3")}) == LinComb("e5"));
  REQUIRE(com.circ("e2", 1, "e2") == LinComb("e3"));
  REQUIRE_THROWS_AS(gamma(com, LinComb("e2"), {LinComb("e2")}), std::invalid_argument);
}

TEST_CASE("Ass compositions agree with word substitution") {
  AssOperad ass(5);
  REQUIRE(ass.circ("x[1]", 1, "x[2,1]") == LinComb("x[2,1]"));
  // x^(12) ∘ (x^(1), x^(12)): the two blocks trade places
  REQUIRE(gamma(ass, LinComb("x[2,1]"), {LinComb("x[1]"), LinComb("x[2,1]")}) == LinComb("x[3,2,1]"));
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : ass.basis(n))
      for (int i = 1; i <= n; ++i)
        for (int m = 1; n + m - 1 <= 5; ++m)
          for (const auto& q : ass.basis(m)) {
            std::vector<Word> inner;
            for (int j = 1; j <= n; ++j) inner.push_back(j == i ? Word(AssOperad::perm_of(q)) : Word{1});
            REQUIRE(ass.circ(p, i, q) == LinComb(word_key(substitute_words(AssOperad::perm_of(p), inner))));
          }
  for (const auto& p : ass.basis(3))
    for (const auto& s : all_permutations(3)) {
      Word w = AssOperad::perm_of(p), expect;
      for (int x : w) expect.push_back(s[x - 1]);
      REQUIRE(ass.act(p, s) == LinComb(word_key(expect)));
    }
}

TEST_CASE("Lie embeds as nested commutators") {
  REQUIRE(lie_to_ass(2) == std::vector<LinComb>{parse_lincomb("x[1,2] - x[2,1]")});
  for (int n = 2; n <= 4; ++n) {
    auto images = lie_to_ass(n);
    auto taus = all_permutations(n - 1);
    REQUIRE(images.size() == taus.size());
    for (std::size_t t = 0; t < taus.size(); ++t) {
      Word letters(taus[t].begin(), taus[t].end());
      letters.push_back(n);
      LinComb expect;
      for (const auto& [w, c] : nested_commutator(letters)) expect.add(word_key(w), c);
      REQUIRE(images[t] == expect);
    }
  }
}

TEST_CASE("Lie elements are closed under the operad bracket of Ass") {
  AssOperad ass(5);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; n + m - 1 <= 5 && m <= 3; ++m) {
      if (n + m == 2) continue;
      auto a = n == 1 ? std::vector<LinComb>{LinComb("x[1]")} : lie_to_ass(n);
      auto b = m == 1 ? std::vector<LinComb>{LinComb("x[1]")} : lie_to_ass(m);
      auto target = lie_to_ass(n + m - 1);
      SpanBasis span(target);
      REQUIRE(span.rank() == target.size());
      for (const auto& x : a)
        for (const auto& y : b) REQUIRE(span.contains(lie_bracket(ass, x, y)));
    }
}

TEST_CASE("tree-monomial basis sizes") {
  TmOperad tm;
  REQUIRE(tm.basis(2).size() == 1);
  REQUIRE(tm.basis(3).size() == 4);
  REQUIRE(tm.basis(4).size() == 26);
}

TEST_CASE("graph insertion") {
  LabelledGraph path = parse_graph("n=2;e={1-2};legs=[1,2]");
  REQUIRE(graph_circ(GraphVariant::Gamma, path, 1, parse_graph("n=1;e={};legs=[1,1,1]")).is_zero());
  // inserting a 2-leg bubble at a 2-valent vertex: two bijections, one class
  LabelledGraph bubble = parse_graph("n=2;e={1-2,1-2};legs=[1,2]");
  LinComb g = graph_circ(GraphVariant::Gamma, path, 1, bubble);
  LinComb gt = graph_circ(GraphVariant::GammaTilde, path, 1, bubble);
  REQUIRE(g.size() == 2);
  REQUIRE(gt.size() == 2);
  Scalar total = 0;
  for (const auto& [k, c] : gt) total += c;
  REQUIRE(total == 2);
}

TEST_CASE("1PI graphs compose to 1PI graphs") {
  GraphOperad pi(GraphVariant::Gamma, true, 3, 4);
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : pi.basis(n))
      for (int i = 1; i <= n; ++i)
        for (int m = 1; n + m - 1 <= 4; ++m)
          for (const auto& q : pi.basis(m))
            for (const auto& [k, c] : pi.circ(p, i, q)) REQUIRE(is_insertable_1pi(parse_graph(k)));
}

TEST_CASE("exhaustive operad laws") {
  for (const auto& [name, arity] : std::vector<std::pair<std::string, int>>{
           {"com", 5}, {"ass", 4}, {"lie", 4}, {"tm", 4}, {"gamma", 3}, {"gamma-tilde", 3}, {"gamma-1pi", 3}}) {
    OperadOptions o;
    o.max_arity = arity;
    AxiomReport r = verify_operad_axioms(*make_operad(name, o), arity);
    INFO(name << "\n" << r.summary());
    REQUIRE(r.ok());
  }
}

TEST_CASE("random operad law checks at higher arity") {
  std::mt19937 rng(2024);
  for (const auto* name : {"ass", "tm", "gamma", "gamma-1pi"}) {
    OperadOptions o;
    o.max_arity = 5;
    auto st = test_support::random_operad_law_checks(*make_operad(name, o), 40, rng, 3);
    INFO(name << ": " << st.failure);
    REQUIRE(st.failure.empty());
  }
}

TEST_CASE("a deliberately broken operad is caught") {
  // Doubling ∘_1 on Com keeps associativity but breaks equivariance.
  struct Broken final : Operad {
    ComOperad com{4};
    std::string name() const override { return "broken"; }
    int max_arity() const override { return 4; }
    std::vector<BasisKey> basis(int n) const override { return com.basis(n); }
    int arity(const BasisKey& k) const override { return com.arity(k); }
    LinComb identity() const override { return com.identity(); }
    LinComb circ(const BasisKey& p, int i, const BasisKey& q) const override {
      return i == 1 && arity(p) > 1 && arity(q) > 1 ? 2 * com.circ(p, i, q) : com.circ(p, i, q);
    }
    LinComb act(const BasisKey& p, const Perm& s) const override { return com.act(p, s); }
  } broken;
  AxiomReport r = verify_operad_axioms(broken, 4);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.checks[3].pass);
}

TEST_CASE("scaling by |Aut| maps gamma-tilde onto gamma, not the reverse") {
  auto aut = [](const BasisKey& k) { return Scalar(canonical_graph(parse_graph(k)).numbered_aut_count); };
  auto scaled = [&](const LinComb& x) {
    LinComb out;
    for (const auto& [k, c] : x) out.add(k, c * aut(k));
    return out;
  };
  std::vector<LabelledGraph> graphs;
  for (int n = 1; n <= 2; ++n)
    for (auto& g : enumerate_graphs(n, 3)) graphs.push_back(g);
  bool reverse_fails = false;
  for (const auto& eta : graphs)
    for (const auto& zeta : graphs) {
      if (eta.valence(1) != zeta.total_legs()) continue;
      Scalar a = aut(format_graph(eta)) * aut(format_graph(zeta));
      LinComb plain = graph_circ(GraphVariant::Gamma, eta, 1, zeta);
      LinComb tilde = graph_circ(GraphVariant::GammaTilde, eta, 1, zeta);
      REQUIRE(scaled(tilde) == a * plain);
      if (a * tilde != scaled(plain)) reverse_fails = true;
    }
  REQUIRE(reverse_fails);
}
