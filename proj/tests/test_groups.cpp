#include <catch_amalgamated.hpp>

#include <random>

#include "hopfop/groups/series.hpp"
#include "hopfop/operads/registry.hpp"
#include "support.hpp"

using namespace hopfop;

namespace {

OperadPtr operad(const std::string& name, int arity) {
  OperadOptions o;
  o.max_arity = arity;
  return make_operad(name, o);
}

}  // namespace

TEST_CASE("Catalan inverse") {
  auto com = operad("com", 5);
  OperadSeries f = parse_com_polynomial(com, "x + x^2", 5);
  OperadSeries g = invert(f);
  REQUIRE(format_com_polynomial(g) == "x - x^2 + 2x^3 - 5x^4 + 14x^5");
  REQUIRE(test_support::com_coefficients(g) == oracle::invert(test_support::com_coefficients(f), 5));
  REQUIRE(compose(f, g) == OperadSeries::identity(com, 5));
}

TEST_CASE("Com composition is power-series substitution") {
  std::mt19937 rng(1);
  for (int N = 2; N <= 6; ++N) {
    auto com = operad("com", N);
    for (int t = 0; t < 10; ++t) {
      oracle::Poly a(N + 1, Scalar(0)), b(N + 1, Scalar(0));
      a[1] = b[1] = 1;
      for (int i = 2; i <= N; ++i) {
        a[i] = oracle::small_rational(rng);
        b[i] = oracle::small_rational(rng);
      }
      OperadSeries f = test_support::com_series(com, a), g = test_support::com_series(com, b);
      REQUIRE(test_support::com_coefficients(compose(f, g)) == oracle::substitute(a, b, N));
      REQUIRE(test_support::com_coefficients(invert(f)) == oracle::invert(a, N));
    }
  }
}

TEST_CASE("group axioms") {
  std::mt19937 rng(4);
  for (const auto& [name, N] : std::vector<std::pair<std::string, int>>{
           {"com", 6}, {"ass", 5}, {"tm", 4}, {"gamma-1pi", 4}}) {
    auto P = operad(name, N);
    const OperadSeries id = OperadSeries::identity(P, N);
    for (int t = 0; t < 3; ++t) {
      OperadSeries f = test_support::random_series(P, N, rng), g = test_support::random_series(P, N, rng),
                   h = test_support::random_series(P, N, rng);
      INFO(name);
      REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
      REQUIRE(compose(f, id) == f);
      REQUIRE(compose(id, f) == f);
      OperadSeries fi = invert(f);
      REQUIRE(compose(f, fi) == id);
      REQUIRE(compose(fi, f) == id);
    }
  }
}

TEST_CASE("mismatched series are rejected") {
  auto com5 = operad("com", 5);
  OperadSeries f(com5, 4), g(com5, 5);
  REQUIRE_THROWS_AS(compose(f, g), std::invalid_argument);
  OperadSeries h(operad("ass", 5), 5);
  REQUIRE_THROWS_AS(compose(g, h), std::invalid_argument);
  REQUIRE_THROWS(f.set_component(3, LinComb("e4")));
}

TEST_CASE("Com bracket follows the vector-field law") {
  ComOperad com(9);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      REQUIRE(lie_bracket(com, LinComb(ComOperad::key(n)), LinComb(ComOperad::key(m))) ==
              Scalar(n - m) * LinComb(ComOperad::key(n + m - 1)));
}

TEST_CASE("operad bracket is a Lie bracket") {
  std::mt19937 rng(8);
  for (const auto& [name, N] : std::vector<std::pair<std::string, int>>{{"ass", 5}, {"tm", 5}, {"gamma", 4}}) {
    auto P = operad(name, N);
    auto pick = [&](int n) {
      auto b = P->basis(n);
      LinComb x;
      for (int t = 0; t < 2; ++t) x.add(b[rng() % b.size()], oracle::small_rational(rng));
      return x;
    };
    for (int t = 0; t < 6; ++t) {
      const int top = name == "gamma" ? 1 : 2;
      LinComb x = pick(2), y = pick(1 + top), z = pick(2);
      INFO(name);
      REQUIRE(lie_bracket(*P, x, y) == -lie_bracket(*P, y, x));
      LinComb jac = lie_bracket(*P, x, lie_bracket(*P, y, z)) + lie_bracket(*P, y, lie_bracket(*P, z, x)) +
                    lie_bracket(*P, z, lie_bracket(*P, x, y));
      REQUIRE(jac.is_zero());
    }
  }
}

TEST_CASE("coinvariant series") {
  auto ass = operad("ass", 4);
  OperadSeries f(ass, 4);
  f.set_component(3, parse_lincomb("x[1,2,3] + 2 x[3,1,2] - x[2,1,3]"));
  OperadSeries c = to_coinvariants(f);
  REQUIRE(c.coinvariant());
  REQUIRE(c.component(3).size() == 1);
  REQUIRE(c.component(3).begin()->second == 2);
}

TEST_CASE("series text format round-trips") {
  std::mt19937 rng(6);
  auto ass = operad("ass", 4);
  OperadSeries f = test_support::random_series(ass, 4, rng);
  REQUIRE(parse_series(ass, format_series(f), 4) == f);
  auto com = operad("com", 5);
  OperadSeries g = parse_com_polynomial(com, "x - 1/2 x^3 + 3x^5", 5);
  REQUIRE(format_com_polynomial(g) == "x - 1/2 x^3 + 3x^5");
}
