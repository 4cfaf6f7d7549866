#include <random>

#include "doctest.h"
#include "dpm/exactpoly.hpp"

using namespace dpm;

TEST_SUITE("exactpoly") {
  TEST_CASE("rational strings round trip and reject decimals") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(parse_rational(" 7 ") == Rational(7));
    CHECK_THROWS(parse_rational("0.01"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1/-2"));
    CHECK_THROWS(parse_rational(""));
  }

  TEST_CASE("basic univariate arithmetic") {
    auto x = UniPoly::variable();
    auto one = UniPoly::constant(1);
    auto p = pow(x + one, 2);
    CHECK(p == UniPoly::from_dense({1, 2, 1}));
    CHECK(derivative(p) == UniPoly::from_dense({2, 2}));
    CHECK(compose(p, x - one) == pow(x, 2));
    CHECK(gcd(p, x * x - one) == x + one);
    CHECK(valuation_at(p, Rational(-1)) == 2);
    CHECK(rational_roots(x * x * x - x) == std::vector<Rational>{-1, 0, 1});
  }

  TEST_CASE("squarefree factorization reassembles the input") {
    auto x = UniPoly::variable();
    auto one = UniPoly::constant(1);
    auto p = pow(x - one, 3) * (x * x + one) * x;
    auto f = squarefree_factorization(p);
    UniPoly prod = UniPoly::constant(1);
    for (auto& [g, e] : f) prod = prod * pow(g, static_cast<unsigned>(e));
    CHECK(prod == monic(p));
  }

  TEST_CASE("division with remainder on random inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-9, 9), deg(0, 7);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Rational> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& v : a) v = c(rng);
      for (auto& v : b) v = c(rng);
      b.back() = c(rng) == 0 ? 1 : 3;
      auto p = UniPoly::from_dense(a), q = UniPoly::from_dense(b);
      auto [quo, rem] = divmod(p, q);
      CHECK(quo * q + rem == p);
      CHECK(rem.degree() < q.degree());
    }
  }

  TEST_CASE("discriminant of a depressed cubic") {
    auto a = UniPoly::constant(-3), b = UniPoly::constant(2);  // x^3 - 3x + 2 = (x-1)^2 (x+2)
    CHECK(disc_cubic(a, b).is_zero());
    auto dc = depress_cubic(UniPoly::constant(1), UniPoly::constant(0), a, b);
    CHECK(dc.a == a);
    CHECK(dc.b == b);
  }

  TEST_CASE("bivariate helpers") {
    auto p = BiPoly::term(2, 1, 3) + BiPoly::term(1, 0, 2);
    CHECK(p.degree_x() == 3);
    CHECK(divide_x_power(p, 2) == BiPoly::term(2, 1, 1) + BiPoly::term(1, 0, 0));
    CHECK_THROWS(divide_x_power(p, 3));
    CHECK(p.coeff_x(3) == UniPoly::monomial(2, 1));
  }

  TEST_CASE("Laurent constant term") {
    auto y = LaurentPoly::monomial(1, {1});
    auto yi = LaurentPoly::monomial(1, {-1});
    auto f = y + yi;
    auto f2 = f * f;
    CHECK(f2.constant_term() == 2);
    CHECK((f2 * f2).constant_term() == 6);
  }
}
