#include "doctest.h"
#include "dpm/weierstrass.hpp"

using namespace dpm;

namespace {

UniPoly L(const Rational& c, int e) { return UniPoly::monomial(c, e, 'l'); }

// Weierstrass forms for d = 1, 2, 3
WeierstrassForm known(int d) {
  switch (d) {
    case 1: return {L(Rational(-1, 3), 4), L(Rational(2, 27), 6) + L(-64, 5)};
    case 2: return {L(Rational(-1, 3), 4) + L(16, 3), L(Rational(2, 27), 6) + L(Rational(-16, 3), 5)};
    default:
      return {L(Rational(-1, 3), 4) + L(8, 3), L(Rational(2, 27), 6) + L(Rational(-8, 3), 5) + L(16, 4)};
  }
}

// y^2 = discriminant right-hand sides; terms (lambda exp, x exp, coeff)
BiPoly known_y2(int d) {
  BiPoly p = BiPoly::term(-4, 2, 3);
  if (d == 1) return p + BiPoly::term(1, 2, 2) + BiPoly::term(-4, 1, 0);
  if (d == 2) return p + BiPoly::term(1, 2, 2) + BiPoly::term(-4, 1, 1);
  return p + BiPoly::term(1, 2, 2) + BiPoly::term(-2, 1, 1) + BiPoly::term(1, 0, 0);
}

}  // namespace

TEST_SUITE("weierstrass") {
  TEST_CASE("catalog matches the known forms") {
    for (int d = 1; d <= 3; ++d) CHECK(catalog(d) == known(d));
    CHECK_THROWS(catalog(4));
  }

  TEST_CASE("fiber tables of the exact forms") {
    const char* zero[] = {"II*", "III*", "IV*"};
    const char* inf[] = {"I1", "I2", "I3"};
    const long l0[] = {432, 64, 27};
    for (int d = 1; d <= 3; ++d) {
      CAPTURE(d);
      CHECK(lambda0(d) == Rational(l0[d - 1]));
      auto fc = fiber_configuration(catalog(d));
      REQUIRE(fc.finite_fibers.size() == 2);
      CHECK(fc.at(0)->name() == zero[d - 1]);
      CHECK(fc.at(lambda0(d))->name() == "I1");
      CHECK(fc.infinity_fiber.name() == inf[d - 1]);
      CHECK(fc.euler_sum() == 12);
      CHECK(is_globally_minimal(catalog(d)).ok);
    }
  }

  TEST_CASE("discriminant is lambda^(l+2) (lambda - lambda0) up to a constant") {
    for (int d = 1; d <= 3; ++d) {
      auto D = catalog(d).discriminant();
      int ell = 9 - d;
      auto expect = L(1, ell + 3) - L(lambda0(d), ell + 2);
      CHECK(monic(D) == expect);
    }
  }

  TEST_CASE("HV derivation passes through the y^2 discriminant") {
    for (int d = 1; d <= 3; ++d) {
      CAPTURE(d);
      auto h = hv_derivation(d);
      CHECK(h.y2_rhs == known_y2(d));
      CHECK(h.form == known(d));
      CHECK(h.fiber_quadratic.rbegin()->first == 2);
    }
  }

  TEST_CASE("perturbed forms have l+3 finite I1 fibers and I_d at infinity") {
    for (int d = 1; d <= 3; ++d) {
      CAPTURE(d);
      auto W = catalog(d, CatalogVariant::Perturbed, Rational(1, 100));
      auto D = W.discriminant();
      CHECK(D.degree() == 12 - d);
      CHECK(gcd(D, derivative(D)).degree() == 0);
      auto fc = fiber_configuration(W);
      CHECK(fc.finite_fiber_count() == 12 - d);
      for (auto& e : fc.finite_fibers) CHECK(e.type.name() == "I1");
      CHECK(fc.infinity_fiber == KodairaType{Kodaira::I, d});
      CHECK(fc.euler_sum() == 12);
    }
    CHECK_THROWS(catalog(3, CatalogVariant::Perturbed, Rational(0)));
  }

  TEST_CASE("Tate table from valuations") {
    CHECK(classify_from_valuations(0, 0, 0).name() == "I0");
    CHECK(classify_from_valuations(0, 0, 5) == KodairaType{Kodaira::I, 5});
    CHECK(classify_from_valuations(1, 1, 2).name() == "II");
    CHECK(classify_from_valuations(1, 2, 3).name() == "III");
    CHECK(classify_from_valuations(2, 2, 4).name() == "IV");
    CHECK(classify_from_valuations(2, 3, 6).name() == "I0*");
    CHECK(classify_from_valuations(2, 3, 9).name() == "I3*");
    CHECK(classify_from_valuations(3, 4, 8).name() == "IV*");
    CHECK(classify_from_valuations(3, 5, 9).name() == "III*");
    CHECK(classify_from_valuations(4, 5, 10).name() == "II*");
    CHECK(classify_from_valuations(4, 6, 12).tag == Kodaira::NonMinimal);
  }

  TEST_CASE("Kodaira names parse back and carry Euler numbers") {
    for (std::string s : {"I0", "I1", "I7", "II", "III", "IV", "I0*", "I2*", "IV*", "III*", "II*"})
      CHECK(KodairaType::parse(s).name() == s);
    CHECK(KodairaType::parse("II*").euler() == 10);
    CHECK(KodairaType::parse("I3").euler() == 3);
    CHECK(KodairaType::parse("I1*").euler() == 7);
    CHECK_THROWS(KodairaType::parse("V"));
  }

  TEST_CASE("chart at infinity is an involution on degree (4,6) forms") {
    for (int d = 1; d <= 3; ++d) {
      auto W = catalog(d, CatalogVariant::Perturbed);
      auto back = chart_at_infinity(chart_at_infinity(W));
      CHECK(back.a.with_var('l') == W.a);
      CHECK(back.b.with_var('l') == W.b);
    }
  }

  TEST_CASE("non-minimal input is refused") {
    WeierstrassForm W{L(1, 4), L(1, 6)};
    auto m = is_globally_minimal(W);
    CHECK_FALSE(m.ok);
    CHECK_FALSE(m.violation.empty());
    CHECK_FALSE(is_globally_minimal({L(1, 5), L(1, 0)}).ok);
  }
}
