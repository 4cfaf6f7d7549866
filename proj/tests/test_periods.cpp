#include "doctest.h"
#include "dpm/periods.hpp"
#include "oracles.hpp"

using namespace dpm;

TEST_SUITE("periods") {
  TEST_CASE("weight data") {
    CHECK(fano_data(1).a == std::array<int, 4>{1, 1, 2, 3});
    CHECK(fano_data(1).d1 == 6);
    CHECK(fano_data(2).a == std::array<int, 4>{1, 1, 1, 2});
    CHECK(fano_data(2).d1 == 4);
    CHECK(fano_data(3).d1 == 3);
    for (int d = 1; d <= 3; ++d) CHECK(fano_data(d).index() == 1);
  }

  TEST_CASE("quantum period against a closed form") {
    for (int d = 1; d <= 3; ++d) {
      CAPTURE(d);
      auto w = fano_data(d);
      Rational alpha;
      auto expect = oracle::regularized_quantum(w.a[2], w.a[3], w.d1, 12, alpha);
      auto q = quantum_period(w, 12);
      CHECK(q.alpha == alpha);
      CHECK(regularize(q.series).c == expect);
    }
  }

  TEST_CASE("alpha values") {
    const long want[] = {60, 12, 6};
    for (int d = 1; d <= 3; ++d) CHECK(mirror_check(d).alpha == Rational(want[d - 1]));
  }

  TEST_CASE("classical period of g - alpha against the multinomial closed form") {
    for (int d = 1; d <= 3; ++d) {
      CAPTURE(d);
      auto w = fano_data(d);
      auto m = mirror_check(d, 12);
      CHECK(m.pass);
      CHECK(m.first_mismatch == -1);
      CHECK(m.classical.c == oracle::classical_closed_form(w.a[2], w.a[3], w.d1, m.alpha, 12));
      CHECK(m.regularized_quantum == m.classical);
      CHECK(m.regularized_quantum.order() == 12);
      // (1 + y + z)^d1 has C(d1+2, 2) monomials; alpha cancels the constant one
      CHECK(m.monomials == static_cast<std::size_t>(oracle::binomial(w.d1 + 2, 2).get_si() - 1));
    }
  }

  TEST_CASE("regularize is the Laplace transform") {
    PowerSeries s{{1, 1, Rational(1, 2), Rational(1, 6)}};
    CHECK(regularize(s).c == std::vector<Rational>{1, 1, 1, 1});
  }

  TEST_CASE("Laurent polynomial g") {
    auto g = przyjalkowski_g(3);
    CHECK(g.nvars() == 2);
    CHECK(g.coeff({-1, -1}) == 1);
    CHECK(g.coeff({2, -1}) == 1);
    CHECK(g.size() == 10);
  }
}
