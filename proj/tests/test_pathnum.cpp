#include <algorithm>
#include <random>

#include "doctest.h"
#include "dpm/pathnum.hpp"
#include "oracles.hpp"

using namespace dpm;

namespace {

// greedy match of two root lists, returns the worst distance
Real match_distance(std::vector<Complex> a, std::vector<std::complex<double>> b) {
  Real worst = 0;
  for (auto& z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](auto& u, auto& v) {
      return std::abs(Complex(u) - z) < std::abs(Complex(v) - z);
    });
    worst = std::max(worst, std::abs(Complex(*it) - z));
    b.erase(it);
  }
  return worst;
}

}  // namespace

TEST_SUITE("pathnum") {
  TEST_CASE("roots agree with companion eigenvalues and carry residual certificates") {
    std::mt19937 rng(7);
    std::normal_distribution<double> g(0, 1);
    std::uniform_int_distribution<int> deg(2, 12);
    for (int trial = 0; trial < 50; ++trial) {
      int n = deg(rng);
      std::vector<Complex> c;
      std::vector<std::complex<double>> cd;
      for (int k = 0; k <= n; ++k) {
        std::complex<double> v(g(rng), g(rng));
        c.push_back(Complex(v));
        cd.push_back(v);
      }
      CPoly p(c);
      auto r = all_roots(p);
      REQUIRE(r.roots.size() == static_cast<std::size_t>(n));
      CHECK(r.max_residual() < 1e-10);
      for (auto& z : r.roots) CHECK(scaled_residual(p, z) < 1e-10);
      CHECK(match_distance(r.roots, oracle::companion_roots(cd)) < 1e-6);
    }
  }

  TEST_CASE("multiple roots cluster") {
    // (x-1)^3 (x+2)
    CPoly p({Complex(2), Complex(-7), Complex(9), Complex(-5), Complex(1)});
    auto r = all_roots(p);
    bool triple = false;
    for (auto& c : r.clusters)
      if (c.multiplicity == 3) triple = std::abs(c.center - Complex(1)) < 1e-4;
    CHECK(triple);
  }

  TEST_CASE("Hungarian assignment") {
    std::vector<std::vector<Real>> cost{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
    CHECK(min_cost_assignment(cost) == std::vector<int>{1, 0, 2});
    std::vector<Complex> prev{{0, 0}, {1, 0}}, cur{{1.01, 0}, {0.02, 0}};
    CHECK(match_roots(prev, cur) == std::vector<int>{1, 0});
  }

  TEST_CASE("continuation of x^2 - (1 + t) around the origin") {
    // one loop around t = -1 swaps the two square roots
    std::vector<Complex> loop;
    for (int k = 0; k <= 64; ++k) {
      Real th = 2 * 3.14159265358979323846 * k / 64;
      loop.push_back(Complex(-1 + std::cos(th), std::sin(th)));
    }
    PathPolyline path(loop);
    auto fam = [](Complex t) { return CPoly({-(Complex(1) + t), Complex(0), Complex(1)}); };
    ContinueOptions opt;
    opt.initial_roots = std::vector<Complex>{Complex(1), Complex(-1)};
    auto tr = continue_roots(fam, path, opt);
    REQUIRE(tr.steps() > 2);
    for (auto r : tr.residual) CHECK(r < 1e-10);
    auto last = tr.roots.back();
    CHECK(std::abs(last[0] - Complex(-1)) < 1e-8);
    CHECK(std::abs(last[1] - Complex(1)) < 1e-8);
    for (auto& perm : tr.permutation) {
      auto s = perm;
      std::sort(s.begin(), s.end());
      CHECK(s == std::vector<int>{0, 1});
    }
  }

  TEST_CASE("real period of x^3 - x by AGM") {
    CPoly p({Complex(0), Complex(-1), Complex(0), Complex(1)});
    auto r = elliptic_integral(p, PathPolyline::segment(Complex(0), Complex(1)));
    // int_0^1 dx / sqrt(x - x^3) = pi / AGM(sqrt 2, 1)
    double expect = 3.14159265358979323846 / oracle::agm(std::sqrt(2.0), 1.0);
    CHECK(std::abs(std::abs(r.value) - expect) < 1e-8);
  }

  TEST_CASE("period lattice of y^2 = x^3 + eps x") {
    for (double eps : {1e-2, 0.5, 3.0}) {
      CAPTURE(eps);
      auto pl = period_lattice(eps);
      double se = std::sqrt(eps);
      double w = 2 * 3.14159265358979323846 / oracle::agm(std::sqrt(2 * se), std::sqrt(se));
      CHECK(std::abs(std::abs(pl.omega_a) - w) < 1e-8 * w);
      CHECK((std::abs(pl.omega_b - Complex(0, 1) * pl.omega_a) < 1e-8 * w ||
             std::abs(pl.omega_b + Complex(0, 1) * pl.omega_a) < 1e-8 * w));
    }
  }

  TEST_CASE("path additivity and reversal") {
    CPoly p({Complex(0.3, 0.1), Complex(-1), Complex(0), Complex(1)});
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
      Complex a(u(rng), u(rng)), m(u(rng), u(rng)), b(u(rng), u(rng));
      auto whole = elliptic_integral(p, PathPolyline({a, m, b}));
      auto first = elliptic_integral(p, PathPolyline({a, m}));
      auto second = elliptic_integral(p, PathPolyline({m, b}), first.y_end);
      CHECK(std::abs(whole.value - (first.value + second.value)) < 1e-8);
      auto back = elliptic_integral(p, PathPolyline({a, m, b}).reversed(), whole.y_end);
      CHECK(std::abs(back.value + whole.value) < 1e-8);
    }
  }

  TEST_CASE("polyline parametrization") {
    PathPolyline q({Complex(0), Complex(3), Complex(3, 4)});
    CHECK(q.length() == doctest::Approx(7));
    CHECK(std::abs(q.at(3.0 / 7) - Complex(3)) < 1e-12);
    CHECK(std::abs(q.reversed().at(0) - Complex(3, 4)) < 1e-12);
  }
}
