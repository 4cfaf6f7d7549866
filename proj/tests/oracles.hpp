#pragma once
// Independent reference computations used by the unit and acceptance tests.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <vector>

#include "dpm/exactpoly.hpp"
#include "dpm/intmat.hpp"

namespace oracle {

using dpm::IMat;
using dpm::Integer;
using dpm::Rational;

inline Integer factorial(long n) {
  Integer r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Integer binomial(long n, long k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

inline Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// X_{d1} in P(1,1,a3,a4): A_m = (d1 m)! / ((m!)^2 (a3 m)! (a4 m)!), index 1.
// Returns n! [t^n] e^{-alpha t} sum A_m t^m, alpha = A_1.
inline std::vector<Rational> regularized_quantum(int a3, int a4, int d1, int N, Rational& alpha) {
  auto A = [&](long m) {
    return ratio(factorial(d1 * m), factorial(m) * factorial(m) * factorial(a3 * m) * factorial(a4 * m));
  };
  alpha = A(1);
  std::vector<Rational> out;
  for (long n = 0; n <= N; ++n) {
    Rational s = 0, neg = -alpha;
    for (long m = 0; m <= n; ++m) {
      Rational p = 1;
      for (long k = 0; k < n - m; ++k) p *= neg;
      s += Rational(binomial(n, m)) * Rational(factorial(m)) * A(m) * p;
    }
    s.canonicalize();
    out.push_back(s);
  }
  return out;
}

// constant terms of (g - alpha)^k, g = (1 + y + z)^{d1} / (y^{a3} z^{a4})
inline std::vector<Rational> classical_closed_form(int a3, int a4, int d1, const Rational& alpha, int N) {
  auto ct = [&](long j) {
    return ratio(factorial(d1 * j), factorial(a3 * j) * factorial(a4 * j) * factorial((d1 - a3 - a4) * j));
  };
  std::vector<Rational> out;
  for (long k = 0; k <= N; ++k) {
    Rational s = 0;
    for (long j = 0; j <= k; ++j) {
      Rational p = 1;
      for (long i = 0; i < k - j; ++i) p *= -alpha;
      s += Rational(binomial(k, j)) * p * ct(j);
    }
    s.canonicalize();
    out.push_back(s);
  }
  return out;
}

// eigenvalues of the companion matrix; c low degree first
inline std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& c) {
  int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(n)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
  std::vector<std::complex<double>> r;
  for (int i = 0; i < n; ++i) r.push_back(es.eigenvalues()(i));
  return r;
}

inline double agm(double a, double b) {
  for (int i = 0; i < 60 && std::abs(a - b) > 1e-16 * a; ++i) {
    double m = (a + b) / 2;
    b = std::sqrt(a * b);
    a = m;
  }
  return a;
}

// #{v in Z^{1,ell} : v.k = 0, v.v = -2}, k = (-3, 1, ..., 1), by exhaustive search
inline int brute_root_count(int ell) {
  int count = 0;
  std::vector<int> e(static_cast<std::size_t>(ell), -2);
  for (int h = -3; h <= 3; ++h) {
    std::fill(e.begin(), e.end(), -2);
    for (;;) {
      int dot = -3 * h, sq = h * h;
      for (int x : e) {
        dot -= x;
        sq -= x * x;
      }
      if (dot == 0 && sq == -2) ++count;
      std::size_t i = 0;
      while (i < e.size() && e[i] == 2) e[i++] = -2;
      if (i == e.size()) break;
      ++e[i];
    }
  }
  return count;
}

// Seifert Gram of the d = 3 thimble basis
inline IMat seifert_d3() {
  return {{1, -1, 1, -1, 1, -1, 1, -1, 1}, {0, 1, 1, 0, 1, 0, 1, 0, 1}, {0, 0, 1, -1, 0, -1, 0, -1, 0},
          {0, 0, 0, 1, 1, 0, 1, 0, 1},     {0, 0, 0, 0, 1, -1, 0, -1, 0}, {0, 0, 0, 0, 0, 1, 1, 0, 1},
          {0, 0, 0, 0, 0, 0, 1, -1, 0},    {0, 0, 0, 0, 0, 0, 0, 1, 1},   {0, 0, 0, 0, 0, 0, 0, 0, 1}};
}

// Euler form of the standard exceptional basis, block form [[U, V], [0, I]]
inline IMat euler_block(int ell) {
  std::size_t n = static_cast<std::size_t>(ell) + 3;
  IMat M(n, dpm::IVec(n, 0));
  long long U[3][3] = {{1, 3, 3}, {0, 1, 3}, {0, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) M[i][j] = U[i][j];
  for (std::size_t j = 3; j < n; ++j) {
    M[0][j] = 1;
    M[1][j] = 2;
    M[2][j] = 1;
    M[j][j] = 1;
  }
  return M;
}

}  // namespace oracle
