#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dpm/intmat.hpp"
#include "dpm/pathnum.hpp"
#include "dpm/weierstrass.hpp"

namespace dpm {

// m a + n b
struct HomologyClass {
  long long m = 0, n = 0;
  bool operator==(const HomologyClass& o) const { return m == o.m && n == o.n; }
  HomologyClass operator-() const { return {-m, -n}; }
  HomologyClass operator+(const HomologyClass& o) const { return {m + o.m, n + o.n}; }
  HomologyClass operator-(const HomologyClass& o) const { return {m - o.m, n - o.n}; }
  bool primitive() const;
  HomologyClass sign_normalized() const;  // first nonzero coordinate positive
  std::string str() const;                // "a+b", "2a-b", "-b"
  static HomologyClass parse(const std::string& s);
};

long long h1_pair(const HomologyClass& u, const HomologyClass& v);

struct SL2Matrix {
  std::array<long long, 4> e{1, 0, 0, 1};  // row major, acts on columns (m, n)
  long long det() const { return e[0] * e[3] - e[1] * e[2]; }
  SL2Matrix operator*(const SL2Matrix& o) const;
  HomologyClass apply(const HomologyClass& v) const;
  bool operator==(const SL2Matrix& o) const { return e == o.e; }
  bool is_identity() const { return e == std::array<long long, 4>{1, 0, 0, 1}; }
  SL2Matrix pow(int k) const;
};

SL2Matrix dehn_twist(const HomologyClass& l);
// T_{n-1} ... T_0
SL2Matrix total_monodromy(const std::vector<HomologyClass>& classes);

struct InfinityCycle {
  HomologyClass c;
  bool twist_on_left = true;  // T_c^d * M = I, else M * T_c^d = I
};
InfinityCycle infinity_cycle(const std::vector<HomologyClass>& classes, int d);

IMat seifert_gram(const std::vector<HomologyClass>& classes);

std::vector<Complex> critical_values_ordered(const WeierstrassForm& W, Complex lambda0);

struct VanishingOptions {
  Real arc_guard = 1e-3;
  Real residual_tol = 1e-6;
  int max_retries = 3;
  bool normalize = true;  // global b flip and per-class signs
};

struct VanishingData {
  int d = 3;
  Rational eps;
  int retries = 0;
  PeriodLattice lattice;
  std::vector<Complex> critical_values;
  std::vector<PathPolyline> gamma;
  std::vector<std::pair<int, int>> colliding;  // track indices, tracks start at (-i sqrt(eps), 0, i sqrt(eps))
  std::vector<PathPolyline> delta;
  std::vector<HomologyClass> classes;
  std::vector<Real> residuals;
  std::vector<Complex> integrals;  // 2 * int_delta dx/y, before normalization
  bool b_flipped = false;
};

VanishingData vanishing_classes(int d, const Rational& eps = Rational(1, 100), const VanishingOptions& opt = {});

// the classes of the list for d read from the catalog of known answers
std::vector<HomologyClass> reference_classes(int d);

std::string render_cycles_svg(const VanishingData& v);

}  // namespace dpm
