#pragma once

#include <array>
#include <vector>

#include "dpm/exactpoly.hpp"

namespace dpm {

struct PowerSeries {
  std::vector<Rational> c;  // c[k] multiplies t^k, k = 0..order
  int order() const { return static_cast<int>(c.size()) - 1; }
  Rational coeff(int k) const { return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : Rational(0); }
  bool operator==(const PowerSeries& o) const { return c == o.c; }
};

// Weighted projective P(1,1,a3,a4) hypersurface of degree d1 (first two weights 1).
struct FanoWeightData {
  std::array<int, 4> a{1, 1, 1, 1};
  int d1 = 3;
  int index() const { return a[0] + a[1] + a[2] + a[3] - d1; }
};

FanoWeightData fano_data(int d);

struct QuantumPeriod {
  PowerSeries series;
  Rational alpha;
};

QuantumPeriod quantum_period(const FanoWeightData& data, int N);
PowerSeries regularize(const PowerSeries& s);
// (1 + y3 + y4)^d1 / (y3^a3 y4^a4), variables (y3, y4)
LaurentPoly przyjalkowski_g(int d);
PowerSeries classical_period(const LaurentPoly& f, int N);

struct MirrorCheck {
  bool pass = false;
  int first_mismatch = -1;
  Rational alpha;
  PowerSeries regularized_quantum;
  PowerSeries classical;
  std::size_t monomials = 0;  // of g - alpha
};
MirrorCheck mirror_check(int d, int N = 12);

}  // namespace dpm
