#include "dpm/periods.hpp"

#include <stdexcept>

namespace dpm {

FanoWeightData fano_data(int d) {
  switch (d) {
    case 1: return {{1, 1, 2, 3}, 6};
    case 2: return {{1, 1, 1, 2}, 4};
    case 3: return {{1, 1, 1, 1}, 3};
    default: throw std::invalid_argument("degree must be 1, 2 or 3");
  }
}

static Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

QuantumPeriod quantum_period(const FanoWeightData& data, int N) {
  if (N < 2) throw std::invalid_argument("order must be at least 2");
  int iota = data.index();
  if (iota <= 0) throw std::invalid_argument("Fano index must be positive");
  std::vector<Rational> s(static_cast<std::size_t>(N + 1), 0);
  for (int j = 0; iota * j <= N; ++j) {
    Integer den = 1;
    for (int ai : data.a) den *= factorial(static_cast<long>(ai) * j);
    Rational v(factorial(static_cast<long>(data.d1) * j), den);
    v.canonicalize();
    s[static_cast<std::size_t>(iota * j)] = v;
  }
  Rational alpha = s[1];
  // exp(-alpha t), truncated
  std::vector<Rational> e(static_cast<std::size_t>(N + 1));
  e[0] = 1;
  for (int k = 1; k <= N; ++k) e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k - 1)] * (-alpha) / k;
  PowerSeries g;
  g.c.assign(static_cast<std::size_t>(N + 1), 0);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j)
      g.c[static_cast<std::size_t>(i + j)] += s[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)];
  return {g, alpha};
}

PowerSeries regularize(const PowerSeries& s) {
  PowerSeries r = s;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] *= Rational(factorial(static_cast<long>(k)));
  return r;
}

LaurentPoly przyjalkowski_g(int d) {
  auto w = fano_data(d);
  LaurentPoly base(2);
  base.add_to({0, 0}, 1);
  base.add_to({1, 0}, 1);
  base.add_to({0, 1}, 1);
  LaurentPoly num = pow(base, static_cast<unsigned>(w.d1));
  return num * LaurentPoly::monomial(1, {-w.a[2], -w.a[3]});
}

PowerSeries classical_period(const LaurentPoly& f, int N) {
  if (N < 0) throw std::invalid_argument("negative order");
  PowerSeries out;
  out.c.reserve(static_cast<std::size_t>(N + 1));
  LaurentPoly cur = LaurentPoly::constant(f.nvars(), 1);
  out.c.push_back(1);
  for (int k = 1; k <= N; ++k) {
    cur = cur * f;
    out.c.push_back(cur.constant_term());
  }
  return out;
}

MirrorCheck mirror_check(int d, int N) {
  if (N < 2) throw std::invalid_argument("order must be at least 2");
  MirrorCheck m;
  auto q = quantum_period(fano_data(d), N);
  m.alpha = q.alpha;
  m.regularized_quantum = regularize(q.series);
  LaurentPoly f = przyjalkowski_g(d) - LaurentPoly::constant(2, q.alpha);
  m.monomials = f.size();
  m.classical = classical_period(f, N);
  m.pass = true;
  for (int k = 0; k <= N; ++k)
    if (m.regularized_quantum.coeff(k) != m.classical.coeff(k)) {
      m.pass = false;
      m.first_mismatch = k;
      break;
    }
  return m;
}

}  // namespace dpm
