#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpm/exactpoly.hpp"

namespace dpm {

#ifdef DPM_EXTENDED_PRECISION
using Real = long double;
#else
using Real = double;
#endif
using Complex = std::complex<Real>;

// ascending coefficients; trailing zeros stripped on construction
struct CPoly {
  std::vector<Complex> c;

  CPoly() = default;
  explicit CPoly(std::vector<Complex> coeffs);
  static CPoly from(const UniPoly& p);
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Complex eval(Complex z) const;
  CPoly derivative() const;
};

// |p(z)| / sum |c_k| max(1,|z|)^k
Real scaled_residual(const CPoly& p, Complex z);

struct RootCluster {
  Complex center;
  int multiplicity = 1;
};

struct RootsResult {
  std::vector<Complex> roots;
  std::vector<Real> residuals;
  std::vector<RootCluster> clusters;
  int iterations = 0;
  Real max_residual() const;
};

struct RootOptions {
  Real tol = 1e-10;
  int max_iterations = 600;
  Real cluster_radius = 1e-4;
};

RootsResult all_roots(const CPoly& p, const RootOptions& opt = {});
// Aberth started from given approximations
RootsResult refine_roots(const CPoly& p, const std::vector<Complex>& start, const RootOptions& opt = {});

struct PathPolyline {
  std::vector<Complex> nodes;

  PathPolyline() = default;
  PathPolyline(std::vector<Complex> pts);
  Real length() const;
  Complex at(Real t) const;  // arc-length parameter in [0,1]
  PathPolyline reversed() const;
  static PathPolyline segment(Complex a, Complex b) { return PathPolyline({a, b}); }
};

// assignment minimizing total cost; result[i] = column for row i
std::vector<int> min_cost_assignment(const std::vector<std::vector<Real>>& cost);
// nearest-neighbour if bijective, otherwise min-cost; result[i] = index into cur for prev[i]
std::vector<int> match_roots(const std::vector<Complex>& prev, const std::vector<Complex>& cur);

struct TrackedRoots {
  std::vector<Real> t;
  std::vector<std::vector<Complex>> roots;   // roots[step][track]
  std::vector<Real> residual;                // max scaled residual at step
  std::vector<std::vector<int>> permutation; // track -> index in the solver output
  std::size_t steps() const { return t.size(); }
  std::vector<Complex> track(int i) const;
};

struct ContinueOptions {
  Real tol = 1e-10;
  Real initial_step = 1e-3;
  Real min_step = 1e-14;
  Real end_window = 1e-9;
  Real snap = 1e-10;
  Real separation_factor = 3.0;
  std::optional<std::vector<Complex>> initial_roots;  // fixes the track order at t=0
};

using PolyFamily = std::function<CPoly(Complex)>;
TrackedRoots continue_roots(const PolyFamily& family, const PathPolyline& path, const ContinueOptions& opt = {});

std::string trajectories_csv(const TrackedRoots& tr);

struct EllipticResult {
  Complex value;
  Complex y_start;  // branch value at the first node, divided by s at a root endpoint
  Complex y_end;
  Real error = 0;
  int panels = 0;
};

struct EllipticOptions {
  int nodes_per_panel = 20;
  int max_panels = 512;
  Real tol = 1e-9;
};

// integral of dx/y along the path, y^2 = cubic
EllipticResult elliptic_integral(const CPoly& cubic, const PathPolyline& path,
                                 std::optional<Complex> seed = std::nullopt,
                                 const EllipticOptions& opt = {});

struct PeriodLattice {
  Complex omega_a, omega_b;
};
// y^2 = x^3 + eps x; doubled segments [-sqrt(-eps), 0] and [0, sqrt(-eps)]
PeriodLattice period_lattice(Real eps);

}  // namespace dpm
