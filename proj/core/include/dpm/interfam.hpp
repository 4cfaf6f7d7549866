#pragma once

#include <string>
#include <vector>

#include "dpm/pathnum.hpp"
#include "dpm/pseudolattice.hpp"
#include "dpm/weierstrass.hpp"

namespace dpm {

// u_s = e^{i pi s} p_from + s (p_from + p_to), p = x^3 + a x + b
struct FamilySpec {
  int from_d = 3;
  int to_d = 2;
  WeierstrassForm from, to;

  static FamilySpec between(int from_d, int to_d, const Rational& eps = Rational(1, 100));
  static FamilySpec constant(int d, const Rational& eps = Rational(1, 100));
};

// lead x^3 + a(l) x + b(l)
struct ComplexWeierstrass {
  Complex lead;
  std::vector<Complex> a, b;  // dense, low degree first
};
ComplexWeierstrass family_at(const FamilySpec& F, Real s);

// 4 A^3 + 27 t B^2 as a binary form of degree 12; exact zeros at s = 0, 1
std::vector<Complex> discriminant_form(const FamilySpec& F, Real s);
// number of finite critical values at s = 0 (which = 0) or s = 1, from exact coefficients
int endpoint_finite_count(const FamilySpec& F, int which);
// degree in lambda of the discriminant form as a polynomial over Q[e, s]
int generic_degree(const FamilySpec& F);

// chart 0: z = lambda, chart 1: z = 1/lambda
struct SpherePoint {
  int chart = 0;
  Complex z;
  bool at_infinity() const { return chart == 1 && z == Complex(0); }
  Complex lambda() const;  // inf components for the point at infinity
};
Real chordal(const SpherePoint& p, const SpherePoint& q);

struct ChartSwitch {
  int track = 0;
  Real s = 0;
  int to_chart = 0;
};

struct TrajectorySet {
  std::vector<Real> s;
  std::vector<std::vector<SpherePoint>> points;  // [sample][track]
  std::vector<ChartSwitch> switches;
  int track_count() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
  int finite_count(std::size_t sample) const;
  Real min_separation() const;  // over interior samples
};

struct SweepOptions {
  int samples = 400;
  Real chart_radius = 1e3;
  Real near_tracks = 1e-3;   // chordal
  int max_depth = 40;
  int threads = 0;           // 0: hardware concurrency
};
TrajectorySet sweep(const FamilySpec& F, const SweepOptions& opt = {});

// clockwise from the positive real ray around the basepoint; tracks at infinity last
std::vector<int> track_order(const std::vector<SpherePoint>& pts, Complex basepoint, Real chart_radius = 1e3);

struct TranspositionResult {
  MutationWord word;          // after cancelling adjacent inverse pairs
  std::vector<Real> swap_s;
  std::size_t raw_letters = 0;
};
TranspositionResult transposition_word(const TrajectorySet& T, Complex basepoint = 0, Real chart_radius = 1e3);

// (R8...R1)(R8 R7 L4) for 3 -> 2, (R9...R4) L6 for 2 -> 1
MutationWord finite_mutation_word(int from_d);

struct CandidateCheck {
  bool identity = false;          // same transformation of the extended basis of the target degree
  std::size_t common_prefix = 0;  // letters shared with the reference word
  std::string note;
};
CandidateCheck check_candidate(const FamilySpec& F, const MutationWord& w);

struct SvgStyle {
  int width = 640;
  int height = 480;
  std::string from_color = "#d6336c";
  std::string to_color = "#2b8a3e";
  std::string track_color = "#555555";
  Real view_radius = 0;  // 0: fit the finite endpoints
};
std::string render_svg(const TrajectorySet& T, const SvgStyle& style = {});
std::string trajectories_csv(const TrajectorySet& T);

}  // namespace dpm
