#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpm/exactpoly.hpp"

namespace dpm {

struct WeierstrassForm {
  UniPoly a, b;
  UniPoly discriminant() const { return disc_cubic(a, b); }
  bool operator==(const WeierstrassForm& o) const { return a == o.a && b == o.b; }
};

enum class Kodaira { Smooth, I, II, III, IV, Istar, IVstar, IIIstar, IIstar, NonMinimal };

struct KodairaType {
  Kodaira tag = Kodaira::Smooth;
  int n = 0;  // I_n, I*_n

  std::string name() const;  // "I1", "I0*", "IV*", ...
  int euler() const;
  bool operator==(const KodairaType& o) const { return tag == o.tag && n == o.n; }
  static KodairaType parse(const std::string& s);
};

// Rational place, or a squarefree irreducible-over-Q-or-not factor without
// rational roots, standing for deg(factor) geometric places.
struct Place {
  bool rational = true;
  Rational value;
  UniPoly factor;
  std::string label() const;
};

struct FiberEntry {
  Place place;
  KodairaType type;
  int count = 1;
};

struct FiberConfiguration {
  std::vector<FiberEntry> finite_fibers;
  KodairaType infinity_fiber;

  int euler_sum() const;
  int finite_fiber_count() const;  // geometric places, with multiplicity of groups
  std::optional<KodairaType> at(const Rational& c) const;
};

enum class CatalogVariant { Exact, Perturbed };

// lambda_0 = 432, 64, 27
Rational lambda0(int d);
WeierstrassForm catalog(int d, CatalogVariant variant = CatalogVariant::Exact,
                        const Rational& eps = Rational(1, 100));

struct HVDerivation {
  PolyInY fiber_quadratic;  // after the y-clearing multiplication
  BiPoly y2_rhs;            // discriminant in y (divided by x^2 when d=1)
  WeierstrassForm form;
};
HVDerivation hv_derivation(int d);
WeierstrassForm hv_to_weierstrass(int d);

struct MinimalityResult {
  bool ok = true;
  std::string violation;
};
MinimalityResult is_globally_minimal(const WeierstrassForm& W);

KodairaType classify_from_valuations(long va, long vb, long vd);  // large value for a zero polynomial
KodairaType classify_fiber_at(const WeierstrassForm& W, const Rational& c);
WeierstrassForm chart_at_infinity(const WeierstrassForm& W);
FiberConfiguration fiber_configuration(const WeierstrassForm& W);

}  // namespace dpm
