#include "dpm/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpm/periods.hpp"

namespace dpm {

namespace {
constexpr long kInf = 1L << 30;

long val(const UniPoly& p, const Rational& c) {
  return p.is_zero() ? kInf : static_cast<long>(valuation_at(p, c));
}
}  // namespace

std::string KodairaType::name() const {
  switch (tag) {
    case Kodaira::Smooth: return "I0";
    case Kodaira::I: return "I" + std::to_string(n);
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
    case Kodaira::Istar: return "I" + std::to_string(n) + "*";
    case Kodaira::IVstar: return "IV*";
    case Kodaira::IIIstar: return "III*";
    case Kodaira::IIstar: return "II*";
    case Kodaira::NonMinimal: return "non-minimal";
  }
  return "?";
}

KodairaType KodairaType::parse(const std::string& s) {
  if (s == "I0") return {Kodaira::Smooth, 0};
  if (s == "II") return {Kodaira::II, 0};
  if (s == "III") return {Kodaira::III, 0};
  if (s == "IV") return {Kodaira::IV, 0};
  if (s == "IV*") return {Kodaira::IVstar, 0};
  if (s == "III*") return {Kodaira::IIIstar, 0};
  if (s == "II*") return {Kodaira::IIstar, 0};
  if (s == "non-minimal") return {Kodaira::NonMinimal, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      int n = std::stoi(digits);
      if (star) return {Kodaira::Istar, n};
      if (n >= 1) return {Kodaira::I, n};
    }
  }
  throw std::invalid_argument("unknown Kodaira symbol: " + s);
}

int KodairaType::euler() const {
  switch (tag) {
    case Kodaira::Smooth: return 0;
    case Kodaira::I: return n;
    case Kodaira::II: return 2;
    case Kodaira::III: return 3;
    case Kodaira::IV: return 4;
    case Kodaira::Istar: return n + 6;
    case Kodaira::IVstar: return 8;
    case Kodaira::IIIstar: return 9;
    case Kodaira::IIstar: return 10;
    case Kodaira::NonMinimal: return -1;
  }
  return -1;
}

std::string Place::label() const {
  if (rational) return to_string(value);
  std::string s = "root of [";
  bool first = true;
  for (auto& [e, v] : factor.terms()) {
    if (!first) s += ",";
    s += "[" + std::to_string(e) + ",\"" + to_string(v) + "\"]";
    first = false;
  }
  return s + "]";
}

int FiberConfiguration::euler_sum() const {
  int s = infinity_fiber.euler();
  for (auto& f : finite_fibers) s += f.count * f.type.euler();
  return s;
}

int FiberConfiguration::finite_fiber_count() const {
  int s = 0;
  for (auto& f : finite_fibers) s += f.count;
  return s;
}

std::optional<KodairaType> FiberConfiguration::at(const Rational& c) const {
  for (auto& f : finite_fibers)
    if (f.place.rational && f.place.value == c) return f.type;
  return std::nullopt;
}

Rational lambda0(int d) {
  auto w = fano_data(d);
  Integer num, den3, den4;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(w.d1), static_cast<unsigned long>(w.d1));
  mpz_ui_pow_ui(den3.get_mpz_t(), static_cast<unsigned long>(w.a[2]), static_cast<unsigned long>(w.a[2]));
  mpz_ui_pow_ui(den4.get_mpz_t(), static_cast<unsigned long>(w.a[3]), static_cast<unsigned long>(w.a[3]));
  Rational r(num, den3 * den4);
  r.canonicalize();
  return r;
}

WeierstrassForm catalog(int d, CatalogVariant variant, const Rational& eps) {
  auto L = [](const Rational& c, int e) { return UniPoly::monomial(c, e, 'l'); };
  WeierstrassForm W;
  switch (d) {
    case 1:
      W.a = L(Rational(-1, 3), 4);
      W.b = L(Rational(2, 27), 6) + L(-64, 5);
      break;
    case 2:
      W.a = L(Rational(-1, 3), 4) + L(16, 3);
      W.b = L(Rational(2, 27), 6) + L(Rational(-16, 3), 5);
      break;
    case 3:
      W.a = L(Rational(-1, 3), 4) + L(8, 3);
      W.b = L(Rational(2, 27), 6) + L(Rational(-8, 3), 5) + L(16, 4);
      break;
    default: throw std::invalid_argument("degree must be 1, 2 or 3");
  }
  if (variant == CatalogVariant::Perturbed) {
    if (eps == 0) throw std::invalid_argument("perturbation must be nonzero");
    W.a = W.a + UniPoly::constant(eps, 'l');
  }
  return W;
}

HVDerivation hv_derivation(int d) {
  auto w = fano_data(d);
  int a3 = w.a[2], a4 = w.a[3];
  // lambda (1 - x/y - y) (x/y)^a3 y^a4 - 1 in variables (lambda, x, y)
  LaurentPoly lam = LaurentPoly::monomial(1, {1, 0, 0});
  LaurentPoly factor(3);
  factor.add_to({0, 0, 0}, 1);
  factor.add_to({0, 1, -1}, -1);
  factor.add_to({0, 0, 1}, -1);
  LaurentPoly expr = lam * factor * LaurentPoly::monomial(1, {0, a3, a4 - a3}) -
                     LaurentPoly::constant(3, 1);
  int ymin = 0;
  for (auto& [e, v] : expr.terms()) ymin = std::min(ymin, e[2]);
  HVDerivation out;
  for (auto& [e, v] : expr.terms()) out.fiber_quadratic[e[2] - ymin].add_to(e[0], e[1], v);
  BiPoly disc = disc_quadratic_in_y(out.fiber_quadratic);
  if (d == 1) disc = divide_x_power(disc, 2);
  out.y2_rhs = disc;
  if (disc.degree_x() != 3) throw std::logic_error("y^2-discriminant is not cubic in x");
  auto dc = depress_cubic(disc.coeff_x(3), disc.coeff_x(2), disc.coeff_x(1), disc.coeff_x(0));
  out.form = {dc.a, dc.b};
  return out;
}

WeierstrassForm hv_to_weierstrass(int d) { return hv_derivation(d).form; }

MinimalityResult is_globally_minimal(const WeierstrassForm& W) {
  UniPoly D = W.discriminant();
  if (D.is_zero()) throw std::domain_error("zero discriminant");
  if (W.a.degree() > 4) return {false, "deg a = " + std::to_string(W.a.degree()) + " > 4"};
  if (W.b.degree() > 6) return {false, "deg b = " + std::to_string(W.b.degree()) + " > 6"};
  auto sf = squarefree_factorization(D);
  if (D.degree() == 12 && sf.size() == 1 && sf[0].first.degree() == 1 && sf[0].second == 12)
    return {false, "discriminant is a twelfth power"};
  UniPoly g = W.a.is_zero() ? W.b : (W.b.is_zero() ? W.a : gcd(W.a, W.b));
  if (!g.is_zero() && g.degree() > 0) {
    for (auto& c : rational_roots(g)) {
      long va = val(W.a, c), vb = val(W.b, c);
      if (va >= 4 && vb >= 6)
        return {false, "v_" + to_string(c) + "(a) >= 4 and v(b) >= 6"};
    }
  }
  return {true, ""};
}

KodairaType classify_from_valuations(long va, long vb, long vd) {
  if (vd == 0) return {Kodaira::Smooth, 0};
  if (va == 0) return {Kodaira::I, static_cast<int>(vd)};
  if (vb == 1) return {Kodaira::II, 0};
  if (va == 1) return {Kodaira::III, 0};
  if (vb == 2) return {Kodaira::IV, 0};
  // va >= 2, vb >= 3
  if (va == 2 || vb == 3) return {Kodaira::Istar, static_cast<int>(vd - 6)};
  if (vb == 4) return {Kodaira::IVstar, 0};
  if (va == 3) return {Kodaira::IIIstar, 0};
  if (vb == 5) return {Kodaira::IIstar, 0};
  return {Kodaira::NonMinimal, 0};
}

KodairaType classify_fiber_at(const WeierstrassForm& W, const Rational& c) {
  UniPoly D = W.discriminant();
  if (D.is_zero()) throw std::domain_error("zero discriminant");
  return classify_from_valuations(val(W.a, c), val(W.b, c), val(D, c));
}

WeierstrassForm chart_at_infinity(const WeierstrassForm& W) {
  if (W.a.degree() > 4 || W.b.degree() > 6) throw std::invalid_argument("degree bounds violated");
  WeierstrassForm R{UniPoly('m'), UniPoly('m')};
  for (auto& [e, v] : W.a.terms()) R.a.set(4 - e, v);
  for (auto& [e, v] : W.b.terms()) R.b.set(6 - e, v);
  return R;
}

FiberConfiguration fiber_configuration(const WeierstrassForm& W) {
  auto mini = is_globally_minimal(W);
  if (!mini.ok) throw std::domain_error("not globally minimal: " + mini.violation);
  FiberConfiguration fc;
  UniPoly D = W.discriminant();
  std::vector<FiberEntry> groups;
  for (auto& [F, mult] : squarefree_factorization(D)) {
    UniPoly rest = F;
    for (auto& r : rational_roots(F)) {
      FiberEntry e;
      e.place.value = r;
      e.type = classify_fiber_at(W, r);
      fc.finite_fibers.push_back(e);
      rest = divmod(rest, UniPoly::variable('l') - UniPoly::constant(r)).first;
    }
    if (rest.degree() <= 0) continue;
    bool ga = W.a.is_zero() ? false : gcd(rest, W.a).degree() == 0;
    bool gb = W.b.is_zero() ? false : gcd(rest, W.b).degree() == 0;
    if (!ga || !gb)
      throw std::domain_error("irrational multiple place with vanishing a or b; type undecided");
    FiberEntry e;
    e.place.rational = false;
    e.place.factor = monic(rest);
    e.type = {Kodaira::I, mult};
    e.count = rest.degree();
    groups.push_back(e);
  }
  std::sort(fc.finite_fibers.begin(), fc.finite_fibers.end(),
            [](const FiberEntry& x, const FiberEntry& y) { return x.place.value < y.place.value; });
  for (auto& g : groups) fc.finite_fibers.push_back(g);
  WeierstrassForm Winf = chart_at_infinity(W);
  fc.infinity_fiber = classify_fiber_at(Winf, Rational(0));
  return fc;
}

}  // namespace dpm
