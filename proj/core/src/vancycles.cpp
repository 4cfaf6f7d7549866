#include "dpm/vancycles.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace dpm {

bool HomologyClass::primitive() const { return std::gcd(std::llabs(m), std::llabs(n)) == 1; }

HomologyClass HomologyClass::sign_normalized() const {
  if (m < 0 || (m == 0 && n < 0)) return {-m, -n};
  return *this;
}

std::string HomologyClass::str() const {
  if (m == 0 && n == 0) return "0";
  std::string s;
  auto term = [&](long long c, const char* sym) {
    if (c == 0) return;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (std::llabs(c) != 1) s += std::to_string(std::llabs(c));
    s += sym;
  };
  term(m, "a");
  term(n, "b");
  return s;
}

HomologyClass HomologyClass::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return {};
  static const std::regex term(R"(([+-]?)(\d*)([ab]))");
  HomologyClass h;
  std::size_t pos = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), term); it != std::sregex_iterator(); ++it) {
    if (static_cast<std::size_t>(it->position()) != pos) break;
    if (pos > 0 && (*it)[1].length() == 0) throw std::invalid_argument("bad homology class: " + text);
    long long c = (*it)[2].length() ? std::stoll((*it)[2].str()) : 1;
    if ((*it)[1] == "-") c = -c;
    ((*it)[3] == "a" ? h.m : h.n) += c;
    pos += static_cast<std::size_t>(it->length());
  }
  if (pos != s.size() || s.empty()) throw std::invalid_argument("bad homology class: " + text);
  return h;
}

long long h1_pair(const HomologyClass& u, const HomologyClass& v) { return u.n * v.m - u.m * v.n; }

SL2Matrix SL2Matrix::operator*(const SL2Matrix& o) const {
  return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
           e[2] * o.e[1] + e[3] * o.e[3]}};
}

HomologyClass SL2Matrix::apply(const HomologyClass& v) const {
  return {e[0] * v.m + e[1] * v.n, e[2] * v.m + e[3] * v.n};
}

SL2Matrix SL2Matrix::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  SL2Matrix r;
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

SL2Matrix dehn_twist(const HomologyClass& l) {
  if (!l.primitive()) throw std::invalid_argument("dehn_twist needs a primitive class, got " + l.str());
  return {{1 + l.m * l.n, -l.m * l.m, l.n * l.n, 1 - l.m * l.n}};
}

SL2Matrix total_monodromy(const std::vector<HomologyClass>& classes) {
  SL2Matrix M;
  for (auto& l : classes) M = dehn_twist(l) * M;
  return M;
}

InfinityCycle infinity_cycle(const std::vector<HomologyClass>& classes, int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("degree must be 1, 2 or 3");
  SL2Matrix M = total_monodromy(classes);
  for (bool left : {true, false})
    for (long long m = 0; m <= 3; ++m)
      for (long long n = -3; n <= 3; ++n) {
        HomologyClass c{m, n};
        if ((m == 0 && n <= 0) || !c.primitive()) continue;
        SL2Matrix T = dehn_twist(c).pow(d);
        if ((left ? T * M : M * T).is_identity()) return {c, left};
      }
  throw std::runtime_error("no cycle at infinity in the search box");
}

IMat seifert_gram(const std::vector<HomologyClass>& classes) {
  std::size_t n = classes.size();
  IMat G(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    G[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) G[i][j] = h1_pair(classes[i], classes[j]);
  }
  return G;
}

std::vector<Complex> critical_values_ordered(const WeierstrassForm& W, Complex lambda0) {
  UniPoly D = W.discriminant();
  if (gcd(D, derivative(D)).degree() > 0) throw std::domain_error("discriminant is not separable");
  auto roots = all_roots(CPoly::from(D)).roots;
  auto i0 = static_cast<std::size_t>(std::min_element(roots.begin(), roots.end(), [&](Complex a, Complex b) {
                                       return std::abs(a - lambda0) < std::abs(b - lambda0);
                                     }) -
                                     roots.begin());
  Complex r0 = roots[i0];
  Real th0 = std::arg(r0);
  const Real twopi = 2 * std::numbers::pi_v<Real>;
  std::vector<std::pair<Real, Complex>> rest;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k == i0) continue;
    Real t = std::arg(roots[k]);
    while (t > th0) t -= twopi;
    while (t <= th0 - twopi) t += twopi;
    rest.push_back({t, roots[k]});
  }
  std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.first - b.first) > 1e-12) return a.first > b.first;
    return std::abs(a.second) < std::abs(b.second);
  });
  std::vector<Complex> out{r0};
  for (auto& [t, z] : rest) out.push_back(z);
  return out;
}

std::vector<HomologyClass> reference_classes(int d) {
  std::vector<std::string> s;
  switch (d) {
    case 1: s = {"a+b", "a", "b", "a", "b", "a", "b", "a", "b", "a", "b"}; break;
    case 2: s = {"a+b", "a", "b", "a", "a", "a-b", "b", "b", "a", "b"}; break;
    case 3: s = {"a+b", "b", "a", "b", "a", "b", "a", "b", "a"}; break;
    default: throw std::invalid_argument("degree must be 1, 2 or 3");
  }
  std::vector<HomologyClass> out;
  for (auto& x : s) out.push_back(HomologyClass::parse(x));
  return out;
}

namespace {

using Roots3 = std::array<Complex, 3>;

Real min_sep(const Roots3& r) {
  return std::min({std::abs(r[0] - r[1]), std::abs(r[0] - r[2]), std::abs(r[1] - r[2])});
}

Real seg_dist(Complex p, Complex u, Complex v) {
  if (u == v) return std::abs(p - u);
  Real t = ((p - u) * std::conj(v - u)).real() / std::norm(v - u);
  t = std::clamp<Real>(t, 0, 1);
  return std::abs(p - (u + t * (v - u)));
}

bool in_triangle(Complex p, Complex a, Complex b, Complex c, Real margin) {
  auto cr = [](Complex u, Complex v, Complex w) { return (std::conj(v - u) * (w - u)).imag(); };
  Real d1 = cr(a, b, p), d2 = cr(b, c, p), d3 = cr(c, a, p);
  bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
  if (!(neg && pos)) return true;
  return std::min({seg_dist(p, a, b), seg_dist(p, b, c), seg_dist(p, c, a)}) < margin;
}

// match cur to prev minimizing the maximal displacement
Roots3 match_minmax(const Roots3& prev, const Roots3& cur) {
  std::array<int, 3> perm{0, 1, 2}, best = perm;
  Real bv = std::numeric_limits<Real>::infinity();
  do {
    Real m = 0;
    for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(cur[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] - prev[static_cast<std::size_t>(i)]));
    if (m < bv) {
      bv = m;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Roots3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = cur[static_cast<std::size_t>(best[i])];
  return out;
}

struct Fiber {
  UniPoly a, b;
  CPoly at(Complex lam) const {
    return CPoly({CPoly::from(b).eval(lam), CPoly::from(a).eval(lam), Complex(0), Complex(1)});
  }
};

Roots3 roots_at(const CPoly& p, const Roots3& guess) {
  auto r = refine_roots(p, std::vector<Complex>(guess.begin(), guess.end())).roots;
  return match_minmax(guess, {r[0], r[1], r[2]});
}

// quadratic L with L(r_k) = dv_k
struct Quad {
  Complex c2, c1, c0;
  Complex operator()(Complex x) const { return (c2 * x + c1) * x + c0; }
  Complex deriv(Complex x) const { return Real(2) * c2 * x + c1; }
};

Quad interpolate(const Roots3& r, const Roots3& dv) {
  Complex f01 = (dv[1] - dv[0]) / (r[1] - r[0]);
  Complex f12 = (dv[2] - dv[1]) / (r[2] - r[1]);
  Complex f012 = (f12 - f01) / (r[2] - r[0]);
  Quad q;
  q.c2 = f012;
  q.c1 = f01 - f012 * (r[0] + r[1]);
  q.c0 = dv[0] - f01 * r[0] + f012 * r[0] * r[1];
  return q;
}

std::optional<std::vector<Complex>> step_map(const std::vector<Complex>& nodes, const Roots3& r, const Roots3& rn, int i,
                                            int j) {
  Roots3 dv{rn[0] - r[0], rn[1] - r[1], rn[2] - r[2]};
  Quad L = interpolate(r, dv);
  for (auto& x : nodes)
    if (std::abs(L.deriv(x)) > Real(0.3)) return std::nullopt;
  for (auto& x : r)
    if (std::abs(L.deriv(x)) > Real(0.3)) return std::nullopt;
  std::vector<Complex> out{nodes.front()};
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    std::vector<std::pair<Complex, Complex>> stack{{nodes[k], nodes[k + 1]}};
    while (!stack.empty()) {
      auto [u, v] = stack.back();
      stack.pop_back();
      Real dev = std::abs(Real(2) * L.c2) * std::norm(v - u) / 8;
      Real dmin = std::numeric_limits<Real>::infinity();
      for (auto& rr : r)
        if (std::abs(rr - u) > 1e-15 && std::abs(rr - v) > 1e-15) dmin = std::min(dmin, seg_dist(rr, u, v));
      if (dev < Real(0.25) * dmin || std::abs(v - u) < 1e-14) {
        out.push_back(v);
      } else {
        Complex mid = (u + v) / Real(2);
        stack.push_back({mid, v});
        stack.push_back({u, mid});
      }
    }
  }
  for (auto& x : out) x = x + L(x);
  out.front() = rn[static_cast<std::size_t>(i)];
  out.back() = rn[static_cast<std::size_t>(j)];
  return out;
}

std::vector<Complex> simplify(std::vector<Complex> nodes, const Roots3& roots) {
  Real margin = Real(0.05) * min_sep(roots);
  bool changed = true;
  while (changed && nodes.size() > 2) {
    changed = false;
    std::vector<Complex> out{nodes.front()};
    for (std::size_t m = 1; m + 1 < nodes.size(); ++m) {
      Complex p = out.back(), x = nodes[m], q = nodes[m + 1];
      bool keep = false;
      for (auto& rr : roots) {
        if (std::abs(rr - p) < 1e-15 || std::abs(rr - q) < 1e-15) continue;
        if (in_triangle(rr, p, x, q, margin)) {
          keep = true;
          break;
        }
      }
      if (keep)
        out.push_back(x);
      else
        changed = true;
    }
    out.push_back(nodes.back());
    nodes = std::move(out);
  }
  std::vector<Complex> dedup{nodes.front()};
  for (std::size_t k = 1; k < nodes.size(); ++k)
    if (nodes[k] != dedup.back()) dedup.push_back(nodes[k]);
  return dedup;
}

struct ArcGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VanishingData attempt(int d, const Rational& eps, const VanishingOptions& opt) {
  VanishingData v;
  v.d = d;
  v.eps = eps;
  WeierstrassForm W = catalog(d, CatalogVariant::Perturbed, eps);
  Fiber fib{W.a, W.b};
  v.critical_values = critical_values_ordered(W, Complex(static_cast<Real>(to_double(lambda0(d)))));
  for (std::size_t k = 0; k < v.critical_values.size(); ++k)
    for (std::size_t j = 0; j < v.critical_values.size(); ++j)
      if (j != k && seg_dist(v.critical_values[j], 0, v.critical_values[k]) < opt.arc_guard)
        throw ArcGuardError("straight arc to critical value " + std::to_string(k) + " passes near another one");
  Real e = static_cast<Real>(to_double(eps));
  v.lattice = period_lattice(e);
  Real M[2][2] = {{v.lattice.omega_a.real(), v.lattice.omega_b.real()},
                  {v.lattice.omega_a.imag(), v.lattice.omega_b.imag()}};
  Real det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  CPoly base = fib.at(0);
  Real se = std::sqrt(e);
  std::vector<Complex> start{Complex(0, -se), Complex(0), Complex(0, se)};
  for (auto& lam : v.critical_values) {
    PathPolyline gamma = PathPolyline::segment(0, lam);
    v.gamma.push_back(gamma);
    ContinueOptions co;
    co.initial_roots = start;
    TrackedRoots tr = continue_roots([&](Complex z) { return fib.at(z); }, gamma, co);
    const auto& fin = tr.roots.back();
    std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<Real, 3> dist;
    for (std::size_t p = 0; p < 3; ++p)
      dist[p] = std::abs(fin[static_cast<std::size_t>(pairs[p].first)] - fin[static_cast<std::size_t>(pairs[p].second)]);
    std::size_t best = static_cast<std::size_t>(std::min_element(dist.begin(), dist.end()) - dist.begin());
    Real next = std::numeric_limits<Real>::infinity();
    for (std::size_t p = 0; p < 3; ++p)
      if (p != best) next = std::min(next, dist[p]);
    Real scale = std::max<Real>(1, std::abs(fin[static_cast<std::size_t>(pairs[best].first)]));
    if (!(dist[best] < Real(1e-4) * scale && dist[best] < next / 10))
      throw std::runtime_error("no colliding pair at the end of an arc");
    auto [i, j] = pairs[best];
    int k3 = 3 - i - j;
    v.colliding.push_back({i, j});
    auto R3 = [&](std::size_t s) { return Roots3{tr.roots[s][0], tr.roots[s][1], tr.roots[s][2]}; };
    std::size_t ks = tr.steps() - 1;
    auto sep = [&](std::size_t s, int x, int y) { return std::abs(tr.roots[s][static_cast<std::size_t>(x)] - tr.roots[s][static_cast<std::size_t>(y)]); };
    while (ks > 0 && sep(ks, i, j) < Real(0.05) * sep(ks, i, k3)) --ks;
    ks = std::min(ks + 1, tr.steps() - 1);
    std::vector<Complex> nodes{tr.roots[ks][static_cast<std::size_t>(i)], tr.roots[ks][static_cast<std::size_t>(j)]};
    for (std::size_t s = ks; s > 0; --s) {
      struct Seg {
        Real t1;
        Roots3 r1;
        Real t0;
        Roots3 r0;
      };
      std::vector<Seg> segs{{tr.t[s], R3(s), tr.t[s - 1], R3(s - 1)}};
      int guard = 0;
      while (!segs.empty()) {
        Seg g = segs.front();
        segs.erase(segs.begin());
        auto mapped = step_map(nodes, g.r1, g.r0, i, j);
        if (!mapped) {
          if (++guard > 10000) throw std::runtime_error("transport of the vanishing arc did not settle");
          Real tm = (g.t1 + g.t0) / 2;
          Roots3 rm = roots_at(fib.at(gamma.at(tm)), g.r1);
          segs.insert(segs.begin(), {{g.t1, g.r1, tm, rm}, {tm, rm, g.t0, g.r0}});
          continue;
        }
        nodes = simplify(*mapped, g.r0);
      }
    }
    PathPolyline delta(nodes);
    v.delta.push_back(delta);
    Complex I = Real(2) * elliptic_integral(base, delta).value;
    v.integrals.push_back(I);
    Real mm = (M[1][1] * I.real() - M[0][1] * I.imag()) / det;
    Real nn = (-M[1][0] * I.real() + M[0][0] * I.imag()) / det;
    Real rm = std::round(mm), rn = std::round(nn);
    Real res = std::max(std::abs(mm - rm), std::abs(nn - rn));
    if (res >= opt.residual_tol)
      throw std::runtime_error("integer solve residual " + std::to_string(static_cast<double>(res)) + " too large");
    v.residuals.push_back(res);
    HomologyClass h{static_cast<long long>(rm), static_cast<long long>(rn)};
    if (!h.primitive()) throw std::runtime_error("vanishing class " + h.str() + " is not primitive");
    v.classes.push_back(h);
  }
  if (opt.normalize && !v.classes.empty()) {
    HomologyClass c0 = v.classes[0].sign_normalized();
    if (c0 == HomologyClass{1, -1}) {
      v.b_flipped = true;
      for (auto& c : v.classes) c.n = -c.n;
    }
    for (auto& c : v.classes) c = c.sign_normalized();
  }
  return v;
}

}  // namespace

VanishingData vanishing_classes(int d, const Rational& eps, const VanishingOptions& opt) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
  Rational e = eps;
  for (int r = 0;; ++r) {
    try {
      VanishingData v = attempt(d, e, opt);
      v.retries = r;
      return v;
    } catch (const ArcGuardError&) {
      if (r >= opt.max_retries) throw;
      e *= Rational(18, 17);
    }
  }
}

std::string render_cycles_svg(const VanishingData& v) {
  Real R = 0;
  for (auto& p : v.delta)
    for (auto& z : p.nodes) R = std::max(R, std::abs(z));
  if (R == 0) R = 1;
  R *= Real(1.15);
  const int W = 640;
  auto X = [&](Complex z) { return W / 2.0 + static_cast<double>(z.real() / R) * W / 2.0; };
  auto Y = [&](Complex z) { return W / 2.0 - static_cast<double>(z.imag() / R) * W / 2.0; };
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W << "\" viewBox=\"0 0 " << W
     << ' ' << W << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                 "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  for (std::size_t k = 0; k < v.delta.size(); ++k) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[k % 12] << "\" stroke-width=\"1.5\" points=\"";
    for (auto& z : v.delta[k].nodes) os << X(z) << ',' << Y(z) << ' ';
    os << "\"><title>L" << k << " = " << (k < v.classes.size() ? v.classes[k].str() : "?") << "</title></polyline>\n";
  }
  Real se = std::sqrt(static_cast<Real>(to_double(v.eps)));
  for (Complex z : {Complex(0, -se), Complex(0), Complex(0, se)})
    os << "<circle cx=\"" << X(z) << "\" cy=\"" << Y(z) << "\" r=\"4\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace dpm
