#include "dpm/interfam.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dpm {

namespace {

// polynomial in e = exp(i pi s) and s
using ES = std::map<std::pair<int, int>, Rational>;

ES es_add(const ES& x, const ES& y) {
  ES r = x;
  for (auto& [k, v] : y) {
    r[k] += v;
    if (r[k] == 0) r.erase(k);
  }
  return r;
}

ES es_mul(const ES& x, const ES& y) {
  ES r;
  for (auto& [k1, v1] : x)
    for (auto& [k2, v2] : y) {
      std::pair<int, int> k{k1.first + k2.first, k1.second + k2.second};
      r[k] += v1 * v2;
      if (r[k] == 0) r.erase(k);
    }
  return r;
}

ES es_scale(const ES& x, const Rational& c) {
  ES r;
  if (c == 0) return r;
  for (auto& [k, v] : x) r[k] = v * c;
  return r;
}

using ESPoly = std::vector<ES>;  // in lambda

ESPoly ep_mul(const ESPoly& p, const ESPoly& q) {
  if (p.empty() || q.empty()) return {};
  ESPoly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] = es_add(r[i + j], es_mul(p[i], q[j]));
  return r;
}

ESPoly ep_add(const ESPoly& p, const ESPoly& q) {
  ESPoly r(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < p.size()) r[i] = es_add(r[i], p[i]);
    if (i < q.size()) r[i] = es_add(r[i], q[i]);
  }
  return r;
}

ESPoly ep_scale(const ESPoly& p, const ES& c) {
  ESPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = es_mul(p[i], c);
  return r;
}

const ES kE{{{1, 0}, Rational(1)}};
const ES kS{{{0, 1}, Rational(1)}};

// (e + s) from + s to
ESPoly interpolate(const UniPoly& from, const UniPoly& to) {
  int n = std::max(from.degree(), to.degree()) + 1;
  ESPoly r(static_cast<std::size_t>(std::max(n, 0)));
  ES es = es_add(kE, kS);
  for (int k = 0; k < n; ++k)
    r[static_cast<std::size_t>(k)] = es_add(es_scale(es, from.coeff(k)), es_scale(kS, to.coeff(k)));
  return r;
}

ESPoly disc_form(const FamilySpec& F) {
  ESPoly A = interpolate(F.from.a, F.to.a);
  ESPoly B = interpolate(F.from.b, F.to.b);
  ES t = es_add(kE, es_scale(kS, 2));
  ES four{{{0, 0}, Rational(4)}};
  ES tt = es_scale(t, 27);
  ESPoly P = ep_add(ep_scale(ep_mul(ep_mul(A, A), A), four), ep_scale(ep_mul(B, B), tt));
  P.resize(13);
  return P;
}

Complex es_eval(const ES& x, Real s) {
  if (s == 0 || s == 1) {
    Rational e = s == 0 ? 1 : -1, sv = s == 0 ? 0 : 1, acc = 0;
    for (auto& [k, v] : x) {
      Rational term = v;
      for (int i = 0; i < k.first; ++i) term *= e;
      for (int i = 0; i < k.second; ++i) term *= sv;
      acc += term;
    }
    return Complex(static_cast<Real>(to_double(acc)), 0);
  }
  Complex e = std::polar(Real(1), std::numbers::pi_v<Real> * s);
  Complex acc = 0;
  for (auto& [k, v] : x) acc += static_cast<Real>(to_double(v)) * std::pow(e, k.first) * std::pow(s, Real(k.second));
  return acc;
}

bool es_zero_at(const ES& x, int which) {
  Rational e = which == 0 ? 1 : -1, sv = which == 0 ? 0 : 1, acc = 0;
  for (auto& [k, v] : x) {
    Rational term = v;
    for (int i = 0; i < k.first; ++i) term *= e;
    for (int i = 0; i < k.second; ++i) term *= sv;
    acc += term;
  }
  return acc == 0;
}

void check_degrees(const WeierstrassForm& W) {
  if (W.a.degree() > 4 || W.b.degree() > 6) throw std::invalid_argument("Weierstrass coefficients exceed degrees (4, 6)");
}

std::vector<SpherePoint> sphere_roots(const std::vector<Complex>& c, Real R) {
  const std::size_t N = c.size() - 1;
  for (Real scale : {Real(1), Real(1.7), Real(0.61), Real(2.9), Real(0.37)}) {
    Real rad = R * scale;
    std::vector<SpherePoint> out;
    std::size_t D = N;
    while (D > 0 && c[D] == Complex(0)) --D;
    if (D > 0) {
      std::vector<Complex> fin(c.begin(), c.begin() + static_cast<long>(D) + 1);
      for (auto& z : all_roots(CPoly(fin)).roots)
        if (std::abs(z) <= rad) out.push_back({0, z});
    }
    std::size_t m = N - D;  // exact roots at infinity
    std::vector<Complex> q(c.rbegin(), c.rend());
    if (D > 0 || m > 0) {
      std::vector<Complex> qq(q.begin() + static_cast<long>(m), q.end());
      CPoly Q(qq);
      if (Q.degree() > 0)
        for (auto& z : all_roots(Q).roots)
          if (std::abs(z) < 1 / rad) out.push_back({1, z});
    }
    for (std::size_t k = 0; k < m; ++k) out.push_back({1, Complex(0)});
    if (out.size() == N) return out;
  }
  throw std::runtime_error("could not split roots between the two charts");
}

Real separation_of(const std::vector<SpherePoint>& P, std::size_t i) {
  Real best = std::numeric_limits<Real>::infinity();
  for (std::size_t j = 0; j < P.size(); ++j) {
    if (j == i) continue;
    Real d = chordal(P[i], P[j]);
    if (d > 1e-9) best = std::min(best, d);
  }
  return best;
}

bool coincident(const std::vector<SpherePoint>& P, std::size_t i) {
  for (std::size_t j = 0; j < P.size(); ++j)
    if (j != i && chordal(P[i], P[j]) <= 1e-9) return true;
  return false;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

FamilySpec FamilySpec::between(int from_d, int to_d, const Rational& eps) {
  if (from_d < 1 || from_d > 3 || to_d < 1 || to_d > 3) throw std::invalid_argument("degree must be 1, 2 or 3");
  FamilySpec F;
  F.from_d = from_d;
  F.to_d = to_d;
  F.from = catalog(from_d, CatalogVariant::Perturbed, eps);
  F.to = catalog(to_d, CatalogVariant::Perturbed, eps);
  check_degrees(F.from);
  check_degrees(F.to);
  return F;
}

FamilySpec FamilySpec::constant(int d, const Rational& eps) { return between(d, d, eps); }

ComplexWeierstrass family_at(const FamilySpec& F, Real s) {
  if (!(s >= 0 && s <= 1)) throw std::invalid_argument("s must lie in [0,1]");
  ESPoly A = interpolate(F.from.a, F.to.a);
  ESPoly B = interpolate(F.from.b, F.to.b);
  ComplexWeierstrass W;
  W.lead = es_eval(es_add(kE, es_scale(kS, 2)), s);
  for (auto& c : A) W.a.push_back(es_eval(c, s));
  for (auto& c : B) W.b.push_back(es_eval(c, s));
  return W;
}

std::vector<Complex> discriminant_form(const FamilySpec& F, Real s) {
  if (!(s >= 0 && s <= 1)) throw std::invalid_argument("s must lie in [0,1]");
  auto P = disc_form(F);
  std::vector<Complex> c;
  for (auto& x : P) c.push_back(x.empty() ? Complex(0) : es_eval(x, s));
  return c;
}

int endpoint_finite_count(const FamilySpec& F, int which) {
  auto P = disc_form(F);
  int D = 12;
  while (D >= 0 && es_zero_at(P[static_cast<std::size_t>(D)], which)) --D;
  return std::max(D, 0);
}

int generic_degree(const FamilySpec& F) {
  auto P = disc_form(F);
  int D = 12;
  while (D >= 0 && P[static_cast<std::size_t>(D)].empty()) --D;
  return std::max(D, 0);
}

Complex SpherePoint::lambda() const {
  if (chart == 0) return z;
  if (z == Complex(0)) return {std::numeric_limits<Real>::infinity(), std::numeric_limits<Real>::infinity()};
  return Real(1) / z;
}

Real chordal(const SpherePoint& p, const SpherePoint& q) {
  // homogeneous [z0 : z1]
  auto hom = [](const SpherePoint& x) {
    return x.chart == 0 ? std::pair<Complex, Complex>{x.z, Complex(1)} : std::pair<Complex, Complex>{Complex(1), x.z};
  };
  auto [a0, a1] = hom(p);
  auto [b0, b1] = hom(q);
  Real na = std::sqrt(std::norm(a0) + std::norm(a1)), nb = std::sqrt(std::norm(b0) + std::norm(b1));
  return 2 * std::abs(a0 * b1 - a1 * b0) / (na * nb);
}

int TrajectorySet::finite_count(std::size_t sample) const {
  int n = 0;
  for (auto& p : points.at(sample))
    if (!p.at_infinity()) ++n;
  return n;
}

Real TrajectorySet::min_separation() const {
  Real best = std::numeric_limits<Real>::infinity();
  for (std::size_t k = 1; k + 1 < points.size(); ++k)
    for (std::size_t i = 0; i < points[k].size(); ++i)
      for (std::size_t j = i + 1; j < points[k].size(); ++j)
        if (!(points[k][i].at_infinity() && points[k][j].at_infinity()))
          best = std::min(best, chordal(points[k][i], points[k][j]));
  return best;
}

TrajectorySet sweep(const FamilySpec& F, const SweepOptions& opt) {
  if (opt.samples < 1) throw std::invalid_argument("need at least one interval");
  auto P = disc_form(F);
  auto coeffs = [&](Real s) {
    std::vector<Complex> c;
    for (auto& x : P) c.push_back(x.empty() ? Complex(0) : es_eval(x, s));
    return c;
  };
  const Real R = opt.chart_radius;
  auto roots_at = [&](Real s) { return sphere_roots(coeffs(s), R); };

  std::size_t n = static_cast<std::size_t>(opt.samples) + 1;
  std::vector<Real> grid(n);
  for (std::size_t k = 0; k < n; ++k) grid[k] = static_cast<Real>(k) / static_cast<Real>(opt.samples);
  grid.back() = 1;
  std::vector<std::vector<SpherePoint>> raw(n);
  std::vector<std::string> errors(n);
  unsigned threads = opt.threads > 0 ? static_cast<unsigned>(opt.threads) : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < n;) {
        try {
          raw[k] = roots_at(grid[k]);
        } catch (const std::exception& e) {
          errors[k] = e.what();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (std::size_t k = 0; k < n; ++k)
    if (!errors[k].empty()) throw std::runtime_error("root finding failed at s=" + std::to_string(static_cast<double>(grid[k])) + ": " + errors[k]);

  TrajectorySet T;
  T.s.push_back(0);
  T.points.push_back(raw[0]);
  const std::size_t m = raw[0].size();

  auto match = [&](const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b) {
    std::vector<std::vector<Real>> cost(m, std::vector<Real>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) cost[i][j] = chordal(a[i], b[j]);
    auto asg = min_cost_assignment(cost);
    std::vector<SpherePoint> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = b[static_cast<std::size_t>(asg[i])];
    return out;
  };

  std::function<void(Real, Real, const std::vector<SpherePoint>&, int)> advance =
      [&](Real sa, Real sb, const std::vector<SpherePoint>& braw, int depth) {
        const auto& A = T.points.back();
        auto B = match(A, braw);
        bool ok = true, near = false, chart_change = false;
        for (std::size_t i = 0; i < m; ++i) {
          if (B[i].chart != A[i].chart) chart_change = true;
          if (coincident(A, i) || coincident(B, i)) continue;
          Real disp = chordal(A[i], B[i]);
          Real sep = std::min(separation_of(A, i), separation_of(B, i));
          if (disp * 3 >= sep) ok = false;
          if (sb < 1 && separation_of(B, i) < opt.near_tracks) near = true;
        }
        bool more = (near && depth < 6) || (chart_change && depth < 10);
        if (!ok || more) {
          if (depth >= opt.max_depth) {
            if (!ok) throw std::runtime_error("unresolved track crossing near s=" + std::to_string(static_cast<double>(sb)));
          } else {
            Real sm = (sa + sb) / 2;
            advance(sa, sm, roots_at(sm), depth + 1);
            advance(sm, sb, braw, depth + 1);
            return;
          }
        }
        for (std::size_t i = 0; i < m; ++i)
          if (B[i].chart != A[i].chart) T.switches.push_back({static_cast<int>(i), sb, B[i].chart});
        T.s.push_back(sb);
        T.points.push_back(std::move(B));
      };
  for (std::size_t k = 1; k < n; ++k) {
    if (raw[k].size() != m) throw std::logic_error("track count changed on the sphere");
    advance(grid[k - 1], grid[k], raw[k], 0);
  }
  return T;
}

std::vector<int> track_order(const std::vector<SpherePoint>& pts, Complex base, Real R) {
  std::vector<std::pair<Real, int>> fin;
  std::vector<int> far;
  const Real twopi = 2 * std::numbers::pi_v<Real>;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].chart == 0 && std::abs(pts[i].z) <= R) {
      Real t = std::arg(pts[i].z - base);
      if (t > 1e-9) t -= twopi;
      fin.push_back({t, static_cast<int>(i)});
    } else {
      far.push_back(static_cast<int>(i));
    }
  }
  std::stable_sort(fin.begin(), fin.end(), [&](const auto& x, const auto& y) {
    if (std::abs(x.first - y.first) > 1e-12) return x.first > y.first;
    return std::abs(pts[static_cast<std::size_t>(x.second)].z - base) < std::abs(pts[static_cast<std::size_t>(y.second)].z - base);
  });
  std::vector<int> out;
  for (auto& f : fin) out.push_back(f.second);
  out.insert(out.end(), far.begin(), far.end());
  return out;
}

TranspositionResult transposition_word(const TrajectorySet& T, Complex base, Real R) {
  TranspositionResult res;
  if (T.points.empty()) return res;
  for (auto& P : T.points)
    for (auto& p : P)
      if (p.chart == 0 && std::abs(p.z - base) < 1e-12) throw std::domain_error("a track passes through the basepoint");
  auto radius = [&](const SpherePoint& p) {
    if (p.chart == 1) return p.z == Complex(0) ? std::numeric_limits<Real>::infinity() : std::abs(Real(1) / p.z - base);
    return std::abs(p.z - base);
  };
  auto cur = track_order(T.points[0], base, R);
  std::vector<Mutation> letters;  // time order
  for (std::size_t k = 1; k < T.points.size(); ++k) {
    auto target = track_order(T.points[k], base, R);
    std::vector<int> pos(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) pos[static_cast<std::size_t>(target[i])] = static_cast<int>(i);
    for (std::size_t pass = 0; pass < cur.size(); ++pass) {
      bool swapped = false;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        int u = cur[i], v = cur[i + 1];
        if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) {
          Real ru = radius(T.points[k][static_cast<std::size_t>(u)]);
          Real rv = radius(T.points[k][static_cast<std::size_t>(v)]);
          std::swap(cur[i], cur[i + 1]);
          swapped = true;
          if (ru > R || rv > R) continue;  // reshuffles over infinity
          if (std::isfinite(ru) && std::isfinite(rv) && std::abs(ru - rv) <= 1e-12 * std::max(Real(1), std::max(ru, rv)))
            throw std::domain_error("ambiguous swap at s=" + std::to_string(static_cast<double>(T.s[k])));
          letters.push_back({rv < ru ? 'L' : 'R', static_cast<int>(i)});
          res.swap_s.push_back(T.s[k]);
        }
      }
      if (!swapped) break;
    }
  }
  // read backwards in s: the word carries the s = 1 basis to the s = 0 one.
  // L_i R_i = R_i L_i = id on exceptional bases, so adjacent pairs cancel.
  std::vector<std::pair<Mutation, Real>> st;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!st.empty() && st.back().first.slot == letters[i].slot && st.back().first.side != letters[i].side)
      st.pop_back();
    else
      st.push_back({letters[i], res.swap_s[i]});
  }
  res.raw_letters = letters.size();
  res.swap_s.clear();
  for (auto& [m, sv] : st) {
    res.word.letters.push_back(m);
    res.swap_s.push_back(sv);
  }
  return res;
}

std::string render_svg(const TrajectorySet& T, const SvgStyle& st) {
  Real vr = st.view_radius;
  if (vr <= 0) {
    vr = 0;
    for (std::size_t k : {std::size_t(0), T.points.empty() ? std::size_t(0) : T.points.size() - 1}) {
      if (T.points.empty()) break;
      for (auto& p : T.points[k])
        if (p.chart == 0) vr = std::max(vr, std::abs(p.z));
    }
    vr = vr > 0 ? vr * Real(1.15) : Real(1);
  }
  const double w = st.width, h = st.height;
  const double scale = 0.9 * std::min(w, h) / (2 * static_cast<double>(vr));
  auto X = [&](Complex z) { return w / 2 + scale * static_cast<double>(z.real()); };
  auto Y = [&](Complex z) { return h / 2 - scale * static_cast<double>(z.imag()); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << st.width << "\" height=\"" << st.height << "\" viewBox=\"0 0 "
    << st.width << ' ' << st.height << "\">\n";
  o << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << st.width << "\" height=\"" << st.height
    << "\"/></clipPath></defs>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << st.width << "\" height=\"" << st.height << "\" fill=\"white\"/>\n";
  o << "<g stroke=\"black\" stroke-width=\"0.75\">\n";
  o << "<line x1=\"" << fmt(8) << "\" y1=\"" << fmt(h / 2) << "\" x2=\"" << fmt(w - 8) << "\" y2=\"" << fmt(h / 2) << "\"/>\n";
  o << "<line x1=\"" << fmt(w / 2) << "\" y1=\"" << fmt(h - 8) << "\" x2=\"" << fmt(w / 2) << "\" y2=\"" << fmt(8) << "\"/>\n";
  o << "</g>\n";
  if (!T.points.empty()) {
    o << "<g clip-path=\"url(#view)\" fill=\"none\" stroke=\"" << st.track_color << "\" stroke-width=\"1\">\n";
    const Real cut = 4 * vr;
    for (std::size_t t = 0; t < T.points[0].size(); ++t) {
      std::vector<std::vector<Complex>> runs(1);
      for (auto& P : T.points) {
        auto& p = P[t];
        if (p.chart == 0 && std::abs(p.z) <= cut) {
          runs.back().push_back(p.z);
        } else if (!runs.back().empty()) {
          runs.emplace_back();
        }
      }
      for (auto& r : runs) {
        if (r.size() < 2) continue;
        o << "<path d=\"M" << fmt(X(r[0])) << ',' << fmt(Y(r[0]));
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
          Complex pm = r[i == 0 ? 0 : i - 1], p0 = r[i], p1 = r[i + 1], p2 = r[std::min(i + 2, r.size() - 1)];
          Complex c1 = p0 + (p1 - pm) / Real(6), c2 = p1 - (p2 - p0) / Real(6);
          o << " C" << fmt(X(c1)) << ',' << fmt(Y(c1)) << ' ' << fmt(X(c2)) << ',' << fmt(Y(c2)) << ' ' << fmt(X(p1)) << ','
            << fmt(Y(p1));
        }
        o << "\"/>\n";
      }
    }
    o << "</g>\n";
    auto markers = [&](std::size_t k, const std::string& color, const char* cls) {
      auto order = track_order(T.points[k], 0, vr * 4);
      o << "<g class=\"" << cls << "\" fill=\"" << color << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto& p = T.points[k][static_cast<std::size_t>(order[i])];
        if (p.chart != 0) continue;
        o << "<circle cx=\"" << fmt(X(p.z)) << "\" cy=\"" << fmt(Y(p.z)) << "\" r=\"3\"/>";
        o << "<text x=\"" << fmt(X(p.z) + 4) << "\" y=\"" << fmt(Y(p.z) - 4) << "\">" << i << "</text>\n";
      }
      o << "</g>\n";
    };
    markers(0, st.from_color, "from");
    markers(T.points.size() - 1, st.to_color, "to");
  }
  o << "</svg>\n";
  return o.str();
}

std::string trajectories_csv(const TrajectorySet& T) {
  std::ostringstream o;
  o << "s,track,chart,re,im\n";
  char buf[160];
  for (std::size_t k = 0; k < T.points.size(); ++k)
    for (std::size_t i = 0; i < T.points[k].size(); ++i) {
      auto& p = T.points[k][i];
      std::snprintf(buf, sizeof buf, "%.12g,%zu,%d,%.12g,%.12g\n", static_cast<double>(T.s[k]), i, p.chart,
                    static_cast<double>(p.z.real()), static_cast<double>(p.z.imag()));
      o << buf;
    }
  return o.str();
}

MutationWord finite_mutation_word(int from_d) {
  switch (from_d) {
    case 3: return MutationWord::parse("R8 R7 R6 R5 R4 R3 R2 R1 R8 R7 L4");
    case 2: return MutationWord::parse("R9 R8 R7 R6 R5 R4 L6");
    default: throw std::invalid_argument("no interpolation word starting from degree " + std::to_string(from_d));
  }
}

CandidateCheck check_candidate(const FamilySpec& F, const MutationWord& w) {
  CandidateCheck c;
  auto ref = finite_mutation_word(F.from_d);
  auto M = from_boundaries(extended_classes(F.to_d));
  while (c.common_prefix < std::min(w.letters.size(), ref.letters.size()) &&
         w.letters[c.common_prefix] == ref.letters[c.common_prefix])
    ++c.common_prefix;
  try {
    c.identity = word_identity(M.lattice, M.basis, w, ref);
  } catch (const std::exception& e) {
    c.note = e.what();
  }
  return c;
}

}  // namespace dpm
