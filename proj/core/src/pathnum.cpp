#include "dpm/pathnum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dpm {

CPoly::CPoly(std::vector<Complex> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
}

CPoly CPoly::from(const UniPoly& p) {
  std::vector<Complex> v(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
  for (auto& [e, q] : p.terms()) v[static_cast<std::size_t>(e)] = Complex(static_cast<Real>(to_double(q)));
  return CPoly(std::move(v));
}

Complex CPoly::eval(Complex z) const {
  Complex r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

CPoly CPoly::derivative() const {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<Real>(k));
  return CPoly(std::move(d));
}

Real scaled_residual(const CPoly& p, Complex z) {
  Real m = std::max<Real>(1, std::abs(z)), pw = 1, s = 0;
  for (auto& ck : p.c) {
    s += std::abs(ck) * pw;
    pw *= m;
  }
  return s == 0 ? 0 : std::abs(p.eval(z)) / s;
}

Real RootsResult::max_residual() const {
  Real m = 0;
  for (auto r : residuals) m = std::max(m, r);
  return m;
}

namespace {

std::vector<RootCluster> clusterize(const std::vector<Complex>& roots, Real radius) {
  std::size_t n = roots.size();
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Real scale = std::max<Real>(1, std::max(std::abs(roots[i]), std::abs(roots[j])));
      if (std::abs(roots[i] - roots[j]) < radius * scale) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    }
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(static_cast<int>(i))].push_back(i);
  std::vector<RootCluster> out;
  for (auto& [k, members] : groups) {
    Complex s = 0;
    for (auto i : members) s += roots[i];
    out.push_back({s / static_cast<Real>(members.size()), static_cast<int>(members.size())});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

RootsResult aberth(const CPoly& p, std::vector<Complex> z, const RootOptions& opt) {
  int n = p.degree();
  CPoly dp = p.derivative();
  const Real eps = std::numeric_limits<Real>::epsilon();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      auto ku = static_cast<std::size_t>(k);
      if (done[ku]) continue;
      Complex pv = p.eval(z[ku]);
      if (pv == Complex(0)) {
        done[ku] = true;
        continue;
      }
      Complex ratio = pv / dp.eval(z[ku]);
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += Real(1) / (z[ku] - z[static_cast<std::size_t>(j)]);
      Complex w = ratio / (Real(1) - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = Complex(eps, eps);
      z[ku] -= w;
      if (std::abs(w) <= 4 * eps * std::max<Real>(1, std::abs(z[ku])))
        done[ku] = true;
      else
        all = false;
    }
    if (all) break;
  }
  // Newton polish, keep only improvements
  for (int k = 0; k < n; ++k) {
    auto ku = static_cast<std::size_t>(k);
    for (int s = 0; s < 3; ++s) {
      Complex d = dp.eval(z[ku]);
      if (d == Complex(0)) break;
      Complex cand = z[ku] - p.eval(z[ku]) / d;
      if (scaled_residual(p, cand) < scaled_residual(p, z[ku]))
        z[ku] = cand;
      else
        break;
    }
  }
  RootsResult res;
  res.iterations = it;
  res.roots = std::move(z);
  for (auto& r : res.roots) res.residuals.push_back(scaled_residual(p, r));
  if (res.max_residual() >= opt.tol)
    throw std::runtime_error("root finder did not converge (residual " + std::to_string(static_cast<double>(res.max_residual())) + ")");
  res.clusters = clusterize(res.roots, opt.cluster_radius);
  return res;
}

}  // namespace

RootsResult all_roots(const CPoly& p, const RootOptions& opt) {
  int n = p.degree();
  if (n < 1) throw std::invalid_argument("all_roots needs degree >= 1");
  // Fujiwara-type radius
  Real R = 0;
  for (int k = 0; k < n; ++k) {
    Real q = std::abs(p.c[static_cast<std::size_t>(k)] / p.c[static_cast<std::size_t>(n)]);
    if (q > 0) R = std::max(R, 2 * std::pow(q, Real(1) / static_cast<Real>(n - k)));
  }
  if (R == 0) R = 1;
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    Real ang = 2 * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(n) + Real(0.4);
    z.push_back(std::polar(R * (Real(1) + Real(0.01) * static_cast<Real>(k) / static_cast<Real>(n)), ang));
  }
  return aberth(p, std::move(z), opt);
}

RootsResult refine_roots(const CPoly& p, const std::vector<Complex>& start, const RootOptions& opt) {
  if (static_cast<int>(start.size()) != p.degree()) throw std::invalid_argument("start size differs from degree");
  std::vector<Complex> z = start;
  // separate coincident starting points
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (z[i] == z[j]) z[i] += Complex(1e-9, 1e-9) * std::max<Real>(1, std::abs(z[i]));
  return aberth(p, std::move(z), opt);
}

PathPolyline::PathPolyline(std::vector<Complex> pts) : nodes(std::move(pts)) {
  if (nodes.size() < 2) throw std::invalid_argument("polyline needs at least two nodes");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i] == nodes[i - 1]) throw std::invalid_argument("consecutive polyline nodes coincide");
}

Real PathPolyline::length() const {
  Real L = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i) L += std::abs(nodes[i] - nodes[i - 1]);
  return L;
}

Complex PathPolyline::at(Real t) const {
  if (t <= 0) return nodes.front();
  if (t >= 1) return nodes.back();
  Real target = t * length(), acc = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    Real seg = std::abs(nodes[i] - nodes[i - 1]);
    if (acc + seg >= target) return nodes[i - 1] + (nodes[i] - nodes[i - 1]) * ((target - acc) / seg);
    acc += seg;
  }
  return nodes.back();
}

PathPolyline PathPolyline::reversed() const {
  std::vector<Complex> r(nodes.rbegin(), nodes.rend());
  return PathPolyline(std::move(r));
}

std::vector<int> min_cost_assignment(const std::vector<std::vector<Real>>& cost) {
  // Hungarian algorithm, square matrices, potentials formulation
  std::size_t n = cost.size();
  const Real INF = std::numeric_limits<Real>::infinity();
  std::vector<Real> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), INF);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      Real delta = INF;
      for (std::size_t j = 1; j <= n; ++j)
        if (!used[j]) {
          Real cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
      for (std::size_t j = 0; j <= n; ++j)
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> ans(n);
  for (std::size_t j = 1; j <= n; ++j) ans[p[j] - 1] = static_cast<int>(j - 1);
  return ans;
}

std::vector<int> match_roots(const std::vector<Complex>& prev, const std::vector<Complex>& cur) {
  std::size_t n = prev.size();
  if (cur.size() != n) throw std::invalid_argument("match_roots size mismatch");
  std::vector<int> nn(n);
  std::vector<bool> hit(n, false);
  bool bij = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (std::abs(cur[j] - prev[i]) < std::abs(cur[best] - prev[i])) best = j;
    nn[i] = static_cast<int>(best);
    if (hit[best]) bij = false;
    hit[best] = true;
  }
  if (bij) return nn;
  std::vector<std::vector<Real>> cost(n, std::vector<Real>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(cur[j] - prev[i]);
  return min_cost_assignment(cost);
}

std::vector<Complex> TrackedRoots::track(int i) const {
  std::vector<Complex> out;
  for (auto& r : roots) out.push_back(r.at(static_cast<std::size_t>(i)));
  return out;
}

namespace {
Real min_pairwise(const std::vector<Complex>& r) {
  Real m = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) m = std::min(m, std::abs(r[i] - r[j]));
  return m;
}
}  // namespace

TrackedRoots continue_roots(const PolyFamily& family, const PathPolyline& path, const ContinueOptions& opt) {
  RootOptions ro;
  ro.tol = opt.tol;
  CPoly p0 = family(path.at(0));
  int n = p0.degree();
  if (n < 1) throw std::invalid_argument("family has degree < 1 at the start");
  std::vector<Complex> r0;
  if (opt.initial_roots) {
    r0 = *opt.initial_roots;
    if (static_cast<int>(r0.size()) != n) throw std::invalid_argument("initial_roots size differs from degree");
    r0 = refine_roots(p0, r0, ro).roots;
  } else {
    r0 = all_roots(p0, ro).roots;
    std::sort(r0.begin(), r0.end(), [](Complex a, Complex b) {
      if (a.imag() != b.imag()) return a.imag() < b.imag();
      return a.real() < b.real();
    });
  }
  TrackedRoots tr;
  tr.t.push_back(0);
  tr.roots.push_back(r0);
  {
    Real m = 0;
    for (auto& z : r0) m = std::max(m, scaled_residual(p0, z));
    tr.residual.push_back(m);
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    tr.permutation.push_back(id);
  }
  Real t = 0, h = opt.initial_step, hprev = 0;
  auto accept = [&](Real tn, const std::vector<Complex>& raw, const std::vector<int>& perm, const CPoly& p) {
    std::vector<Complex> ordered(static_cast<std::size_t>(n));
    Real m = 0;
    for (int i = 0; i < n; ++i) {
      ordered[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      m = std::max(m, scaled_residual(p, ordered[static_cast<std::size_t>(i)]));
    }
    if (m >= opt.tol) throw std::runtime_error("residual certificate failed during continuation");
    tr.t.push_back(tn);
    tr.roots.push_back(ordered);
    tr.residual.push_back(m);
    tr.permutation.push_back(perm);
  };
  while (t < 1) {
    Real rem = 1 - t;
    if (rem < opt.snap) {
      CPoly p = family(path.at(1));
      if (p.degree() != n) throw std::runtime_error("family degree drops at the end of the path");
      auto res = refine_roots(p, tr.roots.back(), ro);
      accept(1, res.roots, match_roots(tr.roots.back(), res.roots), p);
      break;
    }
    h = std::min(h, rem);
    const auto& cur = tr.roots.back();
    std::vector<Complex> pred = cur;
    if (tr.roots.size() >= 2 && hprev > 0) {
      const auto& prv = tr.roots[tr.roots.size() - 2];
      for (int i = 0; i < n; ++i) {
        auto iu = static_cast<std::size_t>(i);
        pred[iu] = cur[iu] + (cur[iu] - prv[iu]) * (h / hprev);
      }
    }
    Real tn = t + h;
    CPoly p = family(path.at(tn));
    if (p.degree() != n) throw std::runtime_error("family degree changes along the path");
    bool ok = false;
    std::vector<Complex> raw;
    std::vector<int> perm;
    try {
      raw = refine_roots(p, pred, ro).roots;
      perm = match_roots(pred, raw);
      Real disp = 0;
      for (int i = 0; i < n; ++i)
        disp = std::max(disp, std::abs(raw[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] - cur[static_cast<std::size_t>(i)]));
      std::vector<Complex> ord(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) ord[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      Real sep = std::min(min_pairwise(cur), min_pairwise(ord));
      ok = n == 1 || sep > opt.separation_factor * disp;
    } catch (const std::runtime_error&) {
      ok = false;
    }
    if (ok) {
      accept(tn, raw, perm, p);
      hprev = h;
      t = tn;
      h *= Real(1.5);
    } else {
      h /= 2;
      if (h < opt.min_step) {
        if (rem < opt.end_window) {
          CPoly pe = family(path.at(1));
          if (pe.degree() != n) throw std::runtime_error("family degree drops at the end of the path");
          auto res = refine_roots(pe, tr.roots.back(), ro);
          accept(1, res.roots, match_roots(tr.roots.back(), res.roots), pe);
          break;
        }
        throw std::runtime_error("step size underflow at t = " + std::to_string(static_cast<double>(t)) +
                                 " (roots collide inside the path)");
      }
    }
  }
  return tr;
}

std::string trajectories_csv(const TrackedRoots& tr) {
  std::ostringstream os;
  os.precision(17);
  os << "step,track_id,re,im,residual\n";
  for (std::size_t s = 0; s < tr.steps(); ++s)
    for (std::size_t i = 0; i < tr.roots[s].size(); ++i)
      os << s << ',' << i << ',' << static_cast<double>(tr.roots[s][i].real()) << ','
         << static_cast<double>(tr.roots[s][i].imag()) << ',' << static_cast<double>(tr.residual[s]) << '\n';
  return os.str();
}

namespace {

struct GaussRule {
  std::vector<Real> x, w;  // on [0,1]
};

const GaussRule& gauss_rule(int n) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussRule g;
  for (int i = 1; i <= n; ++i) {
    Real z = std::cos(std::numbers::pi_v<Real> * (static_cast<Real>(i) - Real(0.25)) / (static_cast<Real>(n) + Real(0.5)));
    Real dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p1 = 1, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        Real p3 = p2;
        p2 = p1;
        p1 = ((2 * static_cast<Real>(j) - 1) * z * p2 - (static_cast<Real>(j) - 1) * p3) / static_cast<Real>(j);
      }
      dp = static_cast<Real>(n) * (z * p1 - p2) / (z * z - 1);
      Real dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 4 * std::numeric_limits<Real>::epsilon()) break;
    }
    g.x.push_back((1 - z) / 2);
    g.w.push_back(1 / ((1 - z * z) * dp * dp));
  }
  return cache.emplace(n, std::move(g)).first->second;
}

struct QuadNode {
  Complex x;
  Complex dx;  // weight times dx/ds
  Real nu;
};

struct Attempt {
  bool ok = false;
  Complex value, zs, ze;
};

Attempt integrate_once(const CPoly& f, const std::vector<Complex>& nodes, bool root_start, bool root_end,
                       std::optional<Complex> seed, int panels, int npp) {
  const auto& g = gauss_rule(npp);
  std::size_t nseg = nodes.size() - 1;
  Attempt a;
  Complex total = 0, zprev = 0;
  bool have = false;
  for (std::size_t k = 0; k < nseg; ++k) {
    Complex p = nodes[k], q = nodes[k + 1];
    int mode = 0;  // 1: start singular, 2: end singular
    if (k == 0 && root_start) mode = 1;
    if (k == nseg - 1 && root_end) mode = 2;
    std::vector<QuadNode> qs;
    for (int P = 0; P < panels; ++P)
      for (int i = 0; i < npp; ++i) {
        Real s = (static_cast<Real>(P) + g.x[static_cast<std::size_t>(i)]) / static_cast<Real>(panels);
        Real w = g.w[static_cast<std::size_t>(i)] / static_cast<Real>(panels);
        if (mode == 1)
          qs.push_back({p + (q - p) * (s * s), (q - p) * (w * 2 * s), s});
        else if (mode == 2)
          qs.push_back({p + (q - p) * (1 - s * s), (q - p) * (w * 2 * s), s});
        else
          qs.push_back({p + (q - p) * s, (q - p) * w, 1});
      }
    if (mode == 2) std::reverse(qs.begin(), qs.end());
    for (auto& qn : qs) {
      Complex y = std::sqrt(f.eval(qn.x));
      Complex z = y / qn.nu;
      if (!have) {
        if (seed && std::abs(z + *seed) < std::abs(z - *seed)) z = -z;
        have = true;
        a.zs = z;
      } else {
        Real dp = std::abs(z - zprev), dm = std::abs(z + zprev);
        if (std::min(dp, dm) > Real(0.5) * std::max(dp, dm)) return a;
        if (dm < dp) z = -z;
      }
      zprev = z;
      total += qn.dx / (z * qn.nu);
    }
  }
  a.ok = true;
  a.value = total;
  a.ze = zprev;
  return a;
}

}  // namespace

EllipticResult elliptic_integral(const CPoly& cubic, const PathPolyline& path, std::optional<Complex> seed,
                                 const EllipticOptions& opt) {
  if (cubic.degree() != 3) throw std::invalid_argument("elliptic_integral needs a cubic");
  std::vector<Complex> nodes = path.nodes;
  if (nodes.size() == 2) nodes.insert(nodes.begin() + 1, (nodes[0] + nodes[1]) / Real(2));
  auto is_root = [&](Complex z) { return scaled_residual(cubic, z) <= Real(1e-8); };
  bool rs = is_root(nodes.front()), re = is_root(nodes.back());
  Attempt prev;
  for (int P = 1; P <= opt.max_panels; P *= 2) {
    Attempt cur = integrate_once(cubic, nodes, rs, re, seed, P, opt.nodes_per_panel);
    if (cur.ok && prev.ok) {
      Real err = std::abs(cur.value - prev.value);
      if (err < opt.tol) {
        EllipticResult r;
        r.value = cur.value;
        r.y_start = cur.zs;
        r.y_end = cur.ze;
        r.error = err;
        r.panels = P;
        return r;
      }
    }
    prev = cur;
  }
  throw std::runtime_error("elliptic integral: no convergence or branch tracking failed (path too close to a root)");
}

PeriodLattice period_lattice(Real eps) {
  if (!(eps > 0)) throw std::invalid_argument("period_lattice needs eps > 0");
  CPoly f({Complex(0), Complex(eps), Complex(0), Complex(1)});
  Complex r = Complex(0, std::sqrt(eps));
  PeriodLattice L;
  L.omega_a = Real(2) * elliptic_integral(f, PathPolyline::segment(-r, 0)).value;
  L.omega_b = Real(2) * elliptic_integral(f, PathPolyline::segment(0, r)).value;
  return L;
}

}  // namespace dpm
