#include "dpm/rootlattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace dpm {

namespace {

IMat gram_in(const IMat& G, const IMat& U) { return matmul(transpose(U), matmul(G, U)); }

IMat from_columns(const std::vector<IVec>& cols, std::size_t n) {
  IMat U(n, IVec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) U[i][j] = cols[j][i];
  return U;
}

Rational q_of(long long x) { return Rational(static_cast<long>(x)); }

IMat negated(const IMat& G) {
  IMat H = G;
  for (auto& r : H)
    for (auto& x : r) x = -x;
  return H;
}

}  // namespace

int definiteness(const IMat& G) {
  std::size_t n = G.size();
  if (n == 0) return 1;
  bool pos = true, neg = true;
  for (std::size_t k = 1; k <= n; ++k) {
    ZMat M(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) M[i][j] = static_cast<long>(G[i][j]);
    int s = sgn(determinant(M));
    if (s <= 0) pos = false;
    if (s != ((k % 2) ? -1 : 1)) neg = false;
  }
  return pos ? 1 : (neg ? -1 : 0);
}

LLLResult lll_reduce(const IMat& G0, double delta) {
  std::size_t n = G0.size();
  if (definiteness(G0) != 1) throw std::invalid_argument("lll_reduce needs a positive definite Gram");
  IMat U = identity_matrix(static_cast<int>(n));
  auto gso = [&](const IMat& G, std::vector<std::vector<double>>& mu, std::vector<double>& B) {
    mu.assign(n, std::vector<double>(n, 0));
    B.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        double s = static_cast<double>(G[i][j]);
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * B[k];
        mu[i][j] = s / B[j];
      }
      double s = static_cast<double>(G[i][i]);
      for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * B[k];
      B[i] = s;
    }
  };
  std::vector<std::vector<double>> mu;
  std::vector<double> B;
  std::size_t k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw std::runtime_error("LLL did not terminate");
    IMat G = gram_in(G0, U);
    gso(G, mu, B);
    for (std::size_t jj = k; jj-- > 0;) {
      long long q = std::llround(mu[k][jj]);
      if (q != 0) {
        for (std::size_t i = 0; i < n; ++i) U[i][k] -= q * U[i][jj];
        G = gram_in(G0, U);
        gso(G, mu, B);
      }
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      for (std::size_t i = 0; i < n; ++i) std::swap(U[i][k], U[i][k - 1]);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return {gram_in(G0, U), U};
}

std::vector<IVec> short_vectors(const IntLattice& L, long long bound) {
  std::size_t n = static_cast<std::size_t>(L.rank());
  if (n == 0) return {};
  int s = definiteness(L.gram);
  if (s == 0) throw std::invalid_argument("short_vectors needs a definite lattice");
  IMat G = s == 1 ? L.gram : negated(L.gram);
  auto red = lll_reduce(G);
  // Cholesky-type decomposition Q(x) = sum q_ii (x_i + sum_{j>i} q_ij x_j)^2
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = static_cast<double>(red.gram[i][j]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  const double C = static_cast<double>(bound) + 1e-7;
  std::vector<long long> x(n, 0);
  std::vector<IVec> out;
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double rem) {
    double c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= q[i][j] * static_cast<double>(x[j]);
    double r = std::sqrt(std::max(0.0, rem / q[i][i]));
    auto lo = static_cast<long long>(std::ceil(c - r - 1e-9));
    auto hi = static_cast<long long>(std::floor(c + r + 1e-9));
    for (long long v = lo; v <= hi; ++v) {
      x[i] = v;
      double t = static_cast<double>(v) - c;
      double used = q[i][i] * t * t;
      if (used > rem + 1e-9) continue;
      if (i == 0) {
        bool zero = std::all_of(x.begin(), x.end(), [](long long z) { return z == 0; });
        if (zero) continue;
        long long nrm = bilinear(red.gram, x, x);
        if (nrm <= bound) out.push_back(matvec(red.U, x));
      } else {
        rec(i - 1, rem - used);
      }
    }
    x[i] = 0;
  };
  rec(n - 1, C);
  std::sort(out.begin(), out.end());
  return out;
}

IMat cartan_matrix(const std::string& type) {
  if (type.size() < 2) throw std::invalid_argument("bad Dynkin type " + type);
  char t = type[0];
  int n = std::stoi(type.substr(1));
  IMat C = identity_matrix(n);
  for (auto& r : C)
    for (auto& x : r) x *= 2;
  auto link = [&](int i, int j) {
    C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    C[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
  };
  if (t == 'A') {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
  } else if (t == 'D' && n >= 4) {
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
  } else if (t == 'E' && n >= 6 && n <= 8) {
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(2, n - 1);
  } else {
    throw std::invalid_argument("bad Dynkin type " + type);
  }
  return C;
}

bool dynkin_isomorphic(const IMat& A, const IMat& B) {
  std::size_t n = A.size();
  if (B.size() != n) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto deg = [](const IMat& M, std::size_t i) {
    int d = 0;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i && M[i][j] != 0) ++d;
    return d;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || deg(A, i) != deg(B, j) || A[i][i] != B[j][j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = A[i][k] == B[j][static_cast<std::size_t>(perm[k])] && A[k][i] == B[static_cast<std::size_t>(perm[k])][j];
      if (!ok) continue;
      used[j] = true;
      perm[i] = static_cast<int>(j);
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0);
}

RootSystemReport root_system_identify(const IntLattice& L) {
  RootSystemReport rep;
  std::size_t n = static_cast<std::size_t>(L.rank());
  Integer det = determinant(to_z(L.gram));
  if (det == 0) throw std::domain_error("degenerate lattice");
  rep.abs_det = abs(det);
  rep.sign = definiteness(L.gram);
  if (rep.sign == 0) throw std::domain_error("lattice is indefinite");
  IntLattice Lp{rep.sign == 1 ? L.gram : negated(L.gram)};
  std::vector<IVec> roots;
  for (auto& v : short_vectors(Lp, 2))
    if (bilinear(Lp.gram, v, v) == 2) roots.push_back(v);
  rep.root_count = roots.size();
  static const double primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  auto f = [&](const IVec& v) {
    double s = static_cast<double>(v[0]);
    for (std::size_t i = 1; i < v.size(); ++i) s += static_cast<double>(v[i]) * std::sqrt(primes[(i - 1) % 16] + 16.0 * static_cast<double>((i - 1) / 16));
    return s;
  };
  std::set<IVec> pos;
  for (auto& r : roots)
    if (f(r) > 0) pos.insert(r);
  for (auto& r : pos) {
    bool decomposable = false;
    for (auto& s : pos) {
      IVec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = r[i] - s[i];
      if (pos.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rep.simple_roots.push_back(r);
  }
  if (rep.simple_roots.size() != n) throw std::domain_error("not a root lattice: roots do not span");
  rep.cartan = congruence(Lp.gram, rep.simple_roots);
  if (abs(determinant(to_z(rep.cartan))) != rep.abs_det) throw std::domain_error("not a root lattice: roots span a sublattice");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rep.cartan[i][j] != 0 && rep.cartan[i][j] != -1) throw std::domain_error("unexpected Cartan entry");
      if (rep.cartan[i][j] == -1) rep.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  // components
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> st{s};
    comp[s] = nc;
    while (!st.empty()) {
      auto i = st.back();
      st.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && rep.cartan[i][j] != 0) {
          comp[j] = nc;
          st.push_back(j);
        }
    }
    ++nc;
  }
  std::vector<std::string> names;
  for (int c = 0; c < nc; ++c) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) vs.push_back(i);
    std::size_t m = vs.size();
    IMat C(m, IVec(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) C[a][b] = rep.cartan[vs[a]][vs[b]];
    std::size_t edges = 0;
    std::vector<int> degree(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (C[a][b]) {
          ++edges;
          ++degree[a];
          ++degree[b];
        }
    if (edges + 1 != m) throw std::domain_error("Dynkin graph is not a tree");
    std::string name;
    int branch = -1;
    for (std::size_t a = 0; a < m; ++a) {
      if (degree[a] > 3) throw std::domain_error("Dynkin vertex of degree > 3");
      if (degree[a] == 3) {
        if (branch >= 0) throw std::domain_error("two branch points");
        branch = static_cast<int>(a);
      }
    }
    if (branch < 0) {
      name = "A" + std::to_string(m);
    } else {
      std::vector<int> arms;
      for (std::size_t b = 0; b < m; ++b) {
        if (!C[static_cast<std::size_t>(branch)][b] || b == static_cast<std::size_t>(branch)) continue;
        int len = 1;
        std::size_t prev = static_cast<std::size_t>(branch), cur = b;
        for (;;) {
          std::size_t nxt = m;
          for (std::size_t x = 0; x < m; ++x)
            if (x != cur && x != prev && C[cur][x]) nxt = x;
          if (nxt == m) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1)
        name = "D" + std::to_string(arms[2] + 3);
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        name = "E" + std::to_string(arms[2] + 4);
      else
        throw std::domain_error("Dynkin graph outside the ADE list");
    }
    if (!dynkin_isomorphic(C, cartan_matrix(name))) throw std::logic_error("Dynkin match failed for " + name);
    names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  for (std::size_t i = 0; i < names.size(); ++i) rep.type += (i ? "+" : "") + names[i];
  return rep;
}

HyperbolicModel hyperbolic_model(int ell) {
  if (ell < 6 || ell > 8) throw std::invalid_argument("ell must be 6, 7 or 8");
  HyperbolicModel H;
  std::size_t n = static_cast<std::size_t>(ell) + 1;
  H.ambient.gram = identity_matrix(static_cast<int>(n));
  for (std::size_t i = 1; i < n; ++i) H.ambient.gram[i][i] = -1;
  H.k.assign(n, 1);
  H.k[0] = -3;
  H.k_square = bilinear(H.ambient.gram, H.k, H.k);
  IMat row(1, IVec(n));
  for (std::size_t j = 0; j < n; ++j) row[0][j] = H.k[j] * H.ambient.gram[j][j];
  H.perp_basis = integer_kernel(row);
  H.perp = root_system_identify({congruence(H.ambient.gram, H.perp_basis)});
  return H;
}

std::vector<IVec> fundamental_weights(const IntLattice& ambient, const std::vector<IVec>& simple_roots) {
  std::size_t n = static_cast<std::size_t>(ambient.rank());
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (simple_roots[i] == simple_roots[j]) throw std::invalid_argument("duplicate simple root");
  if (rank_q(to_q(from_columns(simple_roots, n))) != static_cast<int>(simple_roots.size()))
    throw std::invalid_argument("simple roots are linearly dependent");
  IMat A;
  for (auto& b : simple_roots) A.push_back(matvec(ambient.gram, b));
  std::vector<IVec> out;
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    IVec e(simple_roots.size(), 0);
    e[i] = 1;
    auto w = solve_integer(A, e);
    if (!w) throw std::runtime_error("no integral fundamental weight for root " + std::to_string(i));
    out.push_back(*w);
  }
  return out;
}

KernelDecomposition kernel_decomposition(const Pseudolattice& P, const ChargeMap& c) {
  KernelDecomposition K;
  K.p = point_like(P).p;
  K.kernel = integer_kernel(c.rows);
  std::size_t n = static_cast<std::size_t>(P.rank());
  IMat Kc = from_columns(K.kernel, n);
  auto coords = solve_integer(Kc, K.p);
  K.p_in_kernel = coords.has_value();
  if (!K.p_in_kernel) {
    K.witness = "point-like vector has nonzero charge";
    return K;
  }
  IMat GK = congruence(P.gram, K.kernel);
  K.symmetric = true;
  for (std::size_t i = 0; i < GK.size() && K.symmetric; ++i)
    for (std::size_t j = 0; j < GK.size(); ++j)
      if (GK[i][j] != GK[j][i]) {
        K.symmetric = false;
        K.witness = "asymmetric pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
  auto rad = nullspace_q(to_q(GK));
  K.radical_is_p = rad.size() == 1;
  if (K.radical_is_p) {
    QVec pc = to_q(IMat{*coords})[0];
    // rad[0] proportional to pc
    QMat two{rad[0], pc};
    K.radical_is_p = rank_q(two) == 1;
  }
  if (!K.radical_is_p && K.witness.empty()) K.witness = "radical has dimension " + std::to_string(rad.size());
  auto ext = extend_to_basis(*coords);
  for (std::size_t k = 1; k < ext.size(); ++k) K.complement.push_back(matvec(Kc, ext[k]));
  K.orthogonal = true;
  for (auto& v : K.complement)
    if (P.pair(K.p, v) != 0 || P.pair(v, K.p) != 0) K.orthogonal = false;
  if (!K.orthogonal && K.witness.empty()) K.witness = "p is not orthogonal to the complement";
  try {
    K.roots = root_system_identify({congruence(P.gram, K.complement)});
  } catch (const std::exception& e) {
    if (K.witness.empty()) K.witness = e.what();
    return K;
  }
  std::string want = "E" + std::to_string(K.complement.size());
  K.pass = K.symmetric && K.radical_is_p && K.orthogonal && K.roots.type == want;
  if (!K.pass && K.witness.empty()) K.witness = "identified " + K.roots.type + ", expected " + want;
  return K;
}

KuznetsovBasis kuznetsov_basis(int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("degree must be 1, 2 or 3");
  KuznetsovBasis kb;
  kb.d = d;
  int ell = 9 - d;
  Pseudolattice P = del_pezzo_gram(ell);
  std::size_t n = static_cast<std::size_t>(ell) + 3;
  QMat G = to_q(P.gram);
  auto chi = [&](const QVec& u, const QVec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (G[i][j] != 0) s += u[i] * G[i][j] * v[j];
    return s;
  };
  IMat S = serre(P);
  NeronSeveri ns = neron_severi(P);
  QVec p = to_q(IMat{ns.p})[0];
  QVec e0(n, 0);
  e0[0] = 1;
  QVec k0(n, 0);
  for (std::size_t i = 0; i < n; ++i) k0[i] = q_of(S[i][0]) - e0[i];
  Rational t = chi(k0, k0) / 2 - chi(e0, k0);
  QVec k = k0;
  for (std::size_t i = 0; i < n; ++i) k[i] += t * p[i];
  // k-perp inside NS
  IMat row(1, IVec(ns.lift.size()));
  {
    QVec r;
    Integer den = 1;
    for (auto& v : ns.lift) {
      r.push_back(chi(to_q(IMat{v})[0], k));
      den = lcm(den, r.back().get_den());
    }
    for (std::size_t j = 0; j < r.size(); ++j) {
      Rational x = r[j] * Rational(den);
      row[0][j] = x.get_num().get_si();
    }
  }
  auto perp = integer_kernel(row);
  IMat perp_gram = congruence(ns.lattice.gram, perp);
  auto rep = root_system_identify({perp_gram});
  kb.type = rep.type;
  kb.cartan = rep.cartan;
  kb.basis.push_back(e0);
  kb.basis.push_back(k);
  for (auto& sr : rep.simple_roots) {
    IVec nsc(ns.lift.size(), 0);
    for (std::size_t j = 0; j < perp.size(); ++j)
      for (std::size_t i = 0; i < nsc.size(); ++i) nsc[i] += sr[j] * perp[j][i];
    IVec amb(n, 0);
    for (std::size_t j = 0; j < ns.lift.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) amb[i] += nsc[j] * ns.lift[j][i];
    QVec beta = to_q(IMat{amb})[0];
    if (rep.sign == -1)
      for (auto& x : beta) x = -x;
    Rational c = chi(e0, beta);
    for (std::size_t i = 0; i < n; ++i) beta[i] -= c * p[i];
    kb.basis.push_back(beta);
  }
  kb.basis.push_back(p);
  std::size_t m = kb.basis.size();
  kb.gram.assign(m, QVec(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) kb.gram[i][j] = chi(kb.basis[i], kb.basis[j]);
  kb.expected.assign(m, QVec(m, 0));
  kb.expected[0][0] = 1;
  kb.expected[0][1] = Rational(-d, 2);
  kb.expected[1][0] = Rational(d, 2);
  kb.expected[1][1] = -d;
  kb.expected[0][m - 1] = 1;
  kb.expected[m - 1][0] = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(ell); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(ell); ++j) kb.expected[2 + i][2 + j] = q_of(kb.cartan[i][j]);
  for (auto& r : kb.expected)
    for (auto& x : r) x.canonicalize();
  for (auto& r : kb.gram)
    for (auto& x : r) x.canonicalize();
  kb.matches = kb.gram == kb.expected && kb.type == "E" + std::to_string(ell);
  return kb;
}

SplittingReport rational_splitting(const Pseudolattice& P, const ChargeMap& c) {
  SplittingReport r;
  KernelDecomposition K;
  try {
    K = kernel_decomposition(P, c);
  } catch (const std::exception& e) {
    r.witness = std::string("not surface-like: ") + e.what();
    return r;
  }
  if (!K.p_in_kernel || !K.symmetric || !K.radical_is_p) {
    r.witness = "not surface-like: " + K.witness;
    return r;
  }
  std::size_t n = static_cast<std::size_t>(P.rank());
  QMat EG;
  for (auto& e : K.complement) {
    QVec row(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) row[j] += q_of(e[i] * P.gram[i][j]);
    EG.push_back(row);
  }
  auto F = nullspace_q(EG);
  r.complement_dim = static_cast<int>(F.size());
  QVec p = to_q(IMat{K.p})[0];
  QMat withp = F;
  withp.push_back(p);
  r.contains_p = rank_q(withp) == static_cast<int>(F.size());
  QMat ch;
  for (auto& f : F) {
    Rational a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a += q_of(c.rows[0][i]) * f[i];
      b += q_of(c.rows[1][i]) * f[i];
    }
    ch.push_back({a, b});
  }
  r.charge_rank = rank_q(ch);
  QMat all = F;
  for (auto& v : K.kernel) all.push_back(to_q(IMat{v})[0]);
  r.spans = rank_q(all) == static_cast<int>(n);
  r.block_diagonal = true;
  for (std::size_t a = 0; a < F.size() && r.block_diagonal; ++a)
    for (std::size_t b = 0; b < K.complement.size(); ++b) {
      Rational x = 0, y = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          x += F[a][i] * q_of(P.gram[i][j] * K.complement[b][j]);
          y += q_of(K.complement[b][i] * P.gram[i][j]) * F[a][j];
        }
      if (x != 0 || y != 0) {
        r.block_diagonal = false;
        r.witness = "cross pairing nonzero for complement vector " + std::to_string(a) + " and kernel vector " +
                    std::to_string(b);
        break;
      }
    }
  r.pass = r.complement_dim == 3 && r.contains_p && r.charge_rank == 2 && r.spans && r.block_diagonal;
  if (!r.pass && r.witness.empty()) r.witness = "dimension/charge/span check failed";
  return r;
}

}  // namespace dpm
