#include "dpm/intmat.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace dpm {

IMat identity_matrix(int n) {
  IMat I(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IMat transpose(const IMat& A) {
  if (A.empty()) return {};
  IMat T(A[0].size(), IVec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  return T;
}

IMat matmul(const IMat& A, const IMat& B) {
  if (A.empty() || B.empty()) return {};
  if (A[0].size() != B.size()) throw std::invalid_argument("matmul shape");
  IMat C(A.size(), IVec(B[0].size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < B.size(); ++k)
      if (A[i][k])
        for (std::size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
  return C;
}

IVec matvec(const IMat& A, const IVec& v) {
  IVec r(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != v.size()) throw std::invalid_argument("matvec shape");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += A[i][j] * v[j];
  }
  return r;
}

long long bilinear(const IMat& G, const IVec& u, const IVec& v) {
  long long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * G[i][j] * v[j];
  }
  return s;
}

IMat congruence(const IMat& G, const std::vector<IVec>& basis) {
  IMat R(basis.size(), IVec(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) R[i][j] = bilinear(G, basis[i], basis[j]);
  return R;
}

static long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long content(const IVec& v) {
  long long g = 0;
  for (auto x : v) g = gcd_ll(g, x);
  return g;
}

IVec primitive_part(const IVec& v) {
  long long g = content(v);
  if (g == 0) return v;
  IVec r = v;
  for (auto& x : r) x /= g;
  return r;
}

IVec sign_fixed(const IVec& v) {
  for (auto x : v) {
    if (x > 0) return v;
    if (x < 0) {
      IVec r = v;
      for (auto& y : r) y = -y;
      return r;
    }
  }
  return v;
}

ZMat to_z(const IMat& A) {
  ZMat Z(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (auto x : A[i]) Z[i].emplace_back(static_cast<long>(x));
  return Z;
}

IMat to_i(const ZMat& A) {
  IMat R(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (auto& x : A[i]) {
      if (!x.fits_slong_p()) throw std::overflow_error("integer entry out of range");
      R[i].push_back(x.get_si());
    }
  return R;
}

QMat to_q(const IMat& A) {
  QMat Q(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (auto x : A[i]) Q[i].emplace_back(static_cast<long>(x));
  return Q;
}

Integer determinant(const ZMat& A0) {
  std::size_t n = A0.size();
  if (n == 0) return 1;
  ZMat A = A0;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && A[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(A[k], A[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]);
        mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

long long determinant(const IMat& A) {
  Integer d = determinant(to_z(A));
  if (!d.fits_slong_p()) throw std::overflow_error("determinant out of range");
  return d.get_si();
}

QMat inverse(const QMat& A0) {
  std::size_t n = A0.size();
  QMat A = A0;
  QMat I(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(A[c], A[p]);
    std::swap(I[c], I[p]);
    Rational inv = 1 / A[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      A[c][j] *= inv;
      I[c][j] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        A[r][j] -= f * A[c][j];
        I[r][j] -= f * I[c][j];
      }
    }
  }
  return I;
}

IMat inverse_unimodular(const IMat& A) {
  long long d = determinant(A);
  if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular");
  QMat inv = inverse(to_q(A));
  IMat R(inv.size(), IVec(inv.size()));
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = 0; j < inv.size(); ++j) {
      if (inv[i][j].get_den() != 1) throw std::logic_error("non-integral inverse");
      R[i][j] = inv[i][j].get_num().get_si();
    }
  return R;
}

namespace {

void col_combine(ZMat& M, std::size_t k, std::size_t j, const Integer& x, const Integer& y,
                 const Integer& u, const Integer& v) {
  // (col_k, col_j) <- (x col_k + y col_j, u col_k + v col_j)
  for (auto& row : M) {
    Integer a = row[k], b = row[j];
    row[k] = x * a + y * b;
    row[j] = u * a + v * b;
  }
}

void row_combine(ZMat& M, std::size_t k, std::size_t j, const Integer& x, const Integer& y,
                 const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < M[k].size(); ++c) {
    Integer a = M[k][c], b = M[j][c];
    M[k][c] = x * a + y * b;
    M[j][c] = u * a + v * b;
  }
}

ZMat zidentity(std::size_t n) {
  ZMat I(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

ColumnHNF hnf_columns(const ZMat& A) {
  ColumnHNF out;
  std::size_t m = A.size();
  std::size_t n = m ? A[0].size() : 0;
  out.H = A;
  out.U = zidentity(n);
  std::size_t k = 0;
  for (std::size_t r = 0; r < m && k < n; ++r) {
    for (std::size_t j = k + 1; j < n; ++j) {
      Integer b = out.H[r][j];
      if (b == 0) continue;
      Integer a = out.H[r][k];
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer u = -b / g, v = a / g;
      col_combine(out.H, k, j, x, y, u, v);
      col_combine(out.U, k, j, x, y, u, v);
    }
    if (out.H[r][k] == 0) continue;
    if (out.H[r][k] < 0) {
      for (auto& row : out.H) row[k] = -row[k];
      for (auto& row : out.U) row[k] = -row[k];
    }
    // reduce earlier pivot columns modulo this one
    for (std::size_t j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), out.H[r][j].get_mpz_t(), out.H[r][k].get_mpz_t());
      if (q == 0) continue;
      for (auto& row : out.H) row[j] -= q * row[k];
      for (auto& row : out.U) row[j] -= q * row[k];
    }
    ++k;
  }
  out.rank = static_cast<int>(k);
  return out;
}

SmithForm smith_normal_form(const ZMat& A) {
  SmithForm S;
  std::size_t m = A.size();
  std::size_t n = m ? A[0].size() : 0;
  S.D = A;
  S.L = zidentity(m);
  S.R = zidentity(n);
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    std::swap(S.D[i], S.D[k]);
    std::swap(S.L[i], S.L[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (auto& row : S.D) std::swap(row[j], row[k]);
    for (auto& row : S.R) std::swap(row[j], row[k]);
  };
  for (std::size_t t = 0; t < m && t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S.D[i][j] != 0 && (!found || abs(S.D[i][j]) < best)) {
            best = abs(S.D[i][j]);
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) return S;
      swap_rows(t, pi);
      swap_cols(t, pj);
      const Integer p = S.D[t][t];
      bool remainder = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), S.D[i][t].get_mpz_t(), p.get_mpz_t());
        if (q != 0) {
          for (std::size_t c = 0; c < n; ++c) S.D[i][c] -= q * S.D[t][c];
          for (std::size_t c = 0; c < m; ++c) S.L[i][c] -= q * S.L[t][c];
        }
        if (S.D[i][t] != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), S.D[t][j].get_mpz_t(), p.get_mpz_t());
        if (q != 0) {
          for (auto& row : S.D) row[j] -= q * row[t];
          for (auto& row : S.R) row[j] -= q * row[t];
        }
        if (S.D[t][j] != 0) remainder = true;
      }
      if (remainder) continue;
      // pivot must divide the trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S.D[i][j] % p != 0) {
            for (std::size_t c = 0; c < n; ++c) S.D[t][c] += S.D[i][c];
            for (std::size_t c = 0; c < m; ++c) S.L[t][c] += S.L[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S.D[t][t] < 0) {
      for (auto& x : S.D[t]) x = -x;
      for (auto& x : S.L[t]) x = -x;
    }
    S.diagonal.push_back(S.D[t][t]);
  }
  return S;
}

std::vector<IVec> integer_kernel(const IMat& M) {
  if (M.empty()) return {};
  std::size_t n = M[0].size();
  auto h = hnf_columns(to_z(M));
  std::vector<IVec> out;
  for (std::size_t j = static_cast<std::size_t>(h.rank); j < n; ++j) {
    IVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!h.U[i][j].fits_slong_p()) throw std::overflow_error("kernel entry out of range");
      v[i] = h.U[i][j].get_si();
    }
    out.push_back(v);
  }
  return out;
}

std::vector<IVec> lattice_basis(const std::vector<IVec>& gens, int n) {
  if (gens.empty()) return {};
  ZMat A(static_cast<std::size_t>(n), std::vector<Integer>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int i = 0; i < n; ++i) A[i][j] = static_cast<long>(gens[j][i]);
  auto h = hnf_columns(A);
  std::vector<IVec> out;
  for (int j = 0; j < h.rank; ++j) {
    IVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = h.H[i][j].get_si();
    out.push_back(v);
  }
  return out;
}

std::optional<IVec> solve_integer(const IMat& A, const IVec& b) {
  std::size_t m = A.size();
  std::size_t n = m ? A[0].size() : 0;
  auto h = hnf_columns(to_z(A));
  // H y = b with H in column echelon form
  std::vector<Integer> y(n, 0);
  std::vector<Integer> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = static_cast<long>(b[i]);
  std::size_t k = 0;
  for (std::size_t r = 0; r < m; ++r) {
    Integer acc = rhs[r];
    for (std::size_t j = 0; j < k; ++j) acc -= h.H[r][j] * y[j];
    if (k < static_cast<std::size_t>(h.rank) && h.H[r][k] != 0) {
      if (acc % h.H[r][k] != 0) return std::nullopt;
      y[k] = acc / h.H[r][k];
      ++k;
    } else if (acc != 0) {
      return std::nullopt;
    }
  }
  IVec x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += h.U[i][j] * y[j];
    if (!s.fits_slong_p()) throw std::overflow_error("solution out of range");
    x[i] = s.get_si();
  }
  return x;
}

std::vector<IVec> extend_to_basis(const IVec& c) {
  if (content(c) != 1) throw std::invalid_argument("vector is not primitive");
  std::size_t n = c.size();
  ZMat col(n, std::vector<Integer>(1));
  for (std::size_t i = 0; i < n; ++i) col[i][0] = static_cast<long>(c[i]);
  auto S = smith_normal_form(col);
  // L c R = e1 * d  =>  c = L^{-1} e1 (d R^{-1}) with d R^{-1} = +-1
  IMat L = to_i(S.L);
  IMat Linv = inverse_unimodular(L);
  std::vector<IVec> out;
  long long scale = S.D[0][0].get_si() * S.R[0][0].get_si();
  for (std::size_t j = 0; j < n; ++j) {
    IVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Linv[i][j];
    if (j == 0)
      for (auto& x : v) x *= scale;
    out.push_back(v);
  }
  if (out[0] != c) throw std::logic_error("basis extension mismatch");
  return out;
}

int rank_q(const QMat& A0) {
  QMat A = A0;
  std::size_t m = A.size();
  std::size_t n = m ? A[0].size() : 0;
  int r = 0;
  for (std::size_t c = 0; c < n && static_cast<std::size_t>(r) < m; ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < m && A[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == static_cast<std::size_t>(r) || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[static_cast<std::size_t>(r)][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

std::vector<QVec> nullspace_q(const QMat& A0) {
  QMat A = A0;
  std::size_t m = A.size();
  std::size_t n = m ? A[0].size() : 0;
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && A[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[r]);
    Rational inv = 1 / A[r][c];
    for (std::size_t j = 0; j < n; ++j) A[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (std::size_t j = 0; j < n; ++j) A[i][j] -= f * A[r][j];
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_piv(n, false);
  for (int c : pivcol) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<QVec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    QVec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[static_cast<std::size_t>(pivcol[i])] = -A[i][f];
    out.push_back(v);
  }
  return out;
}

std::optional<std::vector<int>> sign_normalize(const IMat& G, const IMat& T) {
  std::size_t n = G.size();
  if (T.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (G[i].size() != n || T[i].size() != n) return std::nullopt;
  auto check = [&](const std::vector<int>& d) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i] * d[j] * G[i][j] != T[i][j]) return false;
    return true;
  };
  // propagation along nonzero entries, starting from d_0 = +1
  std::vector<int> d(n, 0);
  bool ok = true;
  for (std::size_t s = 0; s < n && ok; ++s) {
    if (d[s]) continue;
    d[s] = 1;
    std::vector<std::size_t> stack{s};
    while (!stack.empty() && ok) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        long long g = G[i][j] ? G[i][j] : G[j][i];
        long long t = G[i][j] ? T[i][j] : T[j][i];
        if (g == 0) continue;
        if (std::llabs(g) != std::llabs(t)) {
          ok = false;
          break;
        }
        int want = d[i] * ((g == t) ? 1 : -1);
        if (d[j] == 0) {
          d[j] = want;
          stack.push_back(j);
        } else if (d[j] != want) {
          ok = false;
          break;
        }
      }
    }
  }
  if (ok && check(d)) return d;
  if (n <= 12) {
    for (unsigned mask = 0; mask < (1u << (n ? n - 1 : 0)); ++mask) {
      std::vector<int> e(n, 1);
      for (std::size_t i = 1; i < n; ++i) e[i] = (mask >> (i - 1)) & 1u ? -1 : 1;
      if (check(e)) return e;
    }
  }
  return std::nullopt;
}

}  // namespace dpm
