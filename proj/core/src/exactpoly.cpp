#include "dpm/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace dpm {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  auto check_int = [&](const std::string& u, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < u.size() && (u[i] == '-' || u[i] == '+')) ++i;
    if (i == u.size()) throw std::invalid_argument("bad rational: " + s);
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i])))
        throw std::invalid_argument("bad rational: " + s);
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(const Rational& c, char var) {
  UniPoly p(var);
  p.set(0, c);
  return p;
}

UniPoly UniPoly::monomial(const Rational& c, int e, char var) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  UniPoly p(var);
  p.set(e, c);
  return p;
}

UniPoly UniPoly::from_dense(const std::vector<Rational>& coeffs, char var) {
  UniPoly p(var);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.set(static_cast<int>(k), coeffs[k]);
  return p;
}

Rational UniPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational UniPoly::lead() const { return c_.empty() ? Rational(0) : c_.rbegin()->second; }

void UniPoly::set(int e, const Rational& v) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (v == 0)
    c_.erase(e);
  else
    c_[e] = v;
}

void UniPoly::add_to(int e, const Rational& v) {
  if (v == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    set(e, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

UniPoly UniPoly::with_var(char v) const {
  UniPoly p = *this;
  p.var_ = v;
  return p;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  int e = degree();
  if (e < 0) return acc;
  for (int k = e; k >= 0; --k) {
    acc *= x;
    acc += coeff(k);
  }
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * x + coeff(k).get_d();
  return acc;
}

std::vector<Rational> UniPoly::dense() const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(degree() + 1, 0)));
  for (auto& [e, v] : c_) out[static_cast<std::size_t>(e)] = v;
  return out;
}

static char join_var(const UniPoly& p, const UniPoly& q) {
  if (p.is_constant()) return q.var();
  if (q.is_constant()) return p.var();
  if (p.var() != q.var()) throw std::invalid_argument("variable mismatch");
  return p.var();
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
  UniPoly r = p.with_var(join_var(p, q));
  for (auto& [e, v] : q.terms()) r.add_to(e, v);
  return r;
}

UniPoly operator-(const UniPoly& p) {
  UniPoly r(p.var());
  for (auto& [e, v] : p.terms()) r.set(e, -v);
  return r;
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  UniPoly r(join_var(p, q));
  for (auto& [e1, v1] : p.terms())
    for (auto& [e2, v2] : q.terms()) r.add_to(e1 + e2, v1 * v2);
  return r;
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  UniPoly r(p.var());
  if (c == 0) return r;
  for (auto& [e, v] : p.terms()) r.set(e, c * v);
  return r;
}

UniPoly pow(const UniPoly& p, unsigned k) {
  UniPoly r = UniPoly::constant(1, p.var());
  UniPoly b = p;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

UniPoly derivative(const UniPoly& p) {
  UniPoly r(p.var());
  for (auto& [e, v] : p.terms())
    if (e > 0) r.set(e - 1, v * e);
  return r;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly r(q.var());
  for (int k = p.degree(); k >= 0; --k) r = r * q + UniPoly::constant(p.coeff(k), q.var());
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  char v = join_var(p, q);
  UniPoly quot(v), rem = p.with_var(v);
  int dq = q.degree();
  Rational lq = q.lead();
  while (!rem.is_zero() && rem.degree() >= dq) {
    int e = rem.degree() - dq;
    Rational c = rem.lead() / lq;
    quot.set(e, c);
    for (auto& [eq, vq] : q.terms()) rem.add_to(eq + e, -c * vq);
  }
  return {quot, rem};
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  Rational l = p.lead();
  Rational inv = 1 / l;
  return inv * p;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return monic(a);
}

unsigned valuation_at(const UniPoly& p, const Rational& c) {
  if (p.is_zero()) throw std::domain_error("valuation of zero polynomial");
  UniPoly lin = UniPoly::variable(p.var()) - UniPoly::constant(c, p.var());
  unsigned k = 0;
  UniPoly cur = p;
  for (;;) {
    auto [qq, rr] = divmod(cur, lin);
    if (!rr.is_zero()) return k;
    cur = qq;
    ++k;
  }
}

std::vector<std::pair<UniPoly, int>> squarefree_factorization(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree factorization of zero");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = monic(p);
  if (f.degree() == 0) return out;
  UniPoly fp = derivative(f);
  UniPoly a = gcd(f, fp);
  UniPoly b = divmod(f, a).first;
  UniPoly c = divmod(fp, a).first;
  UniPoly d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

namespace {

Integer rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (n % p == 0) {
      out[Integer(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out[n]++;
    return;
  }
  Integer d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, int> fac;
  factor_into(n, fac);
  std::vector<Integer> ds{1};
  for (auto& [p, m] : fac) {
    std::size_t cur = ds.size();
    Integer pk = 1;
    for (int k = 1; k <= m; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// integer coefficients, content 1
std::vector<Integer> primitive_integer(const UniPoly& p) {
  Integer l = 1;
  for (auto& [e, v] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> out(static_cast<std::size_t>(p.degree() + 1), 0);
  Integer g = 0;
  for (auto& [e, v] : p.terms()) {
    Rational s = v * Rational(l);
    out[static_cast<std::size_t>(e)] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

void roots_of_squarefree(const UniPoly& f, std::set<Rational>& out) {
  if (f.degree() <= 0) return;
  UniPoly g = f;
  unsigned v = 0;
  while (g.coeff(0) == 0) {
    g = divmod(g, UniPoly::variable(g.var())).first;
    ++v;
  }
  if (v > 0) out.insert(Rational(0));
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    Rational r = -g.coeff(0) / g.coeff(1);
    out.insert(r);
    return;
  }
  auto z = primitive_integer(g);
  auto dp = divisors(z.front());
  auto dq = divisors(z.back());
  for (auto& q : dq)
    for (auto& pnum : dp)
      for (int sgn : {1, -1}) {
        Rational r(Integer(pnum * sgn), q);
        r.canonicalize();
        if (g.eval(r) == 0) out.insert(r);
      }
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of zero polynomial");
  std::set<Rational> out;
  for (auto& [f, m] : squarefree_factorization(p)) roots_of_squarefree(f, out);
  return {out.begin(), out.end()};
}

UniPoly disc_cubic(const UniPoly& a, const UniPoly& b) {
  return Rational(4) * pow(a, 3) + Rational(27) * pow(b, 2);
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::term(const Rational& c, int el, int ex) {
  BiPoly p;
  p.add_to(el, ex, c);
  return p;
}

BiPoly BiPoly::from_lambda(const UniPoly& p, int ex) {
  BiPoly r;
  for (auto& [e, v] : p.terms()) r.add_to(e, ex, v);
  return r;
}

Rational BiPoly::coeff(int el, int ex) const {
  auto it = c_.find({el, ex});
  return it == c_.end() ? Rational(0) : it->second;
}

void BiPoly::add_to(int el, int ex, const Rational& v) {
  if (v == 0) return;
  if (el < 0 || ex < 0) throw std::invalid_argument("negative exponent in BiPoly");
  auto key = std::make_pair(el, ex);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

int BiPoly::degree_x() const {
  int d = -1;
  for (auto& [k, v] : c_) d = std::max(d, k.second);
  return d;
}

UniPoly BiPoly::coeff_x(int k) const {
  UniPoly r('l');
  for (auto& [key, v] : c_)
    if (key.second == k) r.set(key.first, v);
  return r;
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
  BiPoly r = p;
  for (auto& [k, v] : q.terms()) r.add_to(k.first, k.second, v);
  return r;
}

BiPoly operator-(const BiPoly& p, const BiPoly& q) { return p + Rational(-1) * q; }

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  BiPoly r;
  for (auto& [k1, v1] : p.terms())
    for (auto& [k2, v2] : q.terms()) r.add_to(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return r;
}

BiPoly operator*(const Rational& c, const BiPoly& p) {
  BiPoly r;
  for (auto& [k, v] : p.terms()) r.add_to(k.first, k.second, c * v);
  return r;
}

BiPoly pow(const BiPoly& p, unsigned k) {
  BiPoly r = BiPoly::term(1, 0, 0);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

BiPoly divide_x_power(const BiPoly& p, int k) {
  BiPoly r;
  for (auto& [key, v] : p.terms()) {
    if (key.second < k) throw std::domain_error("not divisible by x power");
    r.add_to(key.first, key.second - k, v);
  }
  return r;
}

BiPoly disc_quadratic_in_y(const PolyInY& q) {
  int top = -1;
  for (auto& [e, c] : q)
    if (!c.is_zero()) {
      if (e < 0) throw std::invalid_argument("negative y exponent");
      top = std::max(top, e);
    }
  if (top != 2) throw std::invalid_argument("polynomial is not quadratic in y");
  auto get = [&](int e) {
    auto it = q.find(e);
    return it == q.end() ? BiPoly{} : it->second;
  };
  BiPoly A = get(2), B = get(1), C = get(0);
  return B * B - Rational(4) * (A * C);
}

DepressedCubic depress_cubic(const UniPoly& A, const UniPoly& B, const UniPoly& C,
                             const UniPoly& D) {
  if (A.is_zero()) throw std::invalid_argument("leading coefficient is zero");
  // (Ay)^2 = (Ax)^3 + B(Ax)^2 + AC(Ax) + A^2 D, then Ax = X - B/3.
  UniPoly a = A * C - Rational(1, 3) * (B * B);
  UniPoly b = A * A * D - Rational(1, 3) * (A * B * C) + Rational(2, 27) * pow(B, 3);
  return {a, b};
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_to(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::vector<int> exps) {
  LaurentPoly p(static_cast<int>(exps.size()));
  p.add_to(exps, c);
  return p;
}

Rational LaurentPoly::coeff(const std::vector<int>& e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const {
  return coeff(std::vector<int>(static_cast<std::size_t>(n_), 0));
}

void LaurentPoly::add_to(const std::vector<int>& e, const Rational& v) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("variable count mismatch");
  if (v == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

int LaurentPoly::total_degree_span() const {
  int lo = 0, hi = 0;
  bool first = true;
  for (auto& [e, v] : c_) {
    int s = 0;
    for (int x : e) s += x;
    if (first) lo = hi = s, first = false;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("variable count mismatch");
  LaurentPoly r = p;
  for (auto& [e, v] : q.terms()) r.add_to(e, v);
  return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  LaurentPoly r(p.nvars());
  for (auto& [e, v] : p.terms()) r.add_to(e, c * v);
  return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + Rational(-1) * q; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("variable count mismatch");
  LaurentPoly r(p.nvars());
  std::vector<int> e(static_cast<std::size_t>(p.nvars()));
  for (auto& [e1, v1] : p.terms())
    for (auto& [e2, v2] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_to(e, v1 * v2);
    }
  return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly r = LaurentPoly::constant(p.nvars(), 1);
  LaurentPoly b = p;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

LaurentPoly substitute_monomial(const LaurentPoly& p, const std::vector<std::vector<int>>& M) {
  int n = p.nvars();
  if (static_cast<int>(M.size()) != n) throw std::invalid_argument("substitution size mismatch");
  LaurentPoly r(n);
  for (auto& [e, v] : p.terms()) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f[static_cast<std::size_t>(i)] += M[i][j] * e[static_cast<std::size_t>(j)];
    r.add_to(f, v);
  }
  return r;
}

}  // namespace dpm
