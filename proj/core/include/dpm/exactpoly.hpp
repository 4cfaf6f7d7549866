#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dpm {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& s);
// Always "num/den", denominator 1 included.
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Sparse univariate polynomial over Q. The variable tag is 'l' (lambda),
// 'm' (mu at infinity) or 'x'; constants are compatible with every tag.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}

  static UniPoly constant(const Rational& c, char var = 'l');
  static UniPoly monomial(const Rational& c, int e, char var = 'l');
  static UniPoly variable(char var = 'l') { return monomial(1, 1, var); }
  // coeffs[k] multiplies var^k
  static UniPoly from_dense(const std::vector<Rational>& coeffs, char var = 'l');

  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  Rational coeff(int e) const;
  Rational lead() const;
  void set(int e, const Rational& v);
  void add_to(int e, const Rational& v);
  const std::map<int, Rational>& terms() const { return c_; }
  char var() const { return var_; }
  UniPoly with_var(char v) const;

  Rational eval(const Rational& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  std::vector<Rational> dense() const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

 private:
  std::map<int, Rational> c_;
  char var_ = 'l';
};

UniPoly operator+(const UniPoly& p, const UniPoly& q);
UniPoly operator-(const UniPoly& p, const UniPoly& q);
UniPoly operator-(const UniPoly& p);
UniPoly operator*(const UniPoly& p, const UniPoly& q);
UniPoly operator*(const Rational& c, const UniPoly& p);
UniPoly pow(const UniPoly& p, unsigned k);
UniPoly derivative(const UniPoly& p);
// p(q(x))
UniPoly compose(const UniPoly& p, const UniPoly& q);
// p = quot*q + rem, deg rem < deg q
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& q);
UniPoly monic(const UniPoly& p);
UniPoly gcd(const UniPoly& p, const UniPoly& q);  // monic, gcd(0,0)=0

unsigned valuation_at(const UniPoly& p, const Rational& c);
// Yun. Factors are monic, non-constant, squarefree and pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_factorization(const UniPoly& p);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

// 4a^3 + 27b^2
UniPoly disc_cubic(const UniPoly& a, const UniPoly& b);

// Sparse polynomial in (lambda, x); key = (exp_lambda, exp_x).
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly term(const Rational& c, int el, int ex);
  static BiPoly from_lambda(const UniPoly& p, int ex = 0);

  bool is_zero() const { return c_.empty(); }
  Rational coeff(int el, int ex) const;
  void add_to(int el, int ex, const Rational& v);
  const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }
  int degree_x() const;
  // Coefficient of x^k as a polynomial in lambda.
  UniPoly coeff_x(int k) const;

  bool operator==(const BiPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

 private:
  std::map<std::pair<int, int>, Rational> c_;
};

BiPoly operator+(const BiPoly& p, const BiPoly& q);
BiPoly operator-(const BiPoly& p, const BiPoly& q);
BiPoly operator*(const BiPoly& p, const BiPoly& q);
BiPoly operator*(const Rational& c, const BiPoly& p);
BiPoly pow(const BiPoly& p, unsigned k);
// Exact division by x^k; throws if some term has x-degree < k.
BiPoly divide_x_power(const BiPoly& p, int k);

// Polynomial in y with BiPoly coefficients: y-degree -> coefficient.
using PolyInY = std::map<int, BiPoly>;

// B^2 - 4AC for q = A y^2 + B y + C.
BiPoly disc_quadratic_in_y(const PolyInY& q);

struct DepressedCubic {
  UniPoly a, b;
};
// y^2 = A x^3 + B x^2 + C x + D  ->  Y^2 = X^3 + a X + b with
// X = A x + B/3, Y = A y.
DepressedCubic depress_cubic(const UniPoly& A, const UniPoly& B, const UniPoly& C,
                             const UniPoly& D);

// Laurent polynomial in n variables, exponents may be negative.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : n_(nvars) {}
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(const Rational& c, std::vector<int> exps);

  int nvars() const { return n_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(const std::vector<int>& e) const;
  Rational constant_term() const;
  void add_to(const std::vector<int>& e, const Rational& v);
  const std::map<std::vector<int>, Rational>& terms() const { return c_; }
  int total_degree_span() const;

  bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

 private:
  int n_ = 0;
  std::map<std::vector<int>, Rational> c_;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const Rational& c, const LaurentPoly& p);
LaurentPoly pow(const LaurentPoly& p, unsigned k);
// Monomial substitution y^e -> y^(M e); M is n x n with integer entries.
LaurentPoly substitute_monomial(const LaurentPoly& p, const std::vector<std::vector<int>>& M);

}  // namespace dpm
