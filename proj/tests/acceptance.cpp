// One PASS/FAIL line per criterion. Exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "dpm/interfam.hpp"
#include "dpm/periods.hpp"
#include "dpm/pseudolattice.hpp"
#include "dpm/rootlattice.hpp"
#include "dpm/vancycles.hpp"
#include "dpm/weierstrass.hpp"
#include "oracles.hpp"

using namespace dpm;

namespace {

constexpr double kResidualTol = 1e-6;
constexpr double kAdditivityTol = 1e-8;
constexpr double kTrackSeparation = 1e-3;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(dt < budget_s, "over time budget");
  if (!o.pass) ++failures;
  std::printf("%s %2d %-22s %8.3fs / %gs%s%s\n", o.pass ? "PASS" : "FAIL", id, name, dt, budget_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

Rational half(long k) {
  Rational q(k, 2);
  q.canonicalize();
  return q;
}

UniPoly L(const Rational& c, int e) { return UniPoly::monomial(c, e, 'l'); }

WeierstrassForm known_form(int d) {
  switch (d) {
    case 1: return {L(Rational(-1, 3), 4), L(Rational(2, 27), 6) + L(-64, 5)};
    case 2: return {L(Rational(-1, 3), 4) + L(16, 3), L(Rational(2, 27), 6) + L(Rational(-16, 3), 5)};
    default:
      return {L(Rational(-1, 3), 4) + L(8, 3), L(Rational(2, 27), 6) + L(Rational(-8, 3), 5) + L(16, 4)};
  }
}

BiPoly known_y2(int d) {
  BiPoly p = BiPoly::term(-4, 2, 3) + BiPoly::term(1, 2, 2);
  if (d == 1) return p + BiPoly::term(-4, 1, 0);
  if (d == 2) return p + BiPoly::term(-4, 1, 1);
  return p + BiPoly::term(-2, 1, 1) + BiPoly::term(1, 0, 0);
}

std::vector<HomologyClass> row(std::initializer_list<const char*> s) {
  std::vector<HomologyClass> out;
  for (auto* x : s) out.push_back(HomologyClass::parse(x));
  return out;
}

std::vector<HomologyClass> known_classes(int d) {
  if (d == 3) return row({"a+b", "b", "a", "b", "a", "b", "a", "b", "a"});
  if (d == 2) return row({"a+b", "a", "b", "a", "a", "a-b", "b", "b", "a", "b"});
  return row({"a+b", "a", "b", "a", "b", "a", "b", "a", "b", "a", "b"});
}

std::vector<HomologyClass> known_ghs(int ell) {
  HomologyClass A{1, 0}, B{0, 1}, AB{-1, -1};
  std::vector<HomologyClass> block = ell == 7 ? std::vector<HomologyClass>{A, B, AB} : std::vector<HomologyClass>{A, AB};
  int times = ell == 8 ? 5 : (ell == 7 ? 3 : 4);
  std::vector<HomologyClass> out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), block.begin(), block.end());
  return out;
}

bool same_up_to_sign(const std::vector<HomologyClass>& u, const std::vector<HomologyClass>& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].sign_normalized() != v[i].sign_normalized()) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "fiber tables", 1, [](Outcome& o) {
    const char* zero[] = {"II*", "III*", "IV*"};
    const char* inf[] = {"I1", "I2", "I3"};
    const long l0[] = {432, 64, 27};
    for (int d = 1; d <= 3; ++d) {
      auto fc = fiber_configuration(catalog(d));
      std::string tag = "d=" + std::to_string(d);
      o.require(lambda0(d) == l0[d - 1], tag + " lambda0");
      o.require(fc.finite_fibers.size() == 2, tag + " finite places");
      auto z = fc.at(0), l = fc.at(Rational(l0[d - 1]));
      o.require(z && z->name() == zero[d - 1], tag + " fiber at 0");
      o.require(l && l->name() == "I1", tag + " fiber at lambda0");
      o.require(fc.infinity_fiber.name() == inf[d - 1], tag + " fiber at infinity");
    }
  });

  criterion(2, "HV derivation", 1, [](Outcome& o) {
    for (int d = 1; d <= 3; ++d) {
      auto h = hv_derivation(d);
      o.require(h.y2_rhs == known_y2(d), "y^2 form d=" + std::to_string(d));
      o.require(h.form == known_form(d) && catalog(d) == known_form(d), "Weierstrass d=" + std::to_string(d));
    }
  });

  criterion(3, "perturbed fibers", 1, [](Outcome& o) {
    for (int d = 1; d <= 3; ++d) {
      int ell = 9 - d;
      auto W = catalog(d, CatalogVariant::Perturbed, Rational(1, 100));
      auto D = W.discriminant();
      std::string tag = "d=" + std::to_string(d);
      o.require(D.degree() == ell + 3, tag + " degree");
      o.require(gcd(D, derivative(D)).degree() == 0, tag + " separable");
      auto fc = fiber_configuration(W);
      o.require(fc.finite_fiber_count() == ell + 3, tag + " count");
      for (auto& e : fc.finite_fibers) o.require(e.type.name() == "I1", tag + " I1");
      o.require(fc.infinity_fiber == KodairaType{Kodaira::I, d}, tag + " I_d at infinity");
    }
  });

  criterion(4, "mirror property", 5, [](Outcome& o) {
    const long alpha[] = {60, 12, 6};
    for (int d = 1; d <= 3; ++d) {
      auto w = fano_data(d);
      Rational a;
      auto q = oracle::regularized_quantum(w.a[2], w.a[3], w.d1, 12, a);
      auto m = mirror_check(d, 12);
      std::string tag = "d=" + std::to_string(d);
      o.require(m.pass, tag + " series differ");
      o.require(m.alpha == a && a == alpha[d - 1], tag + " alpha");
      o.require(m.regularized_quantum.c == q, tag + " quantum oracle");
      o.require(m.classical.c == oracle::classical_closed_form(w.a[2], w.a[3], w.d1, a, 12), tag + " classical oracle");
    }
  });

  criterion(5, "vanishing cycles", 30, [](Outcome& o) {
    for (int d = 1; d <= 3; ++d) {
      auto v = vanishing_classes(d);
      std::string tag = "d=" + std::to_string(d);
      o.require(same_up_to_sign(v.classes, known_classes(d)), tag + " classes");
      for (auto r : v.residuals) o.require(r < kResidualTol, tag + " residual");
      if (d == 3) o.require(sign_normalize(seifert_gram(v.classes), oracle::seifert_d3()).has_value(), "Seifert Gram");
    }
  });

  criterion(6, "theorem", 1, [](Outcome& o) {
    for (int d = 1; d <= 3; ++d) {
      auto r = verify_theorem(d);
      std::string tag = "d=" + std::to_string(d);
      o.require(sign_normalize(r.gram, oracle::euler_block(9 - d)).has_value(), tag + " Gram");
      o.require(same_up_to_sign(r.boundary, target_row(9 - d)), tag + " boundary");
      if (d == 3) {
        auto rows = beta3_rows();
        bool ok = r.intermediate.size() == rows.size();
        for (std::size_t i = 0; ok && i < rows.size(); ++i) ok = same_up_to_sign(r.intermediate[i], rows[i]);
        o.require(ok, "intermediate rows");
      }
      o.require(r.pass, tag + " " + r.first_divergence);
    }
  });

  criterion(7, "word identities", 1, [](Outcome& o) {
    auto m2 = from_boundaries(extended_classes(2));
    o.require(word_identity(m2.lattice, m2.basis, MutationWord::parse("R8 R7 R6 R5 R4 R3 R2 R1 R8 R7 L4"),
                            MutationWord::parse("R7 R6 L3 R8 R7 R6 R5 R4 R3 R2 R1")),
              "3 -> 2 identity");
    auto m1 = from_boundaries(extended_classes(1));
    o.require(word_identity(m1.lattice, m1.basis, MutationWord::parse("R9 R8 R7 R6 R5 R4 L6"),
                            MutationWord::parse("L5 R9 R8 R7 R6 R5 R4")),
              "2 -> 1 identity");
  });

  criterion(8, "monodromy", 1, [](Outcome& o) {
    for (int d = 1; d <= 3; ++d) {
      auto ic = infinity_cycle(known_classes(d), d);
      o.require(ic.c.sign_normalized() == HomologyClass{0, 1}, "d=" + std::to_string(d));
    }
  });

  criterion(9, "junction decomposition", 10, [](Outcome& o) {
    const std::size_t roots[] = {72, 126, 240};
    for (int d = 1; d <= 3; ++d) {
      int ell = 9 - d;
      std::string tag = "d=" + std::to_string(d);
      auto m = from_boundaries(known_classes(d));
      auto k = kernel_decomposition(m.lattice, m.charge);
      o.require(k.pass && k.roots.type == "E" + std::to_string(ell), tag + " kernel");
      o.require(k.roots.abs_det == 9 - ell, tag + " det");
      o.require(k.roots.root_count == roots[ell - 6], tag + " root count");
      o.require(dynkin_isomorphic(k.roots.cartan, cartan_matrix("E" + std::to_string(ell))), tag + " Dynkin");
      auto h = hyperbolic_model(ell);
      o.require(h.perp.root_count == static_cast<std::size_t>(oracle::brute_root_count(ell)), tag + " box count");
      auto kb = kuznetsov_basis(d);
      o.require(kb.matches && kb.gram[0][1] == half(-d) && kb.gram[1][0] == half(d), tag + " Kuznetsov");
      std::vector<IVec> simple;
      for (auto& s : h.perp.simple_roots) {
        IVec amb(h.ambient.gram.size(), 0);
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t c = 0; c < amb.size(); ++c) amb[c] += s[i] * h.perp_basis[i][c];
        simple.push_back(amb);
      }
      auto w = fundamental_weights(h.ambient, simple);
      bool dual = w.size() == simple.size();
      for (std::size_t i = 0; dual && i < w.size(); ++i)
        for (std::size_t j = 0; j < simple.size(); ++j)
          dual = dual && bilinear(h.ambient.gram, w[i], simple[j]) == (i == j ? 1 : 0);
      o.require(dual, tag + " weights");
    }
  });

  criterion(10, "GHS sequences", 1, [](Outcome& o) {
    for (int ell = 6; ell <= 8; ++ell)
      o.require(same_up_to_sign(ghs_sequences(ell), known_ghs(ell)), "E" + std::to_string(ell));
  });

  criterion(11, "interpolation", 60, [](Outcome& o) {
    struct Case {
      int from, start, end;
    } cases[] = {{3, 9, 10}, {2, 10, 11}};
    for (auto c : cases) {
      std::string tag = std::to_string(c.from) + "->" + std::to_string(c.from - 1);
      auto F = FamilySpec::between(c.from, c.from - 1);
      auto T = sweep(F);
      o.require(T.track_count() == 12, tag + " tracks");
      o.require(T.finite_count(0) == c.start && T.finite_count(T.s.size() - 1) == c.end, tag + " endpoint counts");
      o.require(endpoint_finite_count(F, 0) == c.start && endpoint_finite_count(F, 1) == c.end, tag + " exact counts");
      o.require(T.min_separation() > kTrackSeparation, tag + " separation");
      o.require(render_svg(T) == render_svg(sweep(F)), tag + " svg determinism");
      o.require(check_candidate(F, finite_mutation_word(c.from)).identity, tag + " word validation");
      try {
        auto w = transposition_word(T);
        if (!check_candidate(F, w.word).identity)
          std::printf("     warning: %s transposition candidate \"%s\" does not validate\n", tag.c_str(), w.word.str().c_str());
      } catch (const std::exception& e) {
        std::printf("     warning: %s transposition heuristic: %s\n", tag.c_str(), e.what());
      }
    }
  });

  criterion(12, "property suites", 30, [](Outcome& o) {
    std::mt19937 rng(12);
    auto P = del_pezzo_gram(6);
    auto B0 = standard_basis(P.rank());
    std::uniform_int_distribution<int> side(0, 1), slot(0, P.rank() - 2), len(1, 6);
    for (int t = 0; t < 200; ++t) {
      MutationWord w;
      int n = len(rng);
      for (int i = 0; i < n; ++i) w.letters.push_back({side(rng) ? 'L' : 'R', slot(rng)});
      auto B = mutate(P, B0, w);
      o.require(is_exceptional(P, B), "exceptionality");
      o.require(mutate(P, B, w.inverse()) == B0, "inverse");
    }
    std::vector<Pseudolattice> all;
    for (int ell = 0; ell <= 8; ++ell) all.push_back(del_pezzo_gram(ell));
    for (int d = 1; d <= 3; ++d) {
      all.push_back(from_boundaries(extended_classes(d)).lattice);
      all.push_back(from_boundaries(known_classes(d)).lattice);
    }
    for (auto& Q : all) {
      IMat S = serre(Q);
      auto e = standard_basis(Q.rank());
      for (auto& u : e)
        for (auto& v : e) o.require(Q.pair(u, v) == Q.pair(v, matvec(S, u)), "Serre");
    }
    std::uniform_int_distribution<int> u(-6, 6);
    for (int t = 0; t < 200; ++t) {
      HomologyClass l{u(rng), u(rng)}, x{u(rng), u(rng)}, y{u(rng), u(rng)};
      if (!l.primitive()) continue;
      auto T = dehn_twist(l);
      o.require(T.det() == 1 && h1_pair(T.apply(x), T.apply(y)) == h1_pair(x, y), "symplectic");
    }
    std::uniform_real_distribution<double> r(-2, 2);
    CPoly cubic({Complex(0.3, 0.1), Complex(-1), Complex(0), Complex(1)});
    for (int t = 0; t < 20; ++t) {
      Complex a(r(rng), r(rng)), m(r(rng), r(rng)), b(r(rng), r(rng));
      auto whole = elliptic_integral(cubic, PathPolyline({a, m, b}));
      auto first = elliptic_integral(cubic, PathPolyline({a, m}));
      auto second = elliptic_integral(cubic, PathPolyline({m, b}), first.y_end);
      o.require(std::abs(whole.value - first.value - second.value) < kAdditivityTol, "additivity");
    }
    std::normal_distribution<double> g(0, 1);
    for (int t = 0; t < 50; ++t) {
      std::vector<Complex> c;
      for (int k = 0; k <= 2 + t % 11; ++k) c.push_back(Complex(g(rng), g(rng)));
      CPoly p(c);
      auto rr = all_roots(p);
      for (auto& z : rr.roots) o.require(scaled_residual(p, z) < 1e-10, "root residual");
    }
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
