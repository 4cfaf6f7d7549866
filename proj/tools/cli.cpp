#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dpm/io.hpp"

namespace dpm::cli {

namespace {

using io::json;

struct Output {
  std::string text;
  int code = kPass;
};

void require_degree(int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("--d must be 1, 2 or 3");
}

void require_format(const RunConfig& c, std::initializer_list<const char*> ok) {
  for (auto* f : ok)
    if (c.format == f) return;
  throw std::invalid_argument("format '" + c.format + "' not available for " + c.command);
}

json header(const RunConfig& c, bool pass) {
  return {{"schema", "dpm/" + c.command + "/1"}, {"command", c.command}, {"pass", pass}};
}

Output finish(const RunConfig& c, json j, bool pass) {
  json h = header(c, pass);
  h.update(j);
  return {io::dump(h), pass ? kPass : kFail};
}

Output cmd_fibers(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json"});
  CatalogVariant v;
  if (c.variant == "exact")
    v = CatalogVariant::Exact;
  else if (c.variant == "perturbed")
    v = CatalogVariant::Perturbed;
  else
    throw std::invalid_argument("--variant must be exact or perturbed");
  auto W = catalog(c.d, v, c.eps);
  auto F = fiber_configuration(W);
  auto M = is_globally_minimal(W);
  bool pass = M.ok && F.euler_sum() == 12;
  json j{{"d", c.d}, {"variant", c.variant}, {"form", io::report(W)}, {"fibers", io::report(F)}, {"minimal", M.ok}};
  if (c.variant == "perturbed") j["epsilon"] = io::rational(c.eps);
  if (!M.ok) j["violation"] = M.violation;
  return finish(c, j, pass);
}

Output cmd_mirror(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json"});
  if (c.order < 1 || c.order > 40) throw std::invalid_argument("--order must lie in 1..40");
  auto m = mirror_check(c.d, c.order);
  return finish(c, {{"d", c.d}, {"order", c.order}, {"mirror", io::report(m)}}, m.pass);
}

Output cmd_critvals(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json", "csv"});
  auto W = catalog(c.d, CatalogVariant::Perturbed, c.eps);
  auto cv = critical_values_ordered(W, Complex(static_cast<Real>(to_double(lambda0(c.d)))));
  if (c.format == "csv") {
    std::ostringstream o;
    o << "index,re,im\n";
    o.precision(17);
    for (std::size_t i = 0; i < cv.size(); ++i) o << i << ',' << static_cast<double>(cv[i].real()) << ',' << static_cast<double>(cv[i].imag()) << '\n';
    return {o.str(), kPass};
  }
  json a = json::array();
  for (auto& z : cv) a.push_back(io::complex(z));
  bool pass = static_cast<int>(cv.size()) == W.discriminant().degree();
  return finish(c, {{"d", c.d}, {"epsilon", io::rational(c.eps)}, {"critical_values", a}}, pass);
}

Output cmd_cycles(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json", "svg"});
  VanishingOptions opt;
  opt.residual_tol = c.tol;
  auto v = vanishing_classes(c.d, c.eps, opt);
  if (c.format == "svg") return {render_cycles_svg(v), kPass};
  Real worst = 0;
  for (auto r : v.residuals) worst = std::max(worst, r);
  bool match = equal_up_to_sign(v.classes, reference_classes(c.d));
  bool pass = match && worst < c.tol;
  return finish(c, {{"d", c.d}, {"matches_reference", match}, {"cycles", io::report(v)}}, pass);
}

Output cmd_verify(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json"});
  auto r = verify_theorem(c.d);
  return finish(c, {{"d", c.d}, {"theorem", io::report(r)}, {"target", io::matrix(del_pezzo_gram(r.ell).gram)}}, r.pass);
}

Output cmd_junction(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json"});
  int ell = 9 - c.d;
  auto M = from_boundaries(reference_classes(c.d));
  auto K = kernel_decomposition(M.lattice, M.charge);
  auto S = rational_splitting(M.lattice, M.charge);
  auto kb = kuznetsov_basis(c.d);
  auto H = hyperbolic_model(ell);
  std::vector<IVec> simple;
  for (auto& r : H.perp.simple_roots) {
    IVec v(static_cast<std::size_t>(ell) + 1, 0);
    for (std::size_t j = 0; j < r.size(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += r[j] * H.perp_basis[j][i];
    simple.push_back(v);
  }
  auto w = fundamental_weights(H.ambient, simple);
  std::string want = "E" + std::to_string(ell);
  bool pass = K.pass && S.pass && kb.matches && H.perp.type == want && w.size() == simple.size();
  json wj = json::array();
  for (auto& x : w) wj.push_back(x);
  json sj = json::array();
  for (auto& x : simple) sj.push_back(x);
  return finish(c,
                {{"d", c.d},
                 {"ell", ell},
                 {"kernel", io::report(K)},
                 {"splitting", io::report(S)},
                 {"kuznetsov", io::report(kb)},
                 {"hyperbolic", {{"k", H.k}, {"k_square", H.k_square}, {"perp", io::report(H.perp)}, {"simple_roots", sj}}},
                 {"fundamental_weights", wj}},
                pass);
}

Output cmd_ghs(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json"});
  int ell = 9 - c.d;
  auto seq = ghs_sequences(ell);
  auto tgt = ghs_target(ell);
  bool pass = equal_up_to_sign(seq, tgt);
  return finish(c, {{"d", c.d}, {"ell", ell}, {"sequence", io::classes(seq)}, {"target", io::classes(tgt)}}, pass);
}

Output cmd_interpolate(const RunConfig& c) {
  if (c.d != 3 && c.d != 2) throw std::invalid_argument("interpolate runs from --d 3 or --d 2");
  require_format(c, {"json", "csv", "svg"});
  auto F = FamilySpec::between(c.d, c.d - 1, c.eps);
  SweepOptions opt;
  opt.threads = c.threads;
  auto T = sweep(F, opt);
  if (c.format == "csv") return {trajectories_csv(T), kPass};
  if (c.format == "svg") return {render_svg(T), kPass};
  int n0 = endpoint_finite_count(F, 0), n1 = endpoint_finite_count(F, 1);
  int f0 = fiber_configuration(F.from).finite_fiber_count(), f1 = fiber_configuration(F.to).finite_fiber_count();
  std::size_t last = T.points.size() - 1;
  bool pass = T.track_count() == 12 && T.finite_count(0) == n0 && T.finite_count(last) == n1 && n0 == f0 && n1 == f1;
  json j{{"from_d", c.d}, {"to_d", c.d - 1}, {"epsilon", io::rational(c.eps)}, {"trajectories", io::report(T)},
         {"generic_finite", generic_degree(F)}, {"fiber_counts", {f0, f1}}};
  json warnings = json::array();
  try {
    auto tw = transposition_word(T);
    auto chk = check_candidate(F, tw.word);
    j["candidate"] = {{"word", tw.word.str()},
                      {"raw_letters", tw.raw_letters},
                      {"reference", finite_mutation_word(c.d).str()},
                      {"identity", chk.identity},
                      {"common_prefix", chk.common_prefix}};
    if (!chk.identity) warnings.push_back("candidate word does not reproduce the reference transformation");
  } catch (const std::domain_error& e) {
    warnings.push_back(std::string("no candidate word: ") + e.what());
  }
  j["warnings"] = warnings;
  return finish(c, j, pass);
}

Output cmd_mutate(const RunConfig& c) {
  require_degree(c.d);
  require_format(c, {"json"});
  auto w = MutationWord::parse(c.word);
  auto M = from_boundaries(extended_classes(c.d));
  int n = M.lattice.rank();
  if (!w.empty() && (w.min_slot() < 0 || w.max_slot() + 1 >= n))
    throw std::invalid_argument("mutation slot out of range for " + std::to_string(n) + " classes");
  auto B = mutate(M.lattice, M.basis, w);
  json basis = json::array();
  for (auto& v : B) basis.push_back(v);
  bool ok = is_exceptional(M.lattice, B);
  return finish(c,
                {{"d", c.d},
                 {"word", w.str()},
                 {"before", io::classes(boundary_row(M.charge, M.basis))},
                 {"after", io::classes(boundary_row(M.charge, B))},
                 {"basis", basis},
                 {"gram", io::matrix(gram_of(M.lattice, B))},
                 {"exceptional", ok}},
                ok);
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Output o;
  try {
    if (c.command == "fibers") o = cmd_fibers(c);
    else if (c.command == "mirror") o = cmd_mirror(c);
    else if (c.command == "critvals") o = cmd_critvals(c);
    else if (c.command == "cycles") o = cmd_cycles(c);
    else if (c.command == "verify") o = cmd_verify(c);
    else if (c.command == "junction") o = cmd_junction(c);
    else if (c.command == "ghs") o = cmd_ghs(c);
    else if (c.command == "interpolate") o = cmd_interpolate(c);
    else if (c.command == "mutate") o = cmd_mutate(c);
    else throw std::invalid_argument("unknown command '" + c.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  if (c.out.empty()) {
    out << o.text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << c.out << '\n';
      return kError;
    }
    f << o.text;
  }
  return o.code;
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks for mirrors of del Pezzo surfaces of degree 1, 2, 3", argv.empty() ? "dpm" : argv[0]};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  std::string eps = "1/100", tol = "1/1000000";
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"fibers", "singular fibres of the Weierstrass model"},
      {"mirror", "quantum period against the classical period of g - alpha"},
      {"critvals", "critical values of the perturbed fibration"},
      {"cycles", "vanishing cycles and their Seifert form"},
      {"verify", "mutation sequence to the del Pezzo pseudolattice"},
      {"junction", "charge kernel, Kuznetsov basis, fundamental weights"},
      {"ghs", "string-junction sequences"},
      {"interpolate", "critical values along the interpolating family"},
      {"mutate", "apply a mutation word to the extended basis"},
  };
  for (auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--d", cfg.d, "degree")->capture_default_str();
    sub->add_option("--epsilon", eps, "perturbation as num/den")->capture_default_str();
    sub->add_option("--order", cfg.order, "truncation order")->capture_default_str();
    sub->add_option("--tol", tol, "residual tolerance, num/den or decimal")->capture_default_str();
    sub->add_option("--out", cfg.out, "output path");
    sub->add_option("--format", cfg.format, "json, csv or svg")->capture_default_str();
    sub->add_option("--word", cfg.word, "mutation word such as \"R8 R7 L4\"");
    sub->add_option("--variant", cfg.variant, "exact or perturbed")->capture_default_str();
  }
  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    cfg.eps = parse_rational(eps);
    try {
      cfg.tol = to_double(parse_rational(tol));
    } catch (const std::invalid_argument&) {
      std::size_t used = 0;
      cfg.tol = std::stod(tol, &used);
      if (used != tol.size()) throw std::invalid_argument("bad tolerance: " + tol);
    }
    if (!(cfg.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  if (const char* t = std::getenv("DPM_THREADS")) cfg.threads = std::atoi(t);
  return run(cfg, out, err);
}

}  // namespace dpm::cli
