#include "dpm/io.hpp"

namespace dpm::io {

json rational(const Rational& q) { return to_string(q); }

json poly(const UniPoly& p) {
  json a = json::array();
  for (auto& c : p.dense()) a.push_back(rational(c));
  return a;
}

json complex(Complex z) { return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())}); }

json matrix(const IMat& A) {
  json m = json::array();
  for (auto& r : A) m.push_back(r);
  return m;
}

json matrix(const QMat& A) {
  json m = json::array();
  for (auto& r : A) {
    json row = json::array();
    for (auto& x : r) row.push_back(rational(x));
    m.push_back(row);
  }
  return m;
}

json classes(const std::vector<HomologyClass>& row) {
  json a = json::array();
  for (auto& c : row) a.push_back(c.str());
  return a;
}

json report(const WeierstrassForm& W) { return {{"a", poly(W.a)}, {"b", poly(W.b)}, {"discriminant", poly(W.discriminant())}}; }

json report(const FiberConfiguration& F) {
  json fin = json::array();
  for (auto& e : F.finite_fibers) {
    json x{{"place", e.place.label()}, {"type", e.type.name()}, {"count", e.count}};
    if (!e.place.rational) x["factor"] = poly(e.place.factor);
    fin.push_back(x);
  }
  return {{"finite", fin},
          {"infinity", F.infinity_fiber.name()},
          {"euler_sum", F.euler_sum()},
          {"finite_count", F.finite_fiber_count()}};
}

json report(const MirrorCheck& m) {
  json q = json::array(), c = json::array();
  for (auto& x : m.regularized_quantum.c) q.push_back(rational(x));
  for (auto& x : m.classical.c) c.push_back(rational(x));
  return {{"pass", m.pass},
          {"first_mismatch", m.first_mismatch},
          {"alpha", rational(m.alpha)},
          {"monomials", m.monomials},
          {"regularized_quantum", q},
          {"classical", c}};
}

json report(const VanishingData& v) {
  json cv = json::array(), res = json::array(), ints = json::array(), col = json::array();
  for (auto& z : v.critical_values) cv.push_back(complex(z));
  for (auto r : v.residuals) res.push_back(static_cast<double>(r));
  for (auto& z : v.integrals) ints.push_back(complex(z));
  for (auto& [i, j] : v.colliding) col.push_back({i, j});
  return {{"d", v.d},
          {"epsilon", rational(v.eps)},
          {"retries", v.retries},
          {"omega_a", complex(v.lattice.omega_a)},
          {"omega_b", complex(v.lattice.omega_b)},
          {"critical_values", cv},
          {"colliding", col},
          {"integrals", ints},
          {"residuals", res},
          {"classes", classes(v.classes)},
          {"b_flipped", v.b_flipped},
          {"seifert_gram", matrix(seifert_gram(v.classes))}};
}

json report(const TheoremReport& r) {
  json inter = json::array();
  for (auto& row : r.intermediate) inter.push_back(classes(row));
  json j{{"d", r.d},
         {"ell", r.ell},
         {"pass", r.pass},
         {"slots_ok", r.slots_ok},
         {"gram_ok", r.gram_ok},
         {"boundary_ok", r.boundary_ok},
         {"intermediate_ok", r.intermediate_ok},
         {"gram", matrix(r.gram)},
         {"boundary", classes(r.boundary)},
         {"intermediate", inter},
         {"first_divergence", r.first_divergence}};
  j["signs"] = r.signs ? json(*r.signs) : json(nullptr);
  return j;
}

json report(const RootSystemReport& r) {
  json simple = json::array();
  for (auto& v : r.simple_roots) simple.push_back(v);
  return {{"type", r.type},
          {"sign", r.sign},
          {"abs_det", r.abs_det.get_str()},
          {"root_count", r.root_count},
          {"simple_roots", simple},
          {"cartan", matrix(r.cartan)}};
}

json report(const KernelDecomposition& k) {
  json comp = json::array();
  for (auto& v : k.complement) comp.push_back(v);
  return {{"pass", k.pass},
          {"p", k.p},
          {"p_in_kernel", k.p_in_kernel},
          {"symmetric", k.symmetric},
          {"radical_is_p", k.radical_is_p},
          {"orthogonal", k.orthogonal},
          {"kernel_rank", k.kernel.size()},
          {"complement", comp},
          {"roots", report(k.roots)},
          {"witness", k.witness}};
}

json report(const KuznetsovBasis& k) {
  json basis = json::array();
  for (auto& v : k.basis) {
    json row = json::array();
    for (auto& x : v) row.push_back(rational(x));
    basis.push_back(row);
  }
  return {{"d", k.d},
          {"type", k.type},
          {"matches", k.matches},
          {"basis", basis},
          {"gram", matrix(k.gram)},
          {"expected", matrix(k.expected)}};
}

json report(const SplittingReport& s) {
  return {{"pass", s.pass},
          {"complement_dim", s.complement_dim},
          {"contains_p", s.contains_p},
          {"charge_rank", s.charge_rank},
          {"spans", s.spans},
          {"block_diagonal", s.block_diagonal},
          {"witness", s.witness}};
}

json report(const TrajectorySet& T) {
  json sw = json::array();
  for (auto& c : T.switches) sw.push_back({{"track", c.track}, {"s", static_cast<double>(c.s)}, {"to_chart", c.to_chart}});
  std::size_t last = T.points.empty() ? 0 : T.points.size() - 1;
  return {{"samples", T.s.size()},
          {"tracks", T.track_count()},
          {"finite_start", T.points.empty() ? 0 : T.finite_count(0)},
          {"finite_end", T.points.empty() ? 0 : T.finite_count(last)},
          {"min_separation", static_cast<double>(T.min_separation())},
          {"chart_switches", sw}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dpm::io
