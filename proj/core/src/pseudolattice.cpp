#include "dpm/pseudolattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <cstdint>
#include <unordered_set>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace dpm {

MutationWord MutationWord::parse(const std::string& s) {
  MutationWord w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R'))
      throw std::invalid_argument("bad mutation letter: " + tok);
    std::string num = tok.substr(1);
    if (!std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 6)
      throw std::invalid_argument("bad mutation letter: " + tok);
    w.letters.push_back({tok[0], std::stoi(num)});
  }
  return w;
}

std::string MutationWord::str() const {
  std::string s;
  for (auto& m : letters) {
    if (!s.empty()) s += ' ';
    s += m.side;
    s += std::to_string(m.slot);
  }
  return s;
}

MutationWord MutationWord::inverse() const {
  MutationWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->side == 'L' ? 'R' : 'L', it->slot});
  return w;
}

MutationWord MutationWord::operator*(const MutationWord& o) const {
  MutationWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

int MutationWord::max_slot() const {
  int m = -1;
  for (auto& l : letters) m = std::max(m, l.slot);
  return m;
}

int MutationWord::min_slot() const {
  int m = std::numeric_limits<int>::max();
  for (auto& l : letters) m = std::min(m, l.slot);
  return m;
}

HomologyClass ChargeMap::charge(const IVec& v) const {
  HomologyClass h;
  for (std::size_t i = 0; i < v.size(); ++i) {
    h.m += rows[0][i] * v[i];
    h.n += rows[1][i] * v[i];
  }
  return h;
}

BoundaryModel from_boundaries(const std::vector<HomologyClass>& classes) {
  BoundaryModel M;
  M.lattice.gram = seifert_gram(classes);
  int n = static_cast<int>(classes.size());
  M.basis = standard_basis(n);
  M.charge.rows.assign(2, IVec(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    M.charge.rows[0][i] = classes[i].m;
    M.charge.rows[1][i] = classes[i].n;
  }
  if (n > 0 && determinant(M.lattice.gram) == 0) throw std::logic_error("degenerate Seifert form");
  return M;
}

Pseudolattice del_pezzo_gram(int ell) {
  if (ell < 0) throw std::invalid_argument("negative ell");
  int n = ell + 3;
  IMat G(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) G[i][i] = 1;
  G[0][1] = G[0][2] = G[1][2] = 3;
  for (std::size_t j = 3; j < static_cast<std::size_t>(n); ++j) {
    G[0][j] = 1;
    G[1][j] = 2;
    G[2][j] = 1;
  }
  return {G};
}

std::vector<HomologyClass> extended_classes(int d) {
  auto c = reference_classes(d);
  if (d == 2) c.insert(c.end(), {{0, 1}, {0, 1}});
  if (d == 1) c.push_back({0, 1});
  return c;
}

MutationWord beta_word(int d) {
  std::string b3 = "L1 L2 L3 L1 L3 L1 L4 L5 L6 L7 L3 L4 L5 L2 L3 L1";
  std::string b2 = b3 + " R8 R7 R6 R5 R4 R3 R2 R1 R8 R7 L4";
  std::string b1 = b2 + " R9 R8 R7 R6 R5 R4 L6";
  switch (d) {
    case 3: return MutationWord::parse(b3);
    case 2: return MutationWord::parse(b2);
    case 1: return MutationWord::parse(b1);
    default: throw std::invalid_argument("degree must be 1, 2 or 3");
  }
}

std::vector<HomologyClass> target_row(int ell) {
  std::vector<HomologyClass> r{{1, 1}, {2, -1}, {1, -2}};
  for (int i = 0; i < ell; ++i) r.push_back({0, -1});
  return r;
}

Basis standard_basis(int n) {
  Basis B(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) B[i][i] = 1;
  return B;
}

IMat gram_of(const Pseudolattice& P, const Basis& B) { return congruence(P.gram, B); }

bool is_exceptional(const Pseudolattice& P, const Basis& B) {
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (P.pair(B[i], B[i]) != 1) return false;
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (P.pair(B[j], B[i]) != 0) return false;
  }
  return true;
}

Basis apply_mutation(const Pseudolattice& P, const Basis& B, const Mutation& m) {
  if (m.slot < 0 || static_cast<std::size_t>(m.slot) + 1 >= B.size())
    throw std::out_of_range("mutation slot " + std::to_string(m.slot) + " out of range");
  Basis out = B;
  auto i = static_cast<std::size_t>(m.slot);
  const IVec& e = B[i];
  const IVec& f = B[i + 1];
  long long c = P.pair(e, f);
  IVec g(e.size());
  if (m.side == 'L') {
    for (std::size_t k = 0; k < e.size(); ++k) g[k] = f[k] - c * e[k];
    out[i] = g;
    out[i + 1] = e;
  } else if (m.side == 'R') {
    for (std::size_t k = 0; k < e.size(); ++k) g[k] = e[k] - c * f[k];
    out[i] = f;
    out[i + 1] = g;
  } else {
    throw std::invalid_argument("mutation side must be L or R");
  }
  return out;
}

Basis mutate(const Pseudolattice& P, const Basis& B, const MutationWord& w) {
  Basis cur = B;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = apply_mutation(P, cur, *it);
  if (is_exceptional(P, B) && !is_exceptional(P, cur)) throw std::logic_error("mutation lost exceptionality");
  return cur;
}

std::vector<HomologyClass> boundary_row(const ChargeMap& c, const Basis& B) {
  std::vector<HomologyClass> r;
  for (auto& v : B) r.push_back(c.charge(v));
  return r;
}

bool equal_up_to_sign(const std::vector<HomologyClass>& u, const std::vector<HomologyClass>& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(u[i] == v[i] || u[i] == -v[i])) return false;
  return true;
}

IMat serre(const Pseudolattice& P) {
  IMat Ginv = inverse_unimodular(P.gram);
  return matmul(Ginv, transpose(P.gram));
}

PointLike point_like(const Pseudolattice& P) {
  int n = P.rank();
  IMat S = serre(P);
  IMat T = identity_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  T = matmul(T, T);
  auto H = hnf_columns(to_z(T));
  if (H.rank != 1) throw std::domain_error("im (I - S)^2 has rank " + std::to_string(H.rank) + ", expected 1");
  IVec col(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) col[i] = H.H[i][0].get_si();
  long long g = content(col);
  PointLike pl;
  pl.p = sign_fixed(primitive_part(col));
  pl.index = static_cast<long>(g);
  return pl;
}

RankNorm rank_norm(const Pseudolattice& P, const Basis& B) {
  IVec p = point_like(P).p;
  RankNorm r;
  for (auto& v : B) {
    long long x = P.pair(p, v);
    r.ranks.push_back(x);
    r.norm += x * x;
  }
  return r;
}

NeronSeveri neron_severi(const Pseudolattice& P) {
  NeronSeveri ns;
  ns.p = point_like(P).p;
  const IVec& p = ns.p;
  int n = P.rank();
  IMat row(1, IVec(static_cast<std::size_t>(n)));
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) row[0][j] += p[i] * P.gram[i][j];
  std::vector<IVec> K = integer_kernel(row);  // p-perp, saturated
  // coordinates of p in K
  IMat Kcols(static_cast<std::size_t>(n), IVec(K.size()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j < K.size(); ++j) Kcols[i][j] = K[j][i];
  auto c = solve_integer(Kcols, p);
  if (!c) throw std::domain_error("point-like vector is not in its own orthogonal");
  auto ext = extend_to_basis(*c);
  for (std::size_t k = 1; k < ext.size(); ++k) ns.lift.push_back(matvec(Kcols, ext[k]));
  ns.lattice.gram = congruence(P.gram, ns.lift);
  for (std::size_t i = 0; i < ns.lift.size(); ++i)
    for (std::size_t j = 0; j < ns.lift.size(); ++j)
      if (ns.lattice.gram[i][j] != ns.lattice.gram[j][i]) throw std::domain_error("form is not symmetric on p-perp");
  // p lies in the radical of p-perp
  for (auto& v : K)
    if (P.pair(p, v) != 0 || P.pair(v, p) != 0) throw std::domain_error("p is not in the radical of p-perp");
  return ns;
}

std::vector<IVec> charge_kernel(const Pseudolattice& P, const ChargeMap& c) {
  if (static_cast<int>(c.rows.at(0).size()) != P.rank()) throw std::invalid_argument("charge map size mismatch");
  auto K = integer_kernel(c.rows);
  IVec p = point_like(P).p;
  IMat Kcols(p.size(), IVec(K.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < K.size(); ++j) Kcols[i][j] = K[j][i];
  if (!solve_integer(Kcols, p)) throw std::domain_error("point-like vector has nonzero charge");
  return K;
}

Pseudolattice drop_zero(const Pseudolattice& P) {
  if (P.rank() < 2) throw std::invalid_argument("drop_zero needs rank >= 2");
  Pseudolattice Q;
  for (std::size_t i = 1; i < P.gram.size(); ++i) Q.gram.emplace_back(P.gram[i].begin() + 1, P.gram[i].end());
  return Q;
}

bool word_identity(const Pseudolattice& P, const Basis& B, const MutationWord& w1, const MutationWord& w2) {
  return mutate(P, B, w1) == mutate(P, B, w2);
}

std::vector<std::string> beta3_groups() {
  return {"L1", "L2 L3", "L3 L4 L5", "L4 L5 L6 L7", "L3 L1", "L1", "L2 L3", "L1"};
}

std::vector<std::vector<HomologyClass>> beta3_rows() {
  std::vector<std::vector<std::string>> rows = {
      {"a+b", "a-b", "b", "b", "a", "b", "a", "b", "a"},
      {"a+b", "a-b", "a-2b", "b", "b", "b", "a", "b", "a"},
      {"a+b", "a-b", "a-2b", "a-3b", "b", "b", "b", "b", "a"},
      {"a+b", "a-b", "a-2b", "a-3b", "a-4b", "b", "b", "b", "b"},
      {"a+b", "-b", "a-b", "-b", "a-3b", "b", "b", "b", "b"},
      {"a+b", "a-2b", "-b", "-b", "a-3b", "b", "b", "b", "b"},
      {"a+b", "a-2b", "a-5b", "-b", "-b", "b", "b", "b", "b"},
      {"a+b", "2a-b", "a-2b", "-b", "-b", "-b", "-b", "-b", "-b"},
  };
  std::vector<std::vector<HomologyClass>> out;
  for (auto& r : rows) {
    out.emplace_back();
    for (auto& s : r) out.back().push_back(HomologyClass::parse(s));
  }
  return out;
}

static std::string row_str(const std::vector<HomologyClass>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + r[i].str();
  return s + ")";
}

TheoremReport verify_theorem(int d) {
  TheoremReport rep;
  rep.d = d;
  rep.ell = 9 - d;
  auto classes = extended_classes(d);
  BoundaryModel M = from_boundaries(classes);
  MutationWord w = beta_word(d);
  int core = rep.ell + 3;
  rep.slots_ok = w.min_slot() >= 1 && w.max_slot() + 1 < core;
  if (!rep.slots_ok && rep.first_divergence.empty()) rep.first_divergence = "word touches slot 0 or an appended class";
  if (d == 3) {
    Basis B = M.basis;
    auto groups = beta3_groups();
    auto rows = beta3_rows();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      B = mutate(M.lattice, B, MutationWord::parse(groups[g]));
      auto row = boundary_row(M.charge, B);
      rep.intermediate.push_back(row);
      if (!equal_up_to_sign(row, rows[g])) {
        rep.intermediate_ok = false;
        if (rep.first_divergence.empty())
          rep.first_divergence = "after group " + std::to_string(g) + " (" + groups[g] + "): got " + row_str(row) +
                                 ", expected " + row_str(rows[g]);
      }
    }
  }
  Basis B = mutate(M.lattice, M.basis, w);
  Basis head(B.begin(), B.begin() + core);
  rep.gram = gram_of(M.lattice, head);
  rep.signs = sign_normalize(rep.gram, del_pezzo_gram(rep.ell).gram);
  rep.gram_ok = rep.signs.has_value();
  if (!rep.gram_ok && rep.first_divergence.empty()) rep.first_divergence = "Gram does not sign-normalize to M_ell";
  rep.boundary = boundary_row(M.charge, head);
  rep.boundary_ok = equal_up_to_sign(rep.boundary, target_row(rep.ell));
  if (!rep.boundary_ok && rep.first_divergence.empty())
    rep.first_divergence = "boundary row " + row_str(rep.boundary);
  rep.pass = rep.slots_ok && rep.gram_ok && rep.boundary_ok && rep.intermediate_ok;
  return rep;
}

std::vector<HomologyClass> ghs_sequences(int ell) {
  int d = 9 - ell;
  if (d < 1 || d > 3) throw std::invalid_argument("ell must be 6, 7 or 8");
  auto cl = reference_classes(d);
  cl.erase(cl.begin());
  std::vector<HomologyClass> out;
  for (auto& c : cl) {
    if (ell == 6)
      out.push_back({c.n - c.m, -c.m});  // b = A, a = -(A+B)
    else
      out.push_back({c.m + c.n, c.n});  // a = A, b = A + B
  }
  if (ell == 7) {
    BoundaryModel M = from_boundaries(out);
    // L2 and R7 with slots counted from 1
    Basis B = mutate(M.lattice, M.basis, MutationWord::parse("L1 R6"));
    out = boundary_row(M.charge, B);
  }
  return out;
}

std::vector<HomologyClass> ghs_target(int ell) {
  std::vector<HomologyClass> out;
  switch (ell) {
    case 8:
      for (int i = 0; i < 5; ++i) out.insert(out.end(), {{1, 0}, {-1, -1}});
      break;
    case 7:
      for (int i = 0; i < 3; ++i) out.insert(out.end(), {{1, 0}, {0, 1}, {-1, -1}});
      break;
    case 6:
      for (int i = 0; i < 4; ++i) out.insert(out.end(), {{1, 0}, {-1, -1}});
      break;
    default: throw std::invalid_argument("ell must be 6, 7 or 8");
  }
  return out;
}

namespace {
constexpr std::size_t kMaxSearchDepth = 24;

long long sign_distance(const IMat& G, const IMat& T) {
  long long s = 0;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) s += std::llabs(std::llabs(G[i][j]) - std::llabs(T[i][j]));
  return s;
}
}  // namespace

std::optional<SearchResult> norm_guided_search(const Pseudolattice& P, const Basis& B, const IMat& target,
                                               std::size_t budget) {
  std::size_t n = target.size();
  if (n > B.size()) throw std::invalid_argument("target larger than basis");
  IVec p = point_like(P).p;
  long long target_norm = rank_norm(Pseudolattice{target}, standard_basis(static_cast<int>(n))).norm;
  auto score = [&](const Basis& X) {
    long long norm = 0;
    for (auto& v : X) {
      long long r = P.pair(p, v);
      norm += r * r;
    }
    Basis head(X.begin(), X.begin() + static_cast<long>(n));
    return std::make_pair(sign_distance(gram_of(P, head), target) + 4 * std::llabs(norm - target_norm), norm);
  };
  auto done = [&](const Basis& X) {
    Basis head(X.begin(), X.begin() + static_cast<long>(n));
    return sign_normalize(gram_of(P, head), target).has_value();
  };
  if (done(B)) return SearchResult{{}, 0};
  auto hash = [](const Basis& X) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto& v : X)
      for (auto x : v) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
      }
    return h;
  };
  struct Node {
    std::pair<long long, long long> sc;
    std::string key;  // word string, deterministic ties
    MutationWord word;
    bool operator>(const Node& o) const { return std::tie(sc, key) > std::tie(o.sc, o.key); }
  };
  std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
  std::unordered_set<std::uint64_t> seen{hash(B)};
  pq.push({score(B), "", {}});
  std::size_t nodes = 0;
  while (!pq.empty() && nodes < budget) {
    Node cur = pq.top();
    pq.pop();
    ++nodes;
    if (cur.word.letters.size() >= kMaxSearchDepth) continue;
    Basis base = mutate(P, B, cur.word);
    for (int slot = 1; slot + 1 < static_cast<int>(n); ++slot)
      for (char side : {'L', 'R'}) {
        Mutation m{side, slot};
        Basis nb = apply_mutation(P, base, m);
        bool big = false;
        for (auto& v : nb)
          for (auto x : v) big = big || std::llabs(x) > 1000000;
        if (big || !seen.insert(hash(nb)).second) continue;
        MutationWord w;
        w.letters.push_back(m);
        w = w * cur.word;
        if (done(nb)) return SearchResult{w, nodes};
        pq.push({score(nb), w.str(), w});
      }
  }
  return std::nullopt;
}

}  // namespace dpm
