#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpm/intmat.hpp"
#include "dpm/vancycles.hpp"

namespace dpm {

struct Pseudolattice {
  IMat gram;
  int rank() const { return static_cast<int>(gram.size()); }
  long long pair(const IVec& u, const IVec& v) const { return bilinear(gram, u, v); }
};

using Basis = std::vector<IVec>;  // ambient coordinates

struct Mutation {
  char side = 'L';  // 'L' or 'R'
  int slot = 0;     // acts on (slot, slot+1)
  bool operator==(const Mutation& o) const { return side == o.side && slot == o.slot; }
};

// printed left to right, applied right to left
struct MutationWord {
  std::vector<Mutation> letters;
  static MutationWord parse(const std::string& s);
  std::string str() const;
  MutationWord inverse() const;  // undoes this word
  MutationWord operator*(const MutationWord& o) const;  // this after o
  bool empty() const { return letters.empty(); }
  int max_slot() const;
  int min_slot() const;
};

// 2 x n, columns are boundary classes
struct ChargeMap {
  IMat rows;
  HomologyClass charge(const IVec& v) const;
};

struct BoundaryModel {
  Pseudolattice lattice;
  Basis basis;
  ChargeMap charge;
};

BoundaryModel from_boundaries(const std::vector<HomologyClass>& classes);
// Euler form of the standard model of K_0 of a del Pezzo surface of degree 9 - ell
Pseudolattice del_pezzo_gram(int ell);
// reference classes with the cycles at infinity appended (two copies of b for d=2, one for d=1)
std::vector<HomologyClass> extended_classes(int d);
MutationWord beta_word(int d);
// target boundary row (a+b, 2a-b, a-2b, -b, ..., -b) of length ell + 3
std::vector<HomologyClass> target_row(int ell);

Basis standard_basis(int n);
IMat gram_of(const Pseudolattice& P, const Basis& B);
bool is_exceptional(const Pseudolattice& P, const Basis& B);
Basis apply_mutation(const Pseudolattice& P, const Basis& B, const Mutation& m);
Basis mutate(const Pseudolattice& P, const Basis& B, const MutationWord& w);
std::vector<HomologyClass> boundary_row(const ChargeMap& c, const Basis& B);
bool equal_up_to_sign(const std::vector<HomologyClass>& u, const std::vector<HomologyClass>& v);

IMat serre(const Pseudolattice& P);

struct PointLike {
  IVec p;
  Integer index;  // [Zp : im (I - S)^2]
};
PointLike point_like(const Pseudolattice& P);

struct RankNorm {
  IVec ranks;
  long long norm = 0;
};
RankNorm rank_norm(const Pseudolattice& P, const Basis& B);

struct NeronSeveri {
  IntLattice lattice;
  Basis lift;  // ambient representatives, all in p-perp
  IVec p;
};
NeronSeveri neron_severi(const Pseudolattice& P);

std::vector<IVec> charge_kernel(const Pseudolattice& P, const ChargeMap& c);

Pseudolattice drop_zero(const Pseudolattice& P);

bool word_identity(const Pseudolattice& P, const Basis& B, const MutationWord& w1, const MutationWord& w2);

struct TheoremReport {
  int d = 3;
  int ell = 6;
  bool pass = false;
  bool slots_ok = false;         // never touches slot 0 nor the appended classes
  bool gram_ok = false;
  bool boundary_ok = false;
  bool intermediate_ok = true;   // d=3 only
  std::optional<std::vector<int>> signs;
  IMat gram;                     // of the first ell+3 mutated vectors
  std::vector<HomologyClass> boundary;
  std::vector<std::vector<HomologyClass>> intermediate;
  std::string first_divergence;
};
TheoremReport verify_theorem(int d);

// intermediate groups of the d=3 computation, in application order, and the expected rows
std::vector<std::string> beta3_groups();
std::vector<std::vector<HomologyClass>> beta3_rows();

// classes written in (A, B) coordinates, stored as {coef of A, coef of B}
std::vector<HomologyClass> ghs_sequences(int ell);
std::vector<HomologyClass> ghs_target(int ell);

struct SearchResult {
  MutationWord word;
  std::size_t nodes = 0;
};
std::optional<SearchResult> norm_guided_search(const Pseudolattice& P, const Basis& B, const IMat& target,
                                               std::size_t budget);

}  // namespace dpm
