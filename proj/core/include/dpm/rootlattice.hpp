#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpm/intmat.hpp"
#include "dpm/pseudolattice.hpp"

namespace dpm {

struct LLLResult {
  IMat gram;  // reduced
  IMat U;     // columns: reduced basis in the old coordinates
};
LLLResult lll_reduce(const IMat& gram, double delta = 0.99);

// +1 positive definite, -1 negative definite, 0 otherwise (exact leading minors)
int definiteness(const IMat& gram);

// nonzero v with |v^T G v| <= bound; definite input only; lexicographic order
std::vector<IVec> short_vectors(const IntLattice& L, long long bound);

struct RootSystemReport {
  int sign = 1;            // of definiteness before normalization
  Integer abs_det;
  std::size_t root_count = 0;
  std::vector<IVec> simple_roots;  // lattice coordinates
  IMat cartan;
  std::vector<std::pair<int, int>> edges;
  std::string type;        // "E6", "A1+A2", ...
};
RootSystemReport root_system_identify(const IntLattice& L);

// Cartan matrix of A_n, D_n, E_6..8 in a standard labelling
IMat cartan_matrix(const std::string& type);
bool dynkin_isomorphic(const IMat& C1, const IMat& C2);

struct HyperbolicModel {
  IntLattice ambient;   // diag(1, -1, ..., -1)
  IVec k;               // (-3, 1, ..., 1)
  long long k_square = 0;
  std::vector<IVec> perp_basis;  // ambient coordinates
  RootSystemReport perp;
};
HyperbolicModel hyperbolic_model(int ell);

// <w_i, beta_j> = delta_ij in the ambient lattice
std::vector<IVec> fundamental_weights(const IntLattice& ambient, const std::vector<IVec>& simple_roots);

struct KernelDecomposition {
  std::vector<IVec> kernel;      // ambient coordinates
  IVec p;
  bool p_in_kernel = false;
  bool symmetric = false;
  bool radical_is_p = false;
  bool orthogonal = false;
  std::vector<IVec> complement;  // ambient lifts of a basis of ker / p
  RootSystemReport roots;
  bool pass = false;
  std::string witness;
};
KernelDecomposition kernel_decomposition(const Pseudolattice& P, const ChargeMap& c);

struct KuznetsovBasis {
  int d = 3;
  std::vector<QVec> basis;  // (O, k, beta_1..beta_ell, p) in ambient coordinates
  QMat gram;
  QMat expected;            // with chi(k,k) = -d
  IMat cartan;
  std::string type;
  bool matches = false;
};
KuznetsovBasis kuznetsov_basis(int d);

struct SplittingReport {
  bool pass = false;
  int complement_dim = 0;
  bool contains_p = false;
  int charge_rank = 0;
  bool spans = false;
  bool block_diagonal = false;
  std::string witness;
};
SplittingReport rational_splitting(const Pseudolattice& P, const ChargeMap& c);

}  // namespace dpm
