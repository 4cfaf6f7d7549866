#pragma once

#include <optional>
#include <vector>

#include "dpm/exactpoly.hpp"

namespace dpm {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;
using ZMat = std::vector<std::vector<Integer>>;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

IMat identity_matrix(int n);
IMat transpose(const IMat& A);
IMat matmul(const IMat& A, const IMat& B);
IVec matvec(const IMat& A, const IVec& v);
long long bilinear(const IMat& G, const IVec& u, const IVec& v);  // u^T G v
IMat congruence(const IMat& G, const std::vector<IVec>& basis);  // B^T G B
long long content(const IVec& v);
IVec primitive_part(const IVec& v);
// first nonzero coordinate positive
IVec sign_fixed(const IVec& v);

ZMat to_z(const IMat& A);
// throws std::overflow_error if an entry does not fit
IMat to_i(const ZMat& A);
QMat to_q(const IMat& A);

Integer determinant(const ZMat& A);
long long determinant(const IMat& A);
// exact inverse; throws if singular
QMat inverse(const QMat& A);
// throws if |det| != 1
IMat inverse_unimodular(const IMat& A);

struct ColumnHNF {
  ZMat H;  // A * U
  ZMat U;  // unimodular
  int rank = 0;
};
// Column operations only: the first `rank` columns of H are in echelon form,
// the rest vanish.
ColumnHNF hnf_columns(const ZMat& A);

struct SmithForm {
  ZMat D, L, R;  // L * A * R = D, L and R unimodular
  std::vector<Integer> diagonal;
};
SmithForm smith_normal_form(const ZMat& A);

// Saturated basis of {v in Z^n : M v = 0}, vectors returned as columns-in-list.
std::vector<IVec> integer_kernel(const IMat& M);
// Z-basis of the lattice spanned by the given vectors.
std::vector<IVec> lattice_basis(const std::vector<IVec>& gens, int n);
// Solve A x = b over Z; nullopt if no integral solution.
std::optional<IVec> solve_integer(const IMat& A, const IVec& b);
// Complete the primitive vector c to a basis of Z^n; the first returned
// vector equals c.
std::vector<IVec> extend_to_basis(const IVec& c);

int rank_q(const QMat& A);
std::vector<QVec> nullspace_q(const QMat& A);

struct IntLattice {
  IMat gram;  // symmetric
  int rank() const { return static_cast<int>(gram.size()); }
};

// D = diag(+-1) with D G D = target.
std::optional<std::vector<int>> sign_normalize(const IMat& G, const IMat& target);

}  // namespace dpm
