#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace ness {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SpCMatrix = Eigen::SparseMatrix<Complex>;
using SpIMatrix = Eigen::SparseMatrix<std::int64_t>;

// Single-qubit operators in the excited-first basis: index 1 = |e>, index 2 = |g>.
// With this ordering sigma_minus = |g><e| sits strictly below the diagonal,
// which keeps the lowering-operator sums of the fractal module strictly
// lower triangular.
enum class LocalOp { Identity, SigmaX, SigmaY, SigmaZ, SigmaPlus, SigmaMinus };

// The 2x2 matrix of the requested operator.
CMatrix local_operator(LocalOp kind);

// Kronecker product of square matrices. Exact on integer-valued inputs.
// Throws std::invalid_argument for non-square factors.
CMatrix kron(const CMatrix& a, const CMatrix& b);
SpIMatrix kron(const SpIMatrix& a, const SpIMatrix& b);

// I^{(site-1)} (x) op (x) I^{(total_sites-site)}, sites numbered from 1.
// op must be 2x2.
CMatrix embed_site(const CMatrix& op, int site, int total_sites);

// Row-major flattening of a matrix and its inverse. This is the vec
// convention used throughout: vec(m)[i*cols + j] = m(i, j).
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

// Rank and null space via SVD. A singular value counts toward the rank when
// it exceeds tol; the default threshold is max(rows, cols) * eps * sigma_max.
int numerical_rank(const CMatrix& m, std::optional<double> tol = {});
std::vector<CVector> nullspace_basis(const CMatrix& m, std::optional<double> tol = {});

// One SVD, both null spaces. null_basis spans ker(m), left_null_basis spans
// ker(m^*); columns are orthonormal.
struct SvdNullspaces {
  int rank = 0;
  double sigma_max = 0.0;
  CMatrix null_basis;       // cols x nullity
  CMatrix left_null_basis;  // rows x left-nullity
};
SvdNullspaces svd_nullspaces(const CMatrix& m, std::optional<double> tol = {});

// Largest absolute entry; 0 for empty matrices.
double max_abs(const CMatrix& m);

// Entrywise distance, used by approximate comparisons in tests and validators.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool is_hermitian(const CMatrix& m, double tol = 1e-10);

CMatrix dense(const SpIMatrix& m);
SpIMatrix sparse_identity(Eigen::Index n);

}  // namespace ness
