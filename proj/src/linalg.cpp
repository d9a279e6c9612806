#include "ness/linalg.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace ness {

CMatrix local_operator(LocalOp kind) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (kind) {
    case LocalOp::Identity:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case LocalOp::SigmaX:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case LocalOp::SigmaY:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case LocalOp::SigmaZ:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case LocalOp::SigmaPlus:
      m(0, 1) = 1.0;  // |e><g|
      break;
    case LocalOp::SigmaMinus:
      m(1, 0) = 1.0;  // |g><e|
      break;
  }
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kron: factors must be square");
  const Eigen::Index na = a.rows(), nb = b.rows();
  CMatrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
  return out;
}

SpIMatrix kron(const SpIMatrix& a, const SpIMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kron: factors must be square");
  const Eigen::Index nb = b.rows();
  std::vector<Eigen::Triplet<std::int64_t>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros()) * static_cast<std::size_t>(b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SpIMatrix::InnerIterator ita(a, ka); ita; ++ita)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SpIMatrix::InnerIterator itb(b, kb); itb; ++itb)
          trips.emplace_back(ita.row() * nb + itb.row(), ita.col() * nb + itb.col(),
                             ita.value() * itb.value());
  SpIMatrix out(a.rows() * nb, a.rows() * nb);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

CMatrix embed_site(const CMatrix& op, int site, int total_sites) {
  if (op.rows() != 2 || op.cols() != 2)
    throw std::invalid_argument("embed_site: operator must be 2x2");
  if (site < 1 || site > total_sites)
    throw std::invalid_argument("embed_site: site index out of range");
  const Eigen::Index left = Eigen::Index{1} << (site - 1);
  const Eigen::Index right = Eigen::Index{1} << (total_sites - site);
  CMatrix out = op;
  if (left > 1) out = kron(CMatrix::Identity(left, left), out);
  if (right > 1) out = kron(out, CMatrix::Identity(right, right));
  return out;
}

CVector vec(const CMatrix& m) {
  CVector v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

namespace {

double effective_threshold(const Eigen::VectorXd& sv, Eigen::Index rows, Eigen::Index cols,
                           std::optional<double> tol) {
  const double sigma_max = sv.size() > 0 ? sv[0] : 0.0;
  if (tol) return *tol;
  const double eps = std::numeric_limits<double>::epsilon();
  return static_cast<double>(std::max(rows, cols)) * eps * sigma_max;
}

}  // namespace

SvdNullspaces svd_nullspaces(const CMatrix& m, std::optional<double> tol) {
  Eigen::JacobiSVD<CMatrix> svd;
  svd.compute(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("svd_nullspaces: decomposition failed");
  const Eigen::VectorXd sv = svd.singularValues();
  const double thr = effective_threshold(sv, m.rows(), m.cols(), tol);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > thr) ++rank;
  SvdNullspaces out;
  out.rank = rank;
  out.sigma_max = sv.size() > 0 ? sv[0] : 0.0;
  out.null_basis = svd.matrixV().rightCols(m.cols() - rank);
  out.left_null_basis = svd.matrixU().rightCols(m.rows() - rank);
  return out;
}

int numerical_rank(const CMatrix& m, std::optional<double> tol) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("numerical_rank: decomposition failed");
  const Eigen::VectorXd sv = svd.singularValues();
  const double thr = effective_threshold(sv, m.rows(), m.cols(), tol);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > thr) ++rank;
  return rank;
}

std::vector<CVector> nullspace_basis(const CMatrix& m, std::optional<double> tol) {
  const SvdNullspaces ns = svd_nullspaces(m, tol);
  std::vector<CVector> basis;
  basis.reserve(ns.null_basis.cols());
  for (Eigen::Index c = 0; c < ns.null_basis.cols(); ++c) basis.push_back(ns.null_basis.col(c));
  return basis;
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  return max_abs(a - b);
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m, m.adjoint()) <= tol * std::max(1.0, max_abs(m));
}

CMatrix dense(const SpIMatrix& m) {
  CMatrix out = CMatrix::Zero(m.rows(), m.cols());
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpIMatrix::InnerIterator it(m, k); it; ++it)
      out(it.row(), it.col()) = static_cast<double>(it.value());
  return out;
}

SpIMatrix sparse_identity(Eigen::Index n) {
  SpIMatrix m(n, n);
  m.setIdentity();
  return m;
}

}  // namespace ness
