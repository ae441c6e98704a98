#include "friedrichs/krein.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>

namespace friedrichs {

namespace {

// Orthonormal column basis of the range of m, rank decided at tol::rank
// relative to the largest column norm.
Matrix orthonormal_range(const Matrix& m) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  qr.setThreshold(tol::rank);
  const auto rank = qr.rank();
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), rank);
  return q;
}

}  // namespace

IndefForm::IndefForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw InvalidDimension("IndefForm: Gram matrix must be square and nonempty");
  const double scale = std::max(1.0, gram_.norm());
  if ((gram_ - gram_.adjoint()).norm() > tol::hermitian * scale)
    throw DegenerateForm("IndefForm: Gram matrix is not Hermitian");
  gram_ = 0.5 * (gram_ + gram_.adjoint().eval());
  Eigen::JacobiSVD<Matrix> svd(gram_);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= tol::rank * std::max(1.0, sv(0)))
    throw DegenerateForm("IndefForm: Gram matrix is singular");
}

Subspace::Subspace(int ambient_dim, const Matrix& spanning) : ambient_dim_(ambient_dim) {
  if (ambient_dim <= 0) throw InvalidDimension("Subspace: ambient dimension must be positive");
  if (spanning.cols() > 0 && spanning.rows() != ambient_dim)
    throw InvalidDimension("Subspace: spanning set has wrong ambient dimension");
  basis_ = spanning.cols() == 0 ? Matrix(ambient_dim, 0) : orthonormal_range(spanning);
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim));
}

bool Subspace::contains(const Vector& v, double tolerance) const {
  if (v.size() != ambient_dim_) throw InvalidDimension("Subspace::contains: vector size mismatch");
  const double scale = v.norm();
  if (scale == 0.0) return true;
  Vector residual = v - basis_ * (basis_.adjoint() * v);
  return residual.norm() <= tolerance * scale;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.dim() != b.dim()) return false;
  return (a.projector() - b.projector()).cwiseAbs().maxCoeff() <= tol::subspace_eq;
}

Complex form_eval(const IndefForm& f, const Vector& x, const Vector& y) {
  if (x.size() != f.dim() || y.size() != f.dim())
    throw InvalidDimension("form_eval: vector length mismatch");
  return (y.adjoint() * f.gram() * x)(0);
}

Subspace ortho_complement(const IndefForm& f, const Subspace& x) {
  if (x.ambient_dim() != f.dim())
    throw InvalidDimension("ortho_complement: ambient dimension mismatch");
  if (x.dim() == 0) return Subspace::full(f.dim());
  // [u,v] = 0 for all u in x  <=>  (B* J) v = 0.
  Matrix constraints = x.basis().adjoint() * f.gram();
  return Subspace(f.dim(), kernel_of(constraints));
}

bool cone_check(const IndefForm& f, const Subspace& x, ConeSign sign) {
  if (x.ambient_dim() != f.dim()) throw InvalidDimension("cone_check: ambient dimension mismatch");
  if (x.dim() == 0) return true;
  Matrix compressed = x.basis().adjoint() * f.gram() * x.basis();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(compressed, Eigen::EigenvaluesOnly);
  if (sign == ConeSign::nonneg) return eig.eigenvalues().minCoeff() >= -tol::cone;
  return eig.eigenvalues().maxCoeff() <= tol::cone;
}

bool is_maximal_semidefinite(const IndefForm& f, const Subspace& x, ConeSign sign) {
  if (!cone_check(f, x, sign)) return false;
  const Signature sig = signature(f);
  const int target = sign == ConeSign::nonneg ? sig.n_plus : sig.n_minus;
  return x.dim() == target;
}

Signature signature(const IndefForm& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(f.gram(), Eigen::EigenvaluesOnly);
  const auto& values = eig.eigenvalues();
  const double threshold = tol::rank * std::max(1.0, values.cwiseAbs().maxCoeff());
  Signature sig;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > threshold)
      ++sig.n_plus;
    else if (values(i) < -threshold)
      ++sig.n_minus;
    else
      ++sig.n_zero;
  }
  if (sig.n_zero > 0) throw DegenerateForm("signature: form has a null direction");
  return sig;
}

std::pair<Matrix, Matrix> projector_pair(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != y.ambient_dim())
    throw InvalidDimension("projector_pair: ambient dimension mismatch");
  const int n = x.ambient_dim();
  if (x.dim() + y.dim() != n)
    throw NotADirectSum("projector_pair: dimensions do not sum to the ambient dimension");
  Matrix stacked(n, n);
  stacked << x.basis(), y.basis();
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(n - 1) <= 0.0 || sv(0) / sv(n - 1) > tol::cond_guard)
    throw NotADirectSum("projector_pair: sum is not direct (ill-conditioned basis stack)");
  Matrix selector = Matrix::Zero(n, n);
  selector.topLeftCorner(x.dim(), x.dim()).setIdentity();
  Matrix p1 = stacked * selector * svd.solve(Matrix::Identity(n, n));
  Matrix p2 = Matrix::Identity(n, n) - p1;
  return {p1, p2};
}

Matrix kernel_of(const Matrix& a, double tolerance) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() == 0 ? 0.0 : tolerance * std::max(1.0, sv(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

}  // namespace friedrichs
