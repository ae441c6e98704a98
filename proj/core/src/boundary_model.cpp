#include "friedrichs/boundary_model.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <random>

namespace friedrichs {

namespace {

bool is_positive_definite(const Matrix& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(g, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() > tol::rank;
}

// splitmix64 + Box-Muller; std::normal_distribution is not
// implementation-stable, and reports must reproduce bit-exactly per seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  double uniform() {  // in (0, 1)
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    const double u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
  }

  Complex cnormal() { return {normal(), normal()}; }

 private:
  std::uint64_t state_;
};

Matrix random_complex(Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
  return m;
}

void require_same_model(const ModelPtr& a, const ModelPtr& b) {
  if (a != b) throw InvalidDimension("operands refer to different boundary models");
}

}  // namespace

BoundaryModel::BoundaryModel(Matrix gram, Matrix kplus_basis, Matrix kminus_basis)
    : form_(std::move(gram)),
      kplus_basis_(std::move(kplus_basis)),
      kminus_basis_(std::move(kminus_basis)) {
  const int n = form_.dim();
  if (kplus_basis_.rows() != n || kminus_basis_.rows() != n)
    throw InvalidDimension("BoundaryModel: kernel basis ambient dimension mismatch");
  if (kplus_basis_.cols() < 1 || kminus_basis_.cols() < 1)
    throw InvalidDimension("BoundaryModel: kernel blocks must be nontrivial");
  if (kplus_basis_.cols() + kminus_basis_.cols() != n)
    throw InvalidDimension("BoundaryModel: kernel blocks must span the boundary space");

  g_plus_ = kplus_basis_.adjoint() * form_.gram() * kplus_basis_;
  g_minus_ = kminus_basis_.adjoint() * form_.gram() * kminus_basis_;
  Matrix cross = kminus_basis_.adjoint() * form_.gram() * kplus_basis_;

  const double scale = std::max(1.0, form_.gram().norm());
  if (cross.norm() > tol::rank * scale)
    throw DegenerateForm("BoundaryModel: kernel blocks are not form-orthogonal");
  if (!is_positive_definite(g_plus_))
    throw DegenerateForm("BoundaryModel: form is not positive definite on the K+ block");
  if (!is_positive_definite(Matrix(-g_minus_)))
    throw DegenerateForm("BoundaryModel: form is not negative definite on the K- block");
}

BCSubspace::BCSubspace(ModelPtr model, Subspace space)
    : model_(std::move(model)), space_(std::move(space)) {
  if (space_.ambient_dim() != model_->dim())
    throw InvalidDimension("BCSubspace: ambient dimension mismatch");
}

MOperatorMat::MOperatorMat(ModelPtr model, Matrix mat)
    : model_(std::move(model)), mat_(std::move(mat)) {
  if (mat_.rows() != model_->dim() || mat_.cols() != model_->dim())
    throw InvalidDimension("MOperatorMat: matrix dimension mismatch");
}

ContractionU::ContractionU(ModelPtr model, Matrix mat)
    : model_(std::move(model)), mat_(std::move(mat)) {
  if (mat_.rows() != model_->kminus_dim() || mat_.cols() != model_->kplus_dim())
    throw InvalidDimension("ContractionU: matrix dimension mismatch");
}

double ContractionU::norm() const {
  Matrix a = mat_.adjoint() * (-model_->g_minus()) * mat_;
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> eig(a, model_->g_plus(),
                                                       Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  const double top = eig.eigenvalues().maxCoeff();
  return top <= 0.0 ? 0.0 : std::sqrt(top);
}

bool ContractionU::is_unitary() const {
  Matrix lhs = mat_.adjoint() * (-model_->g_minus()) * mat_;
  const double scale = std::max(1.0, model_->g_plus().norm());
  return (lhs - model_->g_plus()).norm() <= tol::subspace_eq * scale;
}

BCSubspace v_from_contraction(const ContractionU& u) {
  const auto& model = u.model();
  Matrix graph = model->kplus_basis() + model->kminus_basis() * u.mat();
  return BCSubspace(model, Subspace(model->dim(), graph));
}

ContractionResult contraction_from_v(const BCSubspace& v) {
  const auto& model = v.model();
  const int n = model->dim();
  const int kp = model->kplus_dim();
  if (v.space().dim() != kp)
    throw NotBijectiveRealisation("contraction_from_v: domain is not a graph over the K+ block");
  Matrix stacked(n, n);
  stacked << model->kplus_basis(), model->kminus_basis();
  Matrix coords = stacked.partialPivLu().solve(v.space().basis());
  Matrix c_plus = coords.topRows(kp);
  Matrix c_minus = coords.bottomRows(model->kminus_dim());
  Eigen::JacobiSVD<Matrix> svd(c_plus);
  const auto& sv = svd.singularValues();
  // transversality of V and K-: the K+ coordinate block of the domain basis
  // must be invertible relative to the overall coordinate scale
  const double scale = std::max(1.0, coords.norm());
  if (sv(sv.size() - 1) <= scale / tol::cond_guard)
    throw NotBijectiveRealisation("contraction_from_v: domain is not transversal to the K- block");
  Matrix u = c_minus * c_plus.partialPivLu().solve(Matrix::Identity(kp, kp));
  ContractionU result(model, u);
  const double norm = result.norm();
  return {std::move(result), norm};
}

VChecks check_V(const BCSubspace& v) {
  const auto& form = v.model()->form();
  VChecks checks;
  checks.v1_on_v = cone_check(form, v.space(), ConeSign::nonneg);
  Subspace complement = ortho_complement(form, v.space());
  checks.v1_on_vperp = cone_check(form, complement, ConeSign::nonpos);
  checks.v2 = ortho_complement(form, complement) == v.space();
  return checks;
}

bool check_X(const BCSubspace& v) {
  return is_maximal_semidefinite(v.model()->form(), v.space(), ConeSign::nonneg);
}

bool is_m_accretive(const BCSubspace& v) { return check_X(v); }

MOperatorMat m_from_v(const BCSubspace& v, const std::optional<BCSubspace>& w2) {
  const auto& model = v.model();
  Subspace complement = model->kminus_space();
  if (w2) {
    require_same_model(model, w2->model());
    if (!cone_check(model->form(), w2->space(), ConeSign::nonpos))
      throw InvalidW2("m_from_v: W2 is not non-positive for the boundary form");
    complement = w2->space();
  }
  auto [p1, p2] = projector_pair(v.space(), complement);
  Matrix m = model->form().gram() * (Matrix::Identity(model->dim(), model->dim()) - 2.0 * p2);
  return MOperatorMat(model, m);
}

VFromM v_from_m(const MOperatorMat& m) {
  if (!check_M(m).all()) throw NotMBoundary("v_from_m: operator fails (M)-boundary conditions");
  const auto& model = m.model();
  const Matrix& j = model->form().gram();
  const int n = model->dim();
  BCSubspace v(model, Subspace(n, kernel_of(j - m.mat())));
  BCSubspace vperp(model, Subspace(n, kernel_of(j + m.mat().adjoint().eval())));
  BCSubspace w2class(model, Subspace(n, kernel_of(j + m.mat())));
  return {std::move(v), std::move(vperp), std::move(w2class)};
}

MChecks check_M(const MOperatorMat& m) {
  const auto& model = m.model();
  const Matrix& j = model->form().gram();
  const int n = model->dim();
  MChecks checks;

  Matrix herm = 0.5 * (m.mat() + m.mat().adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
  checks.m1 = eig.eigenvalues().minCoeff() >= -tol::cone * std::max(1.0, m.mat().norm());

  Matrix ker_minus = kernel_of(j - m.mat());
  Matrix ker_plus = kernel_of(j + m.mat());
  Matrix stacked(n, ker_minus.cols() + ker_plus.cols());
  stacked << ker_minus, ker_plus;
  checks.m2 = Subspace(n, stacked).dim() == n;

  Eigen::JacobiSVD<Matrix> svd(m.mat());
  const auto& sv = svd.singularValues();
  checks.kernel_range_ok = sv(sv.size() - 1) > tol::rank * std::max(1.0, sv(0));
  return checks;
}

std::pair<bool, bool> m_equal_iff_w2_equal(const MOperatorMat& m, const MOperatorMat& m_prime) {
  require_same_model(m.model(), m_prime.model());
  const double scale = std::max({1.0, m.mat().norm(), m_prime.mat().norm()});
  const bool mats_equal = (m.mat() - m_prime.mat()).cwiseAbs().maxCoeff() <= tol::subspace_eq * scale;
  const Matrix& j = m.model()->form().gram();
  const int n = m.model()->dim();
  Subspace w2(n, kernel_of(j + m.mat()));
  Subspace w2_prime(n, kernel_of(j + m_prime.mat()));
  return {mats_equal, w2 == w2_prime};
}

ModelPtr random_model(std::uint64_t seed, int kplus_dim, int kminus_dim) {
  if (kplus_dim < 1 || kminus_dim < 1)
    throw InvalidParameter("random_model: kernel dimensions must be positive");
  Rng rng(seed);
  Matrix a = random_complex(rng, kplus_dim, kplus_dim);
  Matrix b = random_complex(rng, kminus_dim, kminus_dim);
  Matrix g_plus = a.adjoint() * a + 0.1 * Matrix::Identity(kplus_dim, kplus_dim);
  Matrix g_minus = -(b.adjoint() * b + 0.1 * Matrix::Identity(kminus_dim, kminus_dim));
  const int n = kplus_dim + kminus_dim;
  Matrix j = Matrix::Zero(n, n);
  j.topLeftCorner(kplus_dim, kplus_dim) = g_plus;
  j.bottomRightCorner(kminus_dim, kminus_dim) = g_minus;
  Matrix kplus = Matrix::Identity(n, n).leftCols(kplus_dim);
  Matrix kminus = Matrix::Identity(n, n).rightCols(kminus_dim);
  return std::make_shared<BoundaryModel>(std::move(j), std::move(kplus), std::move(kminus));
}

ContractionU random_contraction(std::uint64_t seed, const ModelPtr& model, double norm_cap) {
  Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  if (norm_cap == 0.0)
    return ContractionU(model, Matrix::Zero(model->kminus_dim(), model->kplus_dim()));
  Matrix g = random_complex(rng, model->kminus_dim(), model->kplus_dim());
  ContractionU raw(model, g);
  const double raw_norm = raw.norm();
  if (raw_norm == 0.0) return raw;
  return ContractionU(model, Matrix(g * (norm_cap / raw_norm)));
}

}  // namespace friedrichs
