#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "friedrichs/errors.hpp"

namespace friedrichs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double rank = 1e-10;          // rank / eigenvalue threshold
inline constexpr double hermitian = 1e-12;     // Gram symmetry tolerance
inline constexpr double subspace_eq = 1e-10;   // projector comparison
inline constexpr double cone = 1e-10;          // semidefiniteness slack
inline constexpr double cond_guard = 1e8;      // direct-sum condition cap
}  // namespace tol

enum class ConeSign { nonneg, nonpos };

/// Eigenvalue inertia of a Hermitian form.
struct Signature {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
};

/// A nondegenerate Hermitian indefinite inner product on C^dim,
/// [x,y] = y* J x (conjugate-linear in the second slot).
class IndefForm {
 public:
  explicit IndefForm(Matrix gram);

  int dim() const { return static_cast<int>(gram_.rows()); }
  const Matrix& gram() const { return gram_; }

 private:
  Matrix gram_;
};

/// Subspace of C^n, canonicalized to a Euclidean-orthonormal basis via
/// column-pivoted orthogonalization. Identity is the orthogonal projector.
class Subspace {
 public:
  Subspace(int ambient_dim, const Matrix& spanning);

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }
  Matrix projector() const { return basis_ * basis_.adjoint(); }
  bool contains(const Vector& v, double tolerance = tol::subspace_eq) const;

 private:
  int ambient_dim_;
  Matrix basis_;  // ambient_dim x k, orthonormal columns
};

bool operator==(const Subspace& a, const Subspace& b);
inline bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

Complex form_eval(const IndefForm& f, const Vector& x, const Vector& y);

/// [.,.]-orthogonal complement of x. dim result = dim ambient - dim x.
Subspace ortho_complement(const IndefForm& f, const Subspace& x);

/// Is the form semidefinite of the given sign on x?
bool cone_check(const IndefForm& f, const Subspace& x, ConeSign sign);

/// Semidefinite of the given sign and of maximal dimension
/// (n_plus for nonneg, n_minus for nonpos).
bool is_maximal_semidefinite(const IndefForm& f, const Subspace& x, ConeSign sign);

Signature signature(const IndefForm& f);

/// Oblique projectors (P1, P2) with ran P1 = x, ker P1 = y, P1 + P2 = I.
/// Requires x (+) y = ambient space.
std::pair<Matrix, Matrix> projector_pair(const Subspace& x, const Subspace& y);

/// Orthonormal basis of the null space of a, singular values below
/// tolerance * max_sv treated as zero.
Matrix kernel_of(const Matrix& a, double tolerance = tol::rank);

}  // namespace friedrichs
