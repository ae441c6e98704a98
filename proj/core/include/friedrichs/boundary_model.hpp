#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

#include "friedrichs/krein.hpp"

namespace friedrichs {

/// Finite-dimensional boundary quotient of a joint operator pair: the ambient
/// coordinates carry the boundary form J, and two distinguished kernel blocks
/// K+ (form positive definite) and K- (form negative definite) span the space
/// and are mutually form-orthogonal.
class BoundaryModel {
 public:
  BoundaryModel(Matrix gram, Matrix kplus_basis, Matrix kminus_basis);

  int dim() const { return form_.dim(); }
  int kplus_dim() const { return static_cast<int>(kplus_basis_.cols()); }
  int kminus_dim() const { return static_cast<int>(kminus_basis_.cols()); }

  const IndefForm& form() const { return form_; }
  /// Raw (not re-normalized) kernel bases; the compressed Grams below are
  /// taken with respect to exactly these columns.
  const Matrix& kplus_basis() const { return kplus_basis_; }
  const Matrix& kminus_basis() const { return kminus_basis_; }
  const Matrix& g_plus() const { return g_plus_; }
  const Matrix& g_minus() const { return g_minus_; }

  Subspace kplus_space() const { return Subspace(dim(), kplus_basis_); }
  Subspace kminus_space() const { return Subspace(dim(), kminus_basis_); }

 private:
  IndefForm form_;
  Matrix kplus_basis_;
  Matrix kminus_basis_;
  Matrix g_plus_;
  Matrix g_minus_;
};

using ModelPtr = std::shared_ptr<const BoundaryModel>;

/// A realisation domain, viewed in the boundary quotient.
class BCSubspace {
 public:
  BCSubspace(ModelPtr model, Subspace space);

  const ModelPtr& model() const { return model_; }
  const Subspace& space() const { return space_; }

 private:
  ModelPtr model_;
  Subspace space_;
};

/// Boundary matrix of an M-operator; the pairing <Mu, v> is v* mat u.
class MOperatorMat {
 public:
  MOperatorMat(ModelPtr model, Matrix mat);

  const ModelPtr& model() const { return model_; }
  const Matrix& mat() const { return mat_; }

 private:
  ModelPtr model_;
  Matrix mat_;
};

/// Classifying map (K+, [.,.]) -> (K-, -[.,.]), entries with respect to the
/// model's raw kernel bases.
class ContractionU {
 public:
  ContractionU(ModelPtr model, Matrix mat);

  const ModelPtr& model() const { return model_; }
  const Matrix& mat() const { return mat_; }

  /// Operator norm in the form-induced inner products sqrt(g+) and sqrt(-g-).
  double norm() const;
  bool is_signed() const { return norm() <= 1.0 + tol::cone; }
  /// U*(-g-)U = g+ up to tolerance.
  bool is_unitary() const;

 private:
  ModelPtr model_;
  Matrix mat_;
};

struct VChecks {
  bool v1_on_v = false;
  bool v1_on_vperp = false;
  bool v2 = false;
  bool all() const { return v1_on_v && v1_on_vperp && v2; }
};

struct MChecks {
  bool m1 = false;
  bool m2 = false;
  bool kernel_range_ok = false;
  bool all() const { return m1 && m2 && kernel_range_ok; }
};

struct ContractionResult {
  ContractionU u;
  double norm = 0.0;
};

struct VFromM {
  BCSubspace v;
  BCSubspace vperp;
  BCSubspace w2class;
};

/// Graph subspace {x + Ux : x in K+}.
BCSubspace v_from_contraction(const ContractionU& u);

/// Inverse of v_from_contraction; requires v (+) K- = boundary space.
ContractionResult contraction_from_v(const BCSubspace& v);

VChecks check_V(const BCSubspace& v);
bool check_X(const BCSubspace& v);
bool is_m_accretive(const BCSubspace& v);

/// M = J(I - 2 P2) for the decomposition v (+) w2; default w2 is the K- block.
MOperatorMat m_from_v(const BCSubspace& v, const std::optional<BCSubspace>& w2 = std::nullopt);

/// Kernels of J - M, J + M*, J + M.
VFromM v_from_m(const MOperatorMat& m);

MChecks check_M(const MOperatorMat& m);

/// (matrices equal, ker(J+M) equal); the two must agree for valid inputs.
std::pair<bool, bool> m_equal_iff_w2_equal(const MOperatorMat& m, const MOperatorMat& m_prime);

/// Deterministic generators for property suites.
ModelPtr random_model(std::uint64_t seed, int kplus_dim, int kminus_dim);
ContractionU random_contraction(std::uint64_t seed, const ModelPtr& model, double norm_cap);

}  // namespace friedrichs
