#include "friedrichs/elliptic1d.hpp"

#include <cmath>

namespace friedrichs {

namespace {

constexpr double kE = 2.718281828459045235360287471353;
constexpr double kInvE = 1.0 / kE;
const double kSinh1 = std::sinh(1.0);
const double kCosh1 = std::cosh(1.0);

}  // namespace

BoundaryTrace4 traces_of(const EllipticPair& pair) {
  BoundaryTrace4 t;
  t.p0 = pair.p.trace0();
  t.p1 = pair.p.trace1();
  t.u0 = pair.u.trace0();
  t.u1 = pair.u.trace1();
  return t;
}

ModelPtr elliptic_model() {
  static const ModelPtr model = [] {
    Matrix j = Matrix::Zero(4, 4);
    j(0, 2) = -1.0;
    j(2, 0) = -1.0;
    j(1, 3) = 1.0;
    j(3, 1) = 1.0;
    // ker T1: p = -u', u in {e^x, e^{-x}}; ker of the partner: p = u'.
    Matrix kminus(4, 2), kplus(4, 2);
    kminus.col(0) << -1.0, -kE, 1.0, kE;
    kminus.col(1) << 1.0, kInvE, 1.0, kInvE;
    kplus.col(0) << 1.0, kE, 1.0, kE;
    kplus.col(1) << -1.0, -kInvE, 1.0, kInvE;
    return std::make_shared<const BoundaryModel>(std::move(j), std::move(kplus),
                                                 std::move(kminus));
  }();
  return model;
}

DirichletReport dirichlet_subspace() {
  Matrix basis = Matrix::Zero(4, 2);
  basis(0, 0) = 1.0;
  basis(1, 1) = 1.0;
  BCSubspace space(elliptic_model(), Subspace(4, basis));
  DirichletReport report{space, false, false};
  report.self_dual = ortho_complement(space.model()->form(), space.space()) == space.space();
  report.maximal = check_X(space);
  return report;
}

ClosedForm solve_homog_dirichlet(double g0, double g1) {
  // (g1 sinh x + g0 sinh(1-x)) / sinh 1
  ClosedForm w;
  w.add_exp(g1 / (2.0 * kSinh1), 1.0);
  w.add_exp(-g1 / (2.0 * kSinh1), -1.0);
  w.add_exp(-g0 * kInvE / (2.0 * kSinh1), 1.0);
  w.add_exp(g0 * kE / (2.0 * kSinh1), -1.0);
  return w;
}

std::pair<double, double> dtn(double g0, double g1) {
  const double d0 = (g0 * kCosh1 - g1) / kSinh1;
  const double d1 = (g1 * kCosh1 - g0) / kSinh1;
  return {d0, d1};
}

MOperatorMat m_dirichlet(MDirichletKind kind) {
  if (kind == MDirichletKind::kernel_projector) return m_from_v(dirichlet_subspace().space);
  // <Mu, v> = <Tn p, T0 v> - <Tn q, T0 u> + 2 <Tn grad w_u, T0 v>
  Matrix m = Matrix::Zero(4, 4);
  m(2, 0) = -1.0;  // -p0 v0
  m(3, 1) = 1.0;   // p1 v1
  m(0, 2) = 1.0;   // q0 u0
  m(1, 3) = -1.0;  // -q1 u1
  const auto [d0_of_u0, d1_of_u0] = dtn(1.0, 0.0);
  const auto [d0_of_u1, d1_of_u1] = dtn(0.0, 1.0);
  m(2, 2) += 2.0 * d0_of_u0;
  m(2, 3) += 2.0 * d0_of_u1;
  m(3, 2) += 2.0 * d1_of_u0;
  m(3, 3) += 2.0 * d1_of_u1;
  return MOperatorMat(elliptic_model(), std::move(m));
}

MOperatorMat m_alpha(double alpha) {
  if (alpha < 0.0) throw InvalidParameter("m_alpha: alpha must be nonnegative");
  Matrix m = Matrix::Zero(4, 4);
  m(2, 0) = -1.0;
  m(3, 1) = 1.0;
  m(0, 2) = 1.0;
  m(1, 3) = -1.0;
  m(2, 2) += 2.0 * alpha;
  m(3, 3) += 2.0 * alpha;
  return MOperatorMat(elliptic_model(), std::move(m));
}

ClosedForm solve_neumann(double u0t, double u1t) {
  // (u1t cosh x + u0t cosh(1-x)) / sinh 1
  ClosedForm v;
  v.add_exp(u1t / (2.0 * kSinh1), 1.0);
  v.add_exp(u1t / (2.0 * kSinh1), -1.0);
  v.add_exp(u0t * kInvE / (2.0 * kSinh1), 1.0);
  v.add_exp(u0t * kE / (2.0 * kSinh1), -1.0);
  return v;
}

W2AlphaReport w2_alpha(double alpha) {
  if (alpha < 0.0) throw InvalidParameter("w2_alpha: alpha must be nonnegative");
  Matrix basis = Matrix::Zero(4, 2);
  basis.col(0) << alpha, 0.0, 1.0, 0.0;   // (u0, u1) = (1, 0)
  basis.col(1) << 0.0, -alpha, 0.0, 1.0;  // (u0, u1) = (0, 1)
  const ModelPtr model = elliptic_model();
  W2AlphaReport report{BCSubspace(model, Subspace(4, basis)), false, false};
  report.in_nonpos_cone = cone_check(model->form(), report.space.space(), ConeSign::nonpos);
  Matrix stacked(4, 4);
  stacked << dirichlet_subspace().space.space().basis(), report.space.space().basis();
  report.complements_dirichlet = Subspace(4, stacked).dim() == 4;
  return report;
}

}  // namespace friedrichs
