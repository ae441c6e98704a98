#pragma once

#include <vector>

#include "friedrichs/boundary_model.hpp"
#include "friedrichs/functions.hpp"

namespace friedrichs {

/// Boundary model of d/dx + 1 on L2((0,1)): trace coordinates (u(0), u(1)),
/// form [u,v] = u(1)v(1) - u(0)v(0), kernel traces e^x and e^{-x}.
ModelPtr transport_model();

/// Trace line of {u : u(1) = alpha u(0)} (or u(0) = 0 for alpha = inf).
BCSubspace realisation_subspace(Alpha alpha);

/// Solve (T^alpha + shift) u = u' + (1 + shift) u = f by integrating factor.
GridFunction solve_realisation(Alpha alpha, const GridFunction& f, double shift = 0.0);

/// Grid norm of the integral-form residual u(x) - u(0) + (1+shift) int_0^x u - int_0^x f.
double transport_residual(Alpha alpha, const GridFunction& u, const GridFunction& f,
                          double shift = 0.0);

/// Translation semigroup sample: (S(t)u0)(x) = u0(x - t), extended backward by
/// one factor alpha^{-1} per unit of travel (zero inflow for alpha = inf).
GridFunction semigroup_apply(Alpha alpha, const GridFunction& u0, double t);

/// Operator-norm estimate of S(t) on the grid (exact sampling when t*n is an
/// integer, linear interpolation otherwise).
double semigroup_norm(Alpha alpha, double t, int n_grid);

/// R(lambda, L0) f(x) = int_x^1 e^{lambda(x-y)} f(y) dy, product quadrature.
GridFunction resolvent_L0(double lambda, const GridFunction& f);

/// Closed-form L2 norm of R(lambda, L0)(1); the quadrature must reproduce it.
double resolvent_rhs1_norm(double lambda);

/// Lower-bound expression driving the growth trend of lambda * ||R(lambda)||;
/// agrees with resolvent_rhs1_norm at lambda = 1 and grows like sqrt(3/(2 lambda)).
double resolvent_norm_formula(double lambda);

struct HYRow {
  double lambda = 0.0;
  double lower_bound = 0.0;
  double scaled = 0.0;  // lambda * lower_bound
};

struct HYReport {
  std::vector<HYRow> rows;
  bool strictly_increasing = false;
  bool unbounded_trend = false;  // last scaled value > 10
};

/// lambda * ||R(lambda)|| lower bounds over an increasing lambda list; a
/// bounded sequence is what the Hille-Yosida condition would require.
HYReport hille_yosida_violation(const std::vector<double>& lambdas);

/// The full family of M-operators for dom T^alpha, parameterized by the
/// complement line W2^r spanned by the traces of e^{-x} + r e^x, |r| <= 1/e.
MOperatorMat m_alpha_r(Alpha alpha, double r);

struct SweepRow {
  Alpha alpha{0.0};
  bool bijective = false;
  bool signed_map = false;
  bool m_accretive = false;
  double u_norm = 0.0;  // NaN when not bijective
  double semigroup_norm_t1 = 0.0;  // NaN when not a generator
};

SweepRow transport_sweep_row(Alpha alpha, int n_grid);

}  // namespace friedrichs
