#include "friedrichs/transport1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "friedrichs/oracles.hpp"

namespace friedrichs {

namespace {

constexpr double kE = 2.718281828459045235360287471353;
constexpr double kInvE = 1.0 / kE;

}  // namespace

ModelPtr transport_model() {
  static const ModelPtr model = [] {
    Matrix j = Matrix::Zero(2, 2);
    j(0, 0) = -1.0;
    j(1, 1) = 1.0;
    Matrix kplus(2, 1), kminus(2, 1);
    kplus << 1.0, kE;      // traces of e^x
    kminus << 1.0, kInvE;  // traces of e^{-x}
    return std::make_shared<const BoundaryModel>(std::move(j), std::move(kplus),
                                                 std::move(kminus));
  }();
  return model;
}

BCSubspace realisation_subspace(Alpha alpha) {
  Matrix line(2, 1);
  if (alpha.is_finite())
    line << 1.0, alpha.value;
  else
    line << 0.0, 1.0;
  return BCSubspace(transport_model(), Subspace(2, line));
}

GridFunction solve_realisation(Alpha alpha, const GridFunction& f, double shift) {
  if (shift < 0.0) throw InvalidParameter("solve_realisation: shift must be nonnegative");
  const double kappa = 1.0 + shift;
  const double h = f.h();
  std::vector<double> weighted(f.values.size());
  for (int i = 0; i <= f.n; ++i) weighted[static_cast<std::size_t>(i)] = std::exp(kappa * i * h) * f[i];
  std::vector<double> running = cumulative_integral(weighted, h);

  double c = 0.0;
  if (alpha.is_finite()) {
    const double singular = std::exp(-kappa);
    if (std::abs(alpha.value - singular) < 1e-12)
      throw NotInvertible("solve_realisation: boundary condition hits the singular value");
    c = singular * running.back() / (alpha.value - singular);
  }
  GridFunction u = GridFunction::constant(0.0, f.n);
  for (int i = 0; i <= f.n; ++i)
    u[i] = std::exp(-kappa * i * h) * (c + running[static_cast<std::size_t>(i)]);
  return u;
}

double transport_residual(Alpha alpha, const GridFunction& u, const GridFunction& f,
                          double shift) {
  (void)alpha;
  const double kappa = 1.0 + shift;
  const double h = u.h();
  std::vector<double> int_u = cumulative_integral(u.values, h);
  std::vector<double> int_f = cumulative_integral(f.values, h);
  GridFunction residual = GridFunction::constant(0.0, u.n);
  for (int i = 0; i <= u.n; ++i)
    residual[i] = u[i] - u[0] + kappa * int_u[static_cast<std::size_t>(i)] -
                  int_f[static_cast<std::size_t>(i)];
  return grid_norm(residual);
}

GridFunction semigroup_apply(Alpha alpha, const GridFunction& u0, double t) {
  if (t < 0.0) throw InvalidParameter("semigroup_apply: t must be nonnegative");
  if (t == 0.0) return u0;
  if (alpha.is_finite() && alpha.value == 0.0) {
    if (!u0.is_zero())
      throw NotAGenerator("semigroup_apply: alpha = 0 admits only the zero trajectory");
    return u0;
  }
  const int n = u0.n;
  const double h = u0.h();
  GridFunction out = GridFunction::constant(0.0, n);
  for (int i = 0; i <= n; ++i) {
    double s = i * h - t;
    int wraps = 0;
    if (s < 0.0) {
      wraps = static_cast<int>(std::ceil(-s - 1e-12));
      s += wraps;
      s = std::clamp(s, 0.0, 1.0);
    }
    double factor = 1.0;
    if (wraps > 0) {
      if (!alpha.is_finite()) {
        out[i] = 0.0;
        continue;
      }
      factor = std::pow(alpha.value, -wraps);
    }
    const double position = s / h;
    const int node = static_cast<int>(std::lround(position));
    if (std::abs(position - node) <= 1e-9) {
      out[i] = factor * u0[std::clamp(node, 0, n)];
    } else {
      const int lo = std::clamp(static_cast<int>(std::floor(position)), 0, n - 1);
      const double theta = position - lo;
      out[i] = factor * ((1.0 - theta) * u0[lo] + theta * u0[lo + 1]);
    }
  }
  return out;
}

double semigroup_norm(Alpha alpha, double t, int n_grid) {
  if (t < 0.0) throw InvalidParameter("semigroup_norm: t must be nonnegative");
  if (t == 0.0) return 1.0;
  if (alpha.is_finite() && alpha.value == 0.0)
    throw NotAGenerator("semigroup_norm: alpha = 0 is not a generator");
  // Half-open node grid 0..n-1 with uniform weights: the right endpoint is a
  // null set and including it would let seam nodes (characteristics landing
  // exactly on x = 1) inflate the estimate.
  const int n = n_grid;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  GridFunction basis = GridFunction::constant(0.0, n);
  for (int j = 0; j < n; ++j) {
    basis[j] = 1.0;
    GridFunction column = semigroup_apply(alpha, basis, t);
    for (int i = 0; i < n; ++i) a(i, j) = column[i];
    basis[j] = 0.0;
  }
  return opnorm_estimate(a, 400);
}

GridFunction resolvent_L0(double lambda, const GridFunction& f) {
  if (!(lambda > 0.0)) throw InvalidParameter("resolvent_L0: lambda must be positive");
  const int n = f.n;
  const double h = f.h();
  const double decay = std::exp(-lambda * h);
  // One panel at a time from the right: u_i = decay * u_{i+1} + int_0^h
  // e^{-lambda s} q(s) ds with q the local quadratic interpolant of f.
  // Exponential moments on [0, h]:
  const double m0 = (1.0 - decay) / lambda;
  const double m1 = (m0 - h * decay) / lambda;
  const double m2 = (2.0 * m1 - h * h * decay) / lambda;

  GridFunction u = GridFunction::constant(0.0, n);
  for (int i = n - 1; i >= 0; --i) {
    double a, b, c;
    if (i + 2 <= n) {
      a = f[i];
      b = (-3.0 * f[i] + 4.0 * f[i + 1] - f[i + 2]) / (2.0 * h);
      c = (f[i] - 2.0 * f[i + 1] + f[i + 2]) / (2.0 * h * h);
    } else {
      a = f[i];
      b = (f[i + 1] - f[i - 1]) / (2.0 * h);
      c = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (2.0 * h * h);
    }
    const double panel = a * m0 + b * m1 + c * m2;
    u[i] = decay * u[i + 1] + panel;
  }
  return u;
}

double resolvent_rhs1_norm(double lambda) {
  const double e_l = std::exp(-lambda);
  // ||(1 - e^{lambda(x-1)}) / lambda||^2 expanded by antiderivatives
  const double sq =
      (2.0 * lambda - 3.0 + 4.0 * e_l - e_l * e_l) / (2.0 * lambda * lambda * lambda);
  return std::sqrt(sq);
}

double resolvent_norm_formula(double lambda) {
  const double e_l = std::exp(-lambda);
  const double bracket = 1.0 - 2.0 / (3.0 * lambda) - 4.0 / 3.0 * e_l + 1.0 / 3.0 * e_l * e_l;
  return std::sqrt(3.0 / (2.0 * lambda) * std::abs(bracket));
}

HYReport hille_yosida_violation(const std::vector<double>& lambdas) {
  HYReport report;
  for (double lambda : lambdas) {
    if (!(lambda > 0.0))
      throw InvalidParameter("hille_yosida_violation: lambda values must be positive");
    HYRow row;
    row.lambda = lambda;
    row.lower_bound = resolvent_norm_formula(lambda);
    row.scaled = lambda * row.lower_bound;
    report.rows.push_back(row);
  }
  report.strictly_increasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].lambda <= report.rows[i - 1].lambda)
      throw InvalidParameter("hille_yosida_violation: lambda list must increase");
    if (report.rows[i].scaled <= report.rows[i - 1].scaled) report.strictly_increasing = false;
  }
  report.unbounded_trend = !report.rows.empty() && report.rows.back().scaled > 10.0;
  return report;
}

MOperatorMat m_alpha_r(Alpha alpha, double r) {
  if (std::abs(r) > kInvE + 1e-12)
    throw InvalidW2("m_alpha_r: |r| > 1/e puts W2^r outside the non-positive cone");
  if (alpha.is_finite() &&
      ((alpha.value == 1.0 && std::abs(r - kInvE) < 1e-12) ||
       (alpha.value == -1.0 && std::abs(r + kInvE) < 1e-12)))
    throw NotADirectSum("m_alpha_r: exceptional pair, W2^r lies inside dom T^alpha");

  const double w2_at_0 = 1.0 + r;        // trace at x = 0 of e^{-x} + r e^x
  const double w2_at_1 = kInvE + r * kE;  // trace at x = 1
  double k0, k1;
  if (alpha.is_finite()) {
    const double denom = w2_at_1 - alpha.value * w2_at_0;
    if (std::abs(denom) < 1e-12)
      throw NotADirectSum("m_alpha_r: dom T^alpha and W2^r do not span");
    k0 = -alpha.value / denom;
    k1 = 1.0 / denom;
  } else {
    k0 = 1.0 / w2_at_0;
    k1 = 0.0;
  }
  Matrix m(2, 2);
  m(0, 0) = -(1.0 - 2.0 * k0 * w2_at_0);
  m(0, 1) = 2.0 * k1 * w2_at_0;
  m(1, 0) = -2.0 * k0 * w2_at_1;
  m(1, 1) = 1.0 - 2.0 * k1 * w2_at_1;
  return MOperatorMat(transport_model(), std::move(m));
}

SweepRow transport_sweep_row(Alpha alpha, int n_grid) {
  SweepRow row;
  row.alpha = alpha;
  BCSubspace domain = realisation_subspace(alpha);
  row.m_accretive = is_m_accretive(domain);
  try {
    ContractionResult result = contraction_from_v(domain);
    row.bijective = true;
    row.u_norm = result.norm;
    row.signed_map = result.norm <= 1.0 + tol::cone;
  } catch (const NotBijectiveRealisation&) {
    row.bijective = false;
    row.signed_map = false;
    row.u_norm = std::numeric_limits<double>::quiet_NaN();
  }
  if (!alpha.is_finite() || alpha.value != 0.0)
    row.semigroup_norm_t1 = semigroup_norm(alpha, 1.0, n_grid);
  else
    row.semigroup_norm_t1 = std::numeric_limits<double>::quiet_NaN();
  return row;
}

}  // namespace friedrichs
