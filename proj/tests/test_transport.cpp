#include <doctest.h>

#include <cmath>
#include <vector>

#include "friedrichs/oracles.hpp"
#include "friedrichs/transport1d.hpp"
#include "helpers.hpp"

using namespace friedrichs;
using testutil::line2;

namespace {

const double kE = std::exp(1.0);
const double kInvE = std::exp(-1.0);

GridFunction smooth_rhs(int n) {
  return GridFunction::sample([](double x) { return std::cos(3.0 * x) + 2.0; }, n);
}

double l2_of(const GridFunction& g) {
  GridFunction sq = g;
  for (int i = 0; i <= g.n; ++i) sq[i] = g[i] * g[i];
  return std::sqrt(quadrature_grid(sq));
}

}  // namespace

TEST_CASE("trace model of the shifted derivative") {
  ModelPtr model = transport_model();
  CHECK(model->dim() == 2);
  CHECK(model->g_plus()(0, 0).real() == doctest::Approx(kE * kE - 1.0).epsilon(1e-14));
  CHECK(model->g_minus()(0, 0).real() == doctest::Approx(kInvE * kInvE - 1.0).epsilon(1e-14));
  // kernel traces: e^x -> (1, e), e^{-x} -> (1, 1/e); mutually form-orthogonal
  Vector plus = testutil::vec2(1.0, kE);
  Vector minus = testutil::vec2(1.0, kInvE);
  CHECK(model->kplus_space().contains(plus));
  CHECK(model->kminus_space().contains(minus));
  CHECK(std::abs(form_eval(model->form(), plus, minus)) < 1e-14);
}

TEST_CASE("realisation trace lines") {
  CHECK(realisation_subspace(1.0).space() == line2(1, 1));
  CHECK(realisation_subspace(Alpha::infinity()).space() == line2(0, 1));
  const double grid[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  for (double alpha : grid) {
    CAPTURE(alpha);
    CHECK(check_V(realisation_subspace(alpha)).all() == (std::abs(alpha) >= 1.0));
  }
  CHECK(check_V(realisation_subspace(Alpha::infinity())).all());
}

TEST_CASE("adjoint boundary condition is the reflected line") {
  ModelPtr model = transport_model();
  for (double alpha : {-2.0, -0.5, 2.0, 5.0}) {
    CAPTURE(alpha);
    CHECK(ortho_complement(model->form(), realisation_subspace(alpha).space()) ==
          line2(alpha, 1));
  }
}

TEST_CASE("solving the realisations by integrating factor") {
  GridFunction f = smooth_rhs(1024);
  std::vector<Alpha> alphas = {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, Alpha::infinity()};
  for (const Alpha& alpha : alphas) {
    CAPTURE(alpha.is_finite() ? alpha.value : std::nan(""));
    GridFunction u = solve_realisation(alpha, f);
    CHECK(transport_residual(alpha, u, f) < 1e-8);
    GridFunction u_shift = solve_realisation(alpha, f, 0.7);
    CHECK(transport_residual(alpha, u_shift, f, 0.7) < 1e-8);
  }

  CHECK_THROWS_AS(solve_realisation(kInvE, f), NotInvertible);
  CHECK_THROWS_AS(solve_realisation(std::exp(-2.0), f, 1.0), NotInvertible);
  CHECK_THROWS_AS(solve_realisation(2.0, f, -0.5), InvalidParameter);
}

TEST_CASE("absorbing inflow with unit forcing has the explicit solution") {
  // u' + u = 1, u(1) = 0  =>  u(x) = 1 - e^{1-x}
  GridFunction u = solve_realisation(0.0, GridFunction::constant(1.0, 1024));
  GridFunction exact = GridFunction::sample([](double x) { return 1.0 - std::exp(1.0 - x); }, 1024);
  double dev = 0.0;
  for (int i = 0; i <= 1024; ++i) dev = std::max(dev, std::abs(u[i] - exact[i]));
  CHECK(dev < 1e-9);
}

TEST_CASE("translation flow along characteristics") {
  GridFunction u0 = GridFunction::sample([](double x) { return std::sin(5.0 * x) + 2.0; }, 200);

  GridFunction still = semigroup_apply(0.5, u0, 0.0);
  for (int i = 0; i <= 200; ++i) CHECK(still[i] == u0[i]);

  // integer travel time multiplies by 1/alpha per wrap; the right endpoint is
  // excluded because the extension rule reads the original sample there (a
  // null set for the norm)
  GridFunction moved = semigroup_apply(0.5, u0, 2.0);
  for (int i = 0; i < 200; ++i) CHECK(moved[i] == doctest::Approx(4.0 * u0[i]).epsilon(1e-12));

  GridFunction inflow = semigroup_apply(Alpha::infinity(), u0, 0.5);
  CHECK(inflow[0] == 0.0);  // x - t < 0 region is zero-filled

  CHECK_THROWS_AS(semigroup_apply(0.0, u0, 1.0), NotAGenerator);
  CHECK_NOTHROW(semigroup_apply(0.0, GridFunction::constant(0.0, 8), 1.0));
  CHECK_THROWS_AS(semigroup_apply(0.5, u0, -1.0), InvalidParameter);
}

TEST_CASE("flow norms follow the wrap-count law") {
  CHECK(semigroup_norm(0.9, 3.0, 300) == doctest::Approx(std::pow(0.9, -3.0)).epsilon(1e-9));
  CHECK(semigroup_norm(-0.5, 1.0, 100) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(semigroup_norm(1.0, 0.5, 200) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(semigroup_norm(1.0, 2.0, 200) == doctest::Approx(1.0).epsilon(1e-9));
  for (double alpha : {-2.0, 2.0}) {
    for (double t : {0.5, 1.0}) {
      CAPTURE(alpha);
      CAPTURE(t);
      CHECK(semigroup_norm(alpha, t, 200) <= 1.0 + 1e-8);
    }
  }
  CHECK_THROWS_AS(semigroup_norm(0.0, 1.0, 100), NotAGenerator);
}

TEST_CASE("the full-operator flow obeys the perturbation growth bound") {
  // T = L + 1, so the T-flow is e^{-t} S(t) and its norm is at most e^t
  for (double alpha : {0.5, -0.9, 2.0}) {
    for (double t : {1.0, 2.0, 3.0}) {
      CAPTURE(alpha);
      CAPTURE(t);
      CHECK(semigroup_norm(alpha, t, 200) * std::exp(-t) <= std::exp(t) + 1e-8);
    }
  }
}

TEST_CASE("resolvent quadrature against antiderivatives") {
  GridFunction zero = resolvent_L0(2.0, GridFunction::constant(0.0, 256));
  CHECK(zero.max_abs() == 0.0);

  const double lambda = 1.0;
  GridFunction r = resolvent_L0(lambda, GridFunction::constant(1.0, 2048));
  CHECK(r[0] == doctest::Approx(1.0 - kInvE).epsilon(1e-12));
  for (int i = 0; i <= 2048; ++i) {
    const double x = i / 2048.0;
    const double exact = (1.0 - std::exp(lambda * (x - 1.0))) / lambda;
    CHECK(std::abs(r[i] - exact) < 1e-10);
  }

  CHECK_THROWS_AS(resolvent_L0(0.0, zero), InvalidParameter);
}

TEST_CASE("resolvent norm of unit forcing matches the closed forms") {
  for (double lambda : {1.0, 10.0, 100.0}) {
    CAPTURE(lambda);
    GridFunction r = resolvent_L0(lambda, GridFunction::constant(1.0, 8192));
    CHECK(std::abs(l2_of(r) - resolvent_rhs1_norm(lambda)) < 1e-8);
  }
  // at lambda = 1 the growth-trend expression coincides with the true norm
  GridFunction r1 = resolvent_L0(1.0, GridFunction::constant(1.0, 8192));
  const double nsq = l2_of(r1) * l2_of(r1);
  CHECK(std::abs(nsq - resolvent_norm_formula(1.0) * resolvent_norm_formula(1.0)) < 1e-8);
  CHECK(nsq == doctest::Approx(0.16809124).epsilon(1e-5));
}

TEST_CASE("scaled resolvent norms grow without bound") {
  HYReport rep = hille_yosida_violation({1.0, 10.0, 100.0, 10000.0});
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.rows[0].scaled == doctest::Approx(0.410).epsilon(2e-3));
  CHECK(rep.rows[2].scaled == doctest::Approx(12.2066).epsilon(1e-3));
  CHECK(rep.rows[3].scaled == doctest::Approx(122.47).epsilon(1e-3));
  CHECK(rep.strictly_increasing);
  CHECK(rep.unbounded_trend);

  CHECK_THROWS_AS(hille_yosida_violation({10.0, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(hille_yosida_violation({-1.0, 1.0}), InvalidParameter);
}

TEST_CASE("two-parameter boundary operator family") {
  for (Alpha alpha : std::vector<Alpha>{-2.0, 2.0, Alpha::infinity()}) {
    MOperatorMat lhs = m_alpha_r(alpha, 0.0);
    MOperatorMat rhs = m_from_v(realisation_subspace(alpha));
    CHECK((lhs.mat() - rhs.mat()).cwiseAbs().maxCoeff() < 1e-12);
  }

  MOperatorMat m = m_alpha_r(2.0, 0.3);
  CHECK(check_M(m).m1);
  CHECK(check_M(m).m2);
  CHECK(check_M(m).kernel_range_ok);
  VFromM rec = v_from_m(m);
  CHECK(rec.v.space() == line2(1, 2));
  CHECK(rec.w2class.space() == line2(1.0 + 0.3, kInvE + 0.3 * kE));

  CHECK_THROWS_AS(m_alpha_r(1.0, kInvE), NotADirectSum);
  CHECK_THROWS_AS(m_alpha_r(-1.0, -kInvE), NotADirectSum);
  CHECK_THROWS_AS(m_alpha_r(2.0, 0.4), InvalidW2);
}

TEST_CASE("trace form equals the integration-by-parts pairing") {
  ClosedForm u;
  u.add_exp(1.0, 2.0).add_exp(0.3, -1.0);
  ClosedForm v;
  v.add_exp(1.0, 1.0).add_exp(-2.0, -2.0);
  ClosedForm du = u.derivative();
  ClosedForm dv = v.derivative();
  const double pairing = quadrature(
      [&](double x) { return du.eval(x) * v.eval(x) + u.eval(x) * dv.eval(x); }, 0.0, 1.0, 2048);
  const double boundary = u.trace1() * v.trace1() - u.trace0() * v.trace0();
  CHECK(std::abs(pairing - boundary) < 1e-8);
}

TEST_CASE("sweep rows aggregate the per-parameter facts") {
  SweepRow row = transport_sweep_row(2.0, 256);
  CHECK(row.bijective);
  CHECK(row.signed_map);
  CHECK(row.m_accretive);
  CHECK(row.u_norm == doctest::Approx((kE - 2.0) / (kE * (2.0 - kInvE))).epsilon(1e-9));
  CHECK(row.semigroup_norm_t1 <= 1.0 + 1e-8);

  SweepRow absorbing = transport_sweep_row(0.0, 256);
  CHECK(absorbing.bijective);
  CHECK_FALSE(absorbing.signed_map);
  CHECK(absorbing.u_norm == doctest::Approx(kE).epsilon(1e-9));
  CHECK(std::isnan(absorbing.semigroup_norm_t1));

  SweepRow singular = transport_sweep_row(kInvE, 256);
  CHECK_FALSE(singular.bijective);
  CHECK(std::isnan(singular.u_norm));
}
