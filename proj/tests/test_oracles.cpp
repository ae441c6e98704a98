#include <doctest.h>

#include <cmath>
#include <vector>

#include "friedrichs/oracles.hpp"
#include "friedrichs/transport1d.hpp"
#include "helpers.hpp"

using namespace friedrichs;

namespace {

const double kE = std::exp(1.0);
const double kSinh1 = std::sinh(1.0);

double fd_error(BVPKind kind, double g0, double g1, int n) {
  GridFunction w = fd_solve_bvp(kind, g0, g1, n);
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    const double exact = kind == BVPKind::dirichlet
                             ? (g1 * std::sinh(x) + g0 * std::sinh(1.0 - x)) / kSinh1
                             : (g1 * std::cosh(x) + g0 * std::cosh(1.0 - x)) / kSinh1;
    worst = std::max(worst, std::abs(w[i] - exact));
  }
  return worst;
}

}  // namespace

TEST_CASE("composite quadrature") {
  CHECK(quadrature([](double) { return 1.0; }, 0.0, 1.0, 8) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(quadrature([](double y) { return std::exp(2.0 * y); }, 0.0, 1.0, 256) -
                 (kE * kE - 1.0) / 2.0) < 1e-8);
  CHECK(std::abs(quadrature([](double y) { return std::sinh(y); }, 0.0, 1.0, 256) -
                 (std::cosh(1.0) - 1.0)) < 1e-8);
  CHECK(quadrature([](double y) { return std::exp(2.0 * y); }, 0.0, 1.0, 256) ==
        doctest::Approx(3.194528).epsilon(1e-6));

  CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 0.0, 1.0, 3), InvalidParameter);
  CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 1.0, 0.0, 8), InvalidParameter);
}

TEST_CASE("quadrature over grid samples handles both parities") {
  GridFunction even = GridFunction::sample([](double y) { return std::exp(2.0 * y); }, 256);
  CHECK(std::abs(quadrature_grid(even) - (kE * kE - 1.0) / 2.0) < 1e-8);
  GridFunction odd = GridFunction::sample([](double y) { return std::exp(2.0 * y); }, 255);
  CHECK(std::abs(quadrature_grid(odd) - (kE * kE - 1.0) / 2.0) < 1e-8);
}

TEST_CASE("trapezoid grid norm") {
  CHECK(grid_norm(GridFunction::constant(1.0, 64)) == doctest::Approx(1.0).epsilon(1e-14));
  GridFunction lin = GridFunction::sample([](double x) { return x; }, 2000);
  CHECK(grid_norm(lin) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-6));
}

TEST_CASE("running integrals") {
  const int n = 1000;
  const double h = 1.0 / n;
  std::vector<double> f(n + 1);
  for (int i = 0; i <= n; ++i) f[static_cast<std::size_t>(i)] = std::cos(i * h);
  std::vector<double> cum = cumulative_integral(f, h);
  double worst = 0.0;
  for (int i = 0; i <= n; ++i)
    worst = std::max(worst, std::abs(cum[static_cast<std::size_t>(i)] - std::sin(i * h)));
  CHECK(worst < 1e-7);
  CHECK(cum[0] == 0.0);

  CHECK_THROWS_AS(cumulative_integral({1.0, 2.0}, 0.5), InvalidParameter);
}

TEST_CASE("finite-difference two-point solves") {
  CHECK(fd_solve_bvp(BVPKind::dirichlet, 0.0, 0.0, 64).max_abs() < 1e-14);
  CHECK(fd_error(BVPKind::dirichlet, 1.0, 0.0, 4096) < 1e-6);
  CHECK(fd_error(BVPKind::neumann, 1.0, 0.0, 4096) < 1e-5);
  CHECK_THROWS_AS(fd_solve_bvp(BVPKind::dirichlet, 1.0, 0.0, 8), InvalidParameter);
}

TEST_CASE("finite-difference solves converge at second order") {
  for (BVPKind kind : {BVPKind::dirichlet, BVPKind::neumann}) {
    const double coarse = fd_error(kind, 1.0, -0.5, 256);
    const double fine = fd_error(kind, 1.0, -0.5, 512);
    const double factor = coarse / fine;
    CHECK(factor > 3.2);
    CHECK(factor < 4.8);
  }
}

TEST_CASE("upwind image of a transport realisation") {
  CHECK_THROWS_AS(transport_upwind(2.0, 1), InvalidParameter);
  DiscreteOperator op = transport_upwind(2.0, 64);
  CHECK(op.n == 64);
  CHECK(op.consistency_order == 1);
  CHECK(op.matrix.rows() == 64);
  CHECK(op.value_map.rows() == 64);

  // first-order consistency on a smooth function in the domain
  const double rate = std::log(2.0);  // e^{rate} = 2 matches u(1) = 2 u(0)
  Eigen::VectorXd v(64);
  for (int i = 0; i < 64; ++i) v(i) = std::exp(rate * i / 64.0);
  Eigen::VectorXd deriv = op.matrix * v;
  double worst = 0.0;
  for (int i = 0; i < 64; ++i)
    worst = std::max(worst, std::abs(deriv(i) - rate * std::exp(rate * (i + 1) / 64.0)));
  CHECK(worst < 0.05);
}

TEST_CASE("discrete pairing reproduces the trace form at first order") {
  const double rate = std::log(2.0);
  auto pairing_error = [&](int n) {
    DiscreteOperator op = transport_upwind(2.0, n);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = std::exp(rate * i / n);
    const double h = 1.0 / n;
    // 2 h <u', u> versus u(1)^2 - u(0)^2 = 3
    const double discrete = 2.0 * h * (op.value_map * v).dot(op.matrix * v);
    return std::abs(discrete - 3.0);
  };
  CHECK(pairing_error(512) < 0.02);
  const double factor = pairing_error(512) / pairing_error(1024);
  CHECK(factor > 1.6);
  CHECK(factor < 2.4);
}

TEST_CASE("discrete accretivity sign matches the boundary parameter") {
  const int n = 512;
  CHECK(discrete_accretivity(2.0, n) >= -1e-6);
  CHECK(discrete_accretivity(-2.0, n) >= -1e-6);
  CHECK(discrete_accretivity(Alpha::infinity(), n) >= -1e-6);
  CHECK(std::abs(discrete_accretivity(1.0, n)) <= 1e-6);
  CHECK(discrete_accretivity(0.5, n) < -0.01);
  CHECK(discrete_accretivity(0.0, n) < -0.01);
}

TEST_CASE("a priori ratio bound on signed domains") {
  const int n = 512;

  // one-line domain sample with closed-form image: u = e^{rx}, r = ln 2
  const double rate = std::log(2.0);
  ClosedForm u = ClosedForm::exponential(1.0, rate);
  ClosedForm t1u = ClosedForm::exponential(rate + 1.0, rate);
  AprioriResult single = apriori_check({{{u.sampled(n)}, {t1u.sampled(n)}}});
  CHECK(single.worst_ratio <= 2.0 + 1e-6);
  CHECK(single.excluded == 0);

  // vanishing-trace sample (interior class): u = x(1 - x)
  GridFunction bump = GridFunction::sample([](double x) { return x * (1.0 - x); }, n);
  GridFunction bump_t1 =
      GridFunction::sample([](double x) { return 1.0 - x - x * x; }, n);
  AprioriResult interior = apriori_check({{{bump}, {bump_t1}}});
  CHECK(interior.worst_ratio <= 2.0 + 1e-6);

  // randomized inflow-domain suite
  testutil::Rng rng(41);
  std::vector<AprioriSample> samples;
  for (int i = 0; i < 100; ++i)
    samples.push_back(testutil::transport_apriori_sample(rng, Alpha::infinity(), n));
  AprioriResult suite = apriori_check(samples);
  CHECK(suite.worst_ratio <= 2.0 + 1e-6);
  CHECK(suite.excluded == 0);

  // a zero image is excluded, never folded into the ratio
  AprioriResult excluded =
      apriori_check({{{bump}, {GridFunction::constant(0.0, n)}}});
  CHECK(excluded.excluded == 1);
  CHECK(excluded.worst_ratio <= 2.0 + 1e-6);
}

TEST_CASE("operator norm estimation by power iteration") {
  CHECK(opnorm_estimate(Eigen::MatrixXd::Identity(5, 5), 50) ==
        doctest::Approx(1.0).epsilon(1e-6));
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  CHECK(opnorm_estimate(diag, 100) == doctest::Approx(3.0).epsilon(1e-6));
  CHECK_THROWS_AS(opnorm_estimate(diag, 5), InvalidParameter);

  // one-step flow of the half-speed boundary weight has norm 1/|alpha| = 2
  const int n = 64;
  Eigen::MatrixXd flow = Eigen::MatrixXd::Zero(n, n);
  GridFunction basis = GridFunction::constant(0.0, n);
  for (int j = 0; j < n; ++j) {
    basis[j] = 1.0;
    GridFunction col = semigroup_apply(0.5, basis, 1.0);
    for (int i = 0; i < n; ++i) flow(i, j) = col[i];
    basis[j] = 0.0;
  }
  CHECK(opnorm_estimate(flow, 400) == doctest::Approx(2.0).epsilon(1e-6));
}
