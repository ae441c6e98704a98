#include "friedrichs/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>

namespace friedrichs {

double quadrature(const std::function<double(double)>& f, double a, double b, int n) {
  if (n < 2 || n % 2 != 0) throw InvalidParameter("quadrature: n must be even and >= 2");
  if (!(a < b)) throw InvalidParameter("quadrature: need a < b");
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

double quadrature_grid(const GridFunction& g) {
  const double h = g.h();
  if (g.n % 2 == 0) {
    double sum = g[0] + g[g.n];
    for (int i = 1; i < g.n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * g[i];
    return sum * h / 3.0;
  }
  // odd interval count: Simpson on the first n-3, 3/8 rule on the tail
  double sum = 0.0;
  if (g.n > 3) {
    double s = g[0] + g[g.n - 3];
    for (int i = 1; i < g.n - 3; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * g[i];
    sum += s * h / 3.0;
  }
  sum += 3.0 * h / 8.0 * (g[g.n - 3] + 3.0 * g[g.n - 2] + 3.0 * g[g.n - 1] + g[g.n]);
  return sum;
}

double grid_norm(const GridFunction& g) {
  const double h = g.h();
  double sum = 0.5 * (g[0] * g[0] + g[g.n] * g[g.n]);
  for (int i = 1; i < g.n; ++i) sum += g[i] * g[i];
  return std::sqrt(sum * h);
}

std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
  const std::size_t m = f.size();
  if (m < 3) throw InvalidParameter("cumulative_integral: need at least 3 samples");
  std::vector<double> out(m, 0.0);
  for (std::size_t i = 1; i < m; ++i) {
    double panel;
    if (i + 1 < m)
      panel = h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    else
      panel = h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    out[i] = out[i - 1] + panel;
  }
  return out;
}

GridFunction fd_solve_bvp(BVPKind kind, double g0, double g1, int n) {
  if (n < 16) throw InvalidParameter("fd_solve_bvp: n must be at least 16");
  const double h = 1.0 / n;
  const double h2 = h * h;
  using Sparse = Eigen::SparseMatrix<double>;
  Sparse a(n + 1, n + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(3 * static_cast<std::size_t>(n) + 6);

  for (int i = 1; i < n; ++i) {
    entries.emplace_back(i, i - 1, -1.0 / h2);
    entries.emplace_back(i, i, 2.0 / h2 + 1.0);
    entries.emplace_back(i, i + 1, -1.0 / h2);
  }
  if (kind == BVPKind::dirichlet) {
    entries.emplace_back(0, 0, 1.0);
    entries.emplace_back(n, n, 1.0);
    rhs(0) = g0;
    rhs(n) = g1;
  } else {
    // -w'(0) = g0, w'(1) = g1 with one-sided second-order stencils
    entries.emplace_back(0, 0, -3.0 / (2.0 * h));
    entries.emplace_back(0, 1, 4.0 / (2.0 * h));
    entries.emplace_back(0, 2, -1.0 / (2.0 * h));
    rhs(0) = -g0;
    entries.emplace_back(n, n, 3.0 / (2.0 * h));
    entries.emplace_back(n, n - 1, -4.0 / (2.0 * h));
    entries.emplace_back(n, n - 2, 1.0 / (2.0 * h));
    rhs(n) = g1;
  }
  a.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Sparse> lu(a);
  if (lu.info() != Eigen::Success) throw NotInvertible("fd_solve_bvp: factorization failed");
  Eigen::VectorXd solution = lu.solve(rhs);
  std::vector<double> samples(solution.data(), solution.data() + n + 1);
  return GridFunction(n, std::move(samples));
}

DiscreteOperator transport_upwind(Alpha alpha, int n) {
  if (n < 2) throw InvalidParameter("transport_upwind: n must be at least 2");
  const double h = 1.0 / n;
  DiscreteOperator op;
  op.n = n;
  // Unknowns: u_0..u_{n-1} with u_n = alpha u_0, or u_1..u_n when alpha = inf.
  Eigen::MatrixXd value_map = Eigen::MatrixXd::Zero(n + 1, n);
  if (alpha.is_finite()) {
    for (int i = 0; i < n; ++i) value_map(i, i) = 1.0;
    value_map(n, 0) = alpha.value;
  } else {
    for (int i = 1; i <= n; ++i) value_map(i, i - 1) = 1.0;
  }
  Eigen::MatrixXd derivative = Eigen::MatrixXd::Zero(n, n + 1);
  for (int i = 1; i <= n; ++i) {
    derivative(i - 1, i) = 1.0 / h;
    derivative(i - 1, i - 1) = -1.0 / h;
  }
  op.matrix = derivative * value_map;
  op.value_map = value_map.bottomRows(n);  // node values 1..n
  op.consistency_order = 1;
  return op;
}

double discrete_accretivity(Alpha alpha, int n) {
  DiscreteOperator op = transport_upwind(alpha, n);
  // <Lu, u> ~ h * (Av) . (Cv); ||u||^2 ~ h |v|^2, so the weighted symmetric
  // part is sym(C^T A) and the grid weight cancels.
  Eigen::MatrixXd quad = op.value_map.transpose() * op.matrix;
  Eigen::MatrixXd sym = 0.5 * (quad + quad.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

AprioriResult apriori_check(const std::vector<AprioriSample>& samples) {
  AprioriResult result;
  for (const auto& sample : samples) {
    double u_sq = 0.0, t_sq = 0.0;
    for (const auto& component : sample.u) {
      GridFunction squared = component;
      for (auto& v : squared.values) v *= v;
      u_sq += quadrature_grid(squared);
    }
    for (const auto& component : sample.t1u) {
      GridFunction squared = component;
      for (auto& v : squared.values) v *= v;
      t_sq += quadrature_grid(squared);
    }
    const double u_norm = std::sqrt(std::max(0.0, u_sq));
    const double t_norm = std::sqrt(std::max(0.0, t_sq));
    if (t_norm <= 1e-14 * std::max(1.0, u_norm)) {
      ++result.excluded;
      continue;
    }
    result.worst_ratio = std::max(result.worst_ratio, (u_norm + t_norm) / t_norm);
  }
  return result;
}

double opnorm_estimate(const Eigen::MatrixXd& a, int iterations) {
  if (iterations < 10) throw InvalidParameter("opnorm_estimate: need at least 10 iterations");
  if (a.size() == 0) return 0.0;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(a.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = std::cos(static_cast<double>(i) + 1.0);  // deterministic, unaligned start
  v.normalize();
  double norm_sq = 0.0;
  for (int iter = 0; iter < iterations; ++iter) {
    Eigen::VectorXd w = a.transpose() * (a * v);
    const double w_norm = w.norm();
    if (w_norm == 0.0) return 0.0;
    norm_sq = v.dot(w);
    v = w / w_norm;
  }
  return std::sqrt(std::max(0.0, norm_sq));
}

}  // namespace friedrichs
