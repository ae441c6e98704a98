#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "friedrichs/functions.hpp"

namespace friedrichs {

/// Composite Simpson on [a,b], n even.
double quadrature(const std::function<double(double)>& f, double a, double b, int n);

/// Composite Simpson over the samples of g on [0,1].
double quadrature_grid(const GridFunction& g);

/// Trapezoid-weighted L2 norm of grid samples.
double grid_norm(const GridFunction& g);

/// Running integral F[i] = int_0^{x_i} f, three-point panel rule (O(h^3) global).
std::vector<double> cumulative_integral(const std::vector<double>& f, double h);

enum class BVPKind { dirichlet, neumann };

/// Second-order centered solve of -w'' + w = 0 on (0,1).
/// dirichlet: w(0) = g0, w(1) = g1; neumann: -w'(0) = g0, w'(1) = g1
/// (one-sided second-order boundary stencils).
GridFunction fd_solve_bvp(BVPKind kind, double g0, double g1, int n);

/// Discrete image of a transport realisation: first-order upwind d/dx on the
/// uniform grid with the boundary condition u(1) = alpha u(0) eliminated.
struct DiscreteOperator {
  int n = 0;
  Eigen::MatrixXd matrix;       // node values 1..n from the eliminated unknowns
  Eigen::MatrixXd value_map;    // unknowns -> node values 1..n
  int consistency_order = 1;
};

DiscreteOperator transport_upwind(Alpha alpha, int n);

/// Smallest eigenvalue of the grid-weighted symmetric part of the discrete
/// transport derivative with the boundary condition eliminated.
double discrete_accretivity(Alpha alpha, int n);

/// One sample of u in a realisation domain together with T1 u; components
/// allow vector-valued examples (one grid per component).
struct AprioriSample {
  std::vector<GridFunction> u;
  std::vector<GridFunction> t1u;
};

struct AprioriResult {
  double worst_ratio = 1.0;
  int excluded = 0;  // samples with T1 u = 0 (reported, never silently used)
};

/// Worst (||u|| + ||T1 u||) / ||T1 u|| over the samples, norms by quadrature.
AprioriResult apriori_check(const std::vector<AprioriSample>& samples);

/// Power iteration on A*A; relative accuracy ~1e-6 for modest matrices.
double opnorm_estimate(const Eigen::MatrixXd& a, int iterations);

}  // namespace friedrichs
