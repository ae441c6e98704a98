#pragma once

#include <utility>

#include "friedrichs/boundary_model.hpp"
#include "friedrichs/functions.hpp"

namespace friedrichs {

/// A graph-space element of the first-order system p = -u', p' + u = f.
struct EllipticPair {
  ClosedForm p;
  ClosedForm u;
};

/// Endpoint traces (p(0), p(1), u(0), u(1)); the normal trace of a field q is
/// (-q(0), q(1)).
struct BoundaryTrace4 {
  double p0 = 0.0, p1 = 0.0, u0 = 0.0, u1 = 0.0;

  Vector as_vector() const {
    Vector v(4);
    v << p0, p1, u0, u1;
    return v;
  }
};

BoundaryTrace4 traces_of(const EllipticPair& pair);

/// 4-dimensional boundary model of the div-grad system on (0,1):
/// coordinates (p0, p1, u0, u1), form p1 v1 - p0 v0 + q1 u1 - q0 u0.
ModelPtr elliptic_model();

struct DirichletReport {
  BCSubspace space;
  bool self_dual = false;  // V^{[perp]} = V
  bool maximal = false;    // check_X
};

/// Trace subspace of {(p, u) : u(0) = u(1) = 0}.
DirichletReport dirichlet_subspace();

/// Solution of -w'' + w = 0, w(0) = g0, w(1) = g1.
ClosedForm solve_homog_dirichlet(double g0, double g1);

/// Dirichlet-to-Neumann map of -d^2/dx^2 + 1: outward normal derivatives
/// (-w'(0), w'(1)) of the solve above.
std::pair<double, double> dtn(double g0, double g1);

enum class MDirichletKind { dtn, kernel_projector };

/// M-operator of the Dirichlet realisation, either assembled from the
/// Dirichlet-to-Neumann map or from the oblique kernel projector; the two
/// agree entrywise.
MOperatorMat m_dirichlet(MDirichletKind kind);

/// Family of M-operators for the Dirichlet subspace:
/// <M_a u, v> = (p1 v1 - p0 v0) - (q1 u1 - q0 u0) + 2 a (u0 v0 + u1 v1).
MOperatorMat m_alpha(double alpha);

/// Solution of -v'' + v = 0 with -v'(0) = u0t, v'(1) = u1t.
ClosedForm solve_neumann(double u0t, double u1t);

struct W2AlphaReport {
  BCSubspace space;
  bool in_nonpos_cone = false;
  bool complements_dirichlet = false;
};

/// Generating complement W2^a: traces (a u0, -a u1, u0, u1); the boundary form
/// on it is -2a (u0^2 + u1^2).
W2AlphaReport w2_alpha(double alpha);

}  // namespace friedrichs
