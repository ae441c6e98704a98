#pragma once

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <cmath>
#include <cstdint>
#include <utility>

#include "friedrichs/boundary_model.hpp"
#include "friedrichs/functions.hpp"
#include "friedrichs/oracles.hpp"

namespace testutil {

using friedrichs::Complex;
using friedrichs::Matrix;
using friedrichs::Vector;

// splitmix64 + Box-Muller, same scheme as the library generator; the suites
// must replay bit-exactly across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  double uniform() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    const double u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
  }

  Complex cnormal() { return {normal(), normal()}; }

  // uniform integer in [0, bound)
  int below(int bound) { return static_cast<int>(uniform() * bound) % bound; }

 private:
  std::uint64_t state_;
};

inline Matrix random_complex(Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
  return m;
}

inline Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

inline friedrichs::Subspace line2(double a, double b) {
  return friedrichs::Subspace(2, vec2(a, b));
}

/// U = R^{-1} Q C with g+ = C*C and -g- = R*R (Cholesky), Q unitary; then
/// U*(-g-)U = C* Q* Q C = g+, so U is a form unitary. Needs square blocks.
inline friedrichs::ContractionU random_unitary(Rng& rng, const friedrichs::ModelPtr& model) {
  const int k = model->kplus_dim();
  Matrix c = Matrix(model->g_plus().llt().matrixL()).adjoint();
  Matrix neg = -model->g_minus();
  Matrix r = Matrix(neg.llt().matrixL()).adjoint();
  Eigen::HouseholderQR<Matrix> qr(random_complex(rng, k, k));
  Matrix q = qr.householderQ() * Matrix::Identity(k, k);
  Matrix u = r.triangularView<Eigen::Upper>().solve(q * c);
  return friedrichs::ContractionU(model, u);
}

/// Exponential combination fitted to u(1) = alpha u(0) (u(0) = 0 at infinity);
/// the leading coefficient absorbs the boundary constraint.
inline friedrichs::ClosedForm transport_domain_sample(Rng& rng, friedrichs::Alpha alpha) {
  const double r1 = -2.0, r2 = 1.0, r3 = 3.0;
  const double c2 = rng.normal();
  const double c3 = rng.normal();
  double c1 = 0.0;
  if (alpha.is_finite()) {
    const double a = alpha.value;
    c1 = -(c2 * (std::exp(r2) - a) + c3 * (std::exp(r3) - a)) / (std::exp(r1) - a);
  } else {
    c1 = -(c2 + c3);
  }
  friedrichs::ClosedForm u;
  u.add_exp(c1, r1).add_exp(c2, r2).add_exp(c3, r3);
  return u;
}

inline friedrichs::AprioriSample transport_apriori_sample(Rng& rng, friedrichs::Alpha alpha,
                                                          int n) {
  friedrichs::ClosedForm u = transport_domain_sample(rng, alpha);
  friedrichs::ClosedForm t1u = u.derivative() + u;
  return {{u.sampled(n)}, {t1u.sampled(n)}};
}

/// (p, u) in the div-grad graph space with zero u-traces; p unconstrained.
inline friedrichs::AprioriSample elliptic_dirichlet_sample(Rng& rng, int n) {
  const double r1 = -2.0, r2 = 1.0, r3 = 3.0;
  const double e1 = std::exp(r1), e2 = std::exp(r2), e3 = std::exp(r3);
  const double c3 = rng.normal();
  const double c1 = c3 * (e2 - e3) / (e1 - e2);
  const double c2 = -c3 - c1;
  friedrichs::ClosedForm u;
  u.add_exp(c1, r1).add_exp(c2, r2).add_exp(c3, r3);
  friedrichs::ClosedForm p;
  p.add_exp(rng.normal(), -1.0).add_exp(rng.normal(), 2.0);
  friedrichs::ClosedForm first = p + u.derivative();
  friedrichs::ClosedForm second = p.derivative() + u;
  return {{p.sampled(n), u.sampled(n)}, {first.sampled(n), second.sampled(n)}};
}

}  // namespace testutil
