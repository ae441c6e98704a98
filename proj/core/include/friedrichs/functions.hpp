#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "friedrichs/errors.hpp"

namespace friedrichs {

/// Boundary parameter of the transport realisations; the point at infinity
/// encodes the inflow condition u(0) = 0.
struct Alpha {
  double value = 0.0;
  bool infinite = false;

  Alpha(double v) : value(v) {}  // NOLINT: implicit by design
  static Alpha infinity() {
    Alpha a(0.0);
    a.infinite = true;
    return a;
  }
  bool is_finite() const { return !infinite; }
};

/// Uniformly sampled scalar function on [0,1] with n+1 nodes.
struct GridFunction {
  int n = 0;
  std::vector<double> values;  // size n+1

  GridFunction() = default;
  GridFunction(int n_intervals, std::vector<double> samples);

  static GridFunction constant(double c, int n_intervals);
  template <typename F>
  static GridFunction sample(F&& f, int n_intervals) {
    std::vector<double> v(static_cast<std::size_t>(n_intervals) + 1);
    const double h = 1.0 / n_intervals;
    for (int i = 0; i <= n_intervals; ++i) v[static_cast<std::size_t>(i)] = f(i * h);
    return GridFunction(n_intervals, std::move(v));
  }

  double h() const { return 1.0 / n; }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
  bool is_zero(double tolerance = 0.0) const;
  double max_abs() const;
};

/// Closed-form scalar function: sum of c * e^{k x} terms plus a polynomial.
struct ClosedForm {
  std::vector<std::pair<double, double>> exp_terms;  // (coefficient, rate)
  std::vector<double> poly;                          // poly[i] * x^i

  double eval(double x) const;
  ClosedForm derivative() const;
  double trace0() const { return eval(0.0); }
  double trace1() const { return eval(1.0); }
  GridFunction sampled(int n_intervals) const;

  static ClosedForm zero() { return {}; }
  static ClosedForm exponential(double coefficient, double rate) {
    return {{{coefficient, rate}}, {}};
  }
  ClosedForm& add_exp(double coefficient, double rate) {
    exp_terms.emplace_back(coefficient, rate);
    return *this;
  }
};

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
ClosedForm operator*(double s, const ClosedForm& a);

}  // namespace friedrichs
