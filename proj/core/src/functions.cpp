#include "friedrichs/functions.hpp"

#include <algorithm>
#include <cstdlib>

namespace friedrichs {

GridFunction::GridFunction(int n_intervals, std::vector<double> samples)
    : n(n_intervals), values(std::move(samples)) {
  if (n < 2) throw InvalidParameter("GridFunction: need at least 2 intervals");
  if (values.size() != static_cast<std::size_t>(n) + 1)
    throw InvalidDimension("GridFunction: sample count does not match grid");
}

GridFunction GridFunction::constant(double c, int n_intervals) {
  return GridFunction(n_intervals, std::vector<double>(static_cast<std::size_t>(n_intervals) + 1, c));
}

bool GridFunction::is_zero(double tolerance) const { return max_abs() <= tolerance; }

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double ClosedForm::eval(double x) const {
  double result = 0.0;
  for (const auto& [c, k] : exp_terms) result += c * std::exp(k * x);
  double xp = 1.0;
  for (double c : poly) {
    result += c * xp;
    xp *= x;
  }
  return result;
}

ClosedForm ClosedForm::derivative() const {
  ClosedForm d;
  for (const auto& [c, k] : exp_terms)
    if (c * k != 0.0) d.exp_terms.emplace_back(c * k, k);
  for (std::size_t i = 1; i < poly.size(); ++i) d.poly.push_back(static_cast<double>(i) * poly[i]);
  return d;
}

GridFunction ClosedForm::sampled(int n_intervals) const {
  return GridFunction::sample([this](double x) { return eval(x); }, n_intervals);
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm sum = a;
  sum.exp_terms.insert(sum.exp_terms.end(), b.exp_terms.begin(), b.exp_terms.end());
  if (b.poly.size() > sum.poly.size()) sum.poly.resize(b.poly.size(), 0.0);
  for (std::size_t i = 0; i < b.poly.size(); ++i) sum.poly[i] += b.poly[i];
  return sum;
}

ClosedForm operator*(double s, const ClosedForm& a) {
  ClosedForm scaled = a;
  for (auto& [c, k] : scaled.exp_terms) c *= s;
  for (auto& c : scaled.poly) c *= s;
  return scaled;
}

}  // namespace friedrichs
