#include "su2/core.hpp"

#include <algorithm>
#include <cmath>

namespace su2 {

namespace {

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

}  // namespace

Eigen::Matrix2cd GroupElement::matrix() const {
  Eigen::Matrix2cd m;
  m << a_, b_, -std::conj(b_), std::conj(a_);
  return m;
}

GroupElement from_euler(const EulerAngles& angles) {
  const double half_beta = 0.5 * angles.beta;
  const Complex a = std::cos(half_beta) * std::polar(1.0, 0.5 * (angles.alpha + angles.gamma));
  const Complex b = Complex(0.0, std::sin(half_beta)) * std::polar(1.0, 0.5 * (angles.alpha - angles.gamma));
  return {a, b};
}

EulerAngles to_euler(const GroupElement& u) {
  const double ra = std::abs(u.a());
  const double rb = std::abs(u.b());
  EulerAngles e;
  e.beta = 2.0 * std::atan2(rb, ra);
  const double sum = ra > 0 ? 2.0 * std::arg(u.a()) : 0.0;
  const double diff = rb > 0 ? 2.0 * (std::arg(u.b()) - 0.5 * kPi) : 0.0;
  e.alpha = wrap(0.5 * (sum + diff), 4 * kPi);
  e.gamma = wrap(0.5 * (sum - diff), 4 * kPi);
  return e;
}

ConjugacyAngle conjugacy_angle(const GroupElement& u) {
  const double re = std::clamp(u.a().real(), -1.0, 1.0);
  return {2.0 * std::acos(re)};
}

GroupElement random_element(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double x[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& v : x) {
      v = normal(rng);
      norm += v * v;
    }
  } while (norm < 1e-12);
  norm = std::sqrt(norm);
  return GroupElement::from_quaternion(x[0] / norm, x[1] / norm, x[2] / norm, x[3] / norm);
}

double distance(const GroupElement& u, const GroupElement& v) {
  return std::max(std::abs(u.a() - v.a()), std::abs(u.b() - v.b()));
}

}  // namespace su2
