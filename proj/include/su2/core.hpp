#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "su2/error.hpp"

namespace su2 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Quantum number l stored as the integer 2l.
class TwoL {
 public:
  constexpr TwoL() = default;
  constexpr explicit TwoL(int twol) : value_(twol) {
    if (twol < 0) throw DomainError("TwoL must be nonnegative");
  }

  constexpr int value() const { return value_; }
  constexpr int dim() const { return value_ + 1; }
  constexpr double l() const { return 0.5 * value_; }

  friend constexpr auto operator<=>(TwoL, TwoL) = default;

 private:
  int value_ = 0;
};

struct EulerAngles {
  double alpha = 0.0;  // [0, 4π)
  double beta = 0.0;   // [0, π]
  double gamma = 0.0;  // [0, 4π)
};

// t ∈ [0, 2π]; the eigenvalues of u are e^{±it/2}.
struct ConjugacyAngle {
  double t = 0.0;
};

// u = [[a, b], [-conj(b), conj(a)]] with |a|² + |b|² = 1.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(Complex a, Complex b) : a_(a), b_(b) {}

  static GroupElement identity() { return {1.0, 0.0}; }
  // Unit quaternion (x1, x2, x3, x4) with a = x1 + i x2, b = x3 + i x4.
  static GroupElement from_quaternion(double x1, double x2, double x3, double x4) {
    return {{x1, x2}, {x3, x4}};
  }

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  Eigen::Matrix2cd matrix() const;
  GroupElement inverse() const { return {std::conj(a_), -b_}; }

  friend GroupElement operator*(const GroupElement& u, const GroupElement& v) {
    return {u.a_ * v.a_ - u.b_ * std::conj(v.b_), u.a_ * v.b_ + u.b_ * std::conj(v.a_)};
  }

 private:
  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
};

GroupElement from_euler(const EulerAngles& angles);
EulerAngles to_euler(const GroupElement& u);
ConjugacyAngle conjugacy_angle(const GroupElement& u);

// Haar-distributed element from a normalized Gaussian 4-vector.
GroupElement random_element(std::mt19937_64& rng);

// Largest entry of |u - v| as 2x2 matrices.
double distance(const GroupElement& u, const GroupElement& v);

}  // namespace su2
