#pragma once

#include <functional>
#include <span>
#include <string>

#include "su2/symbol.hpp"
#include "su2/transform.hpp"

namespace su2 {

// θ with 1/p = (1-θ)/p1 + θ/p2, for p1 < p < p2.
double theta(double p, double p1, double p2);

// (p1/(p-p1) + p2/(p2-p))^{1/p}; p2 may be infinite.
double marcinkiewicz_constant(double p, double p1, double p2);

// K_{p,p1,p2} M1^{1-θ} M2^θ.
double strong_bound(double M1, double M2, double p, double p1, double p2);

// A measure on the levels together with the scalar each level contributes to the
// distribution function: ν(y) = Σ mass(l) over levels with value(l) > y (or ≥ y).
struct LevelMeasure {
  std::string name;
  std::function<double(int twol)> mass;
  std::function<double(int twol, const FourierCoefficients::Block& block)> value;

  // ‖h(l)‖_HS/√(2l+1) with mass (2l+1)^2.
  static LevelMeasure plancherel();
  // (2l+1)^{5/2}‖h(l)‖_HS with mass (2l+1)^{-4}.
  static LevelMeasure hardy_littlewood();
  // ‖h(l)‖_HS/(√(2l+1)‖σ(l)‖_op) with mass ‖σ(l)‖_op^2 (2l+1)^2; levels with σ(l) = 0 carry no mass.
  static LevelMeasure paley(const MultiplierSymbol& sigma);
};

double level_distribution(const FourierCoefficients& h, const LevelMeasure& measure, double y, bool strict = false);

struct WeakTypeEstimate {
  double p = 0;
  double norm = 0;  // max over members and y of y ν(y)^{1/p} / ‖f‖_p
  double worst_y = 0;
  int worst_member = -1;
  int samples = 0;  // (member, y) pairs evaluated
};

using LevelMap = std::function<FourierCoefficients(const GridFunction&)>;

// The y sample per member is 64 log-spaced points over the observed range of values
// plus every value itself (just below it when strict).
WeakTypeEstimate estimate_weak_norm(const LevelMap& map, double p, std::span<const GridFunction> ensemble,
                                    const LevelMeasure& measure, bool strict = false);

}  // namespace su2
