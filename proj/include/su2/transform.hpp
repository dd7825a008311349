#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <span>

#include <Eigen/Core>

#include "su2/blocks.hpp"
#include "su2/quadrature.hpp"

namespace su2 {

class GridFunction {
 public:
  GridFunction(std::shared_ptr<const QuadratureGrid> grid, Eigen::VectorXcd values);

  const QuadratureGrid& grid() const { return *grid_; }
  const std::shared_ptr<const QuadratureGrid>& grid_ptr() const { return grid_; }
  const Eigen::VectorXcd& values() const { return values_; }

 private:
  std::shared_ptr<const QuadratureGrid> grid_;
  Eigen::VectorXcd values_;
};

GridFunction sample(std::shared_ptr<const QuadratureGrid> grid, const std::function<Complex(const GroupElement&)>& f);

// Separable evaluation is used on product grids unless `direct` is requested.
enum class Evaluation { automatic, direct };

// f̂(l) = Σ_j w_j f(u_j) t^l(u_j)^*. Requires grid band ≥ 2·band_limit.
FourierCoefficients forward(const GridFunction& f, TwoL band_limit, Evaluation how = Evaluation::automatic);

// f(u) = Σ (2l+1) Tr(c(l) t^l(u)) at each point.
Eigen::VectorXcd inverse(const FourierCoefficients& c, std::span<const GroupElement> points);

// inverse() at every node of a grid.
GridFunction synthesize(const FourierCoefficients& c, std::shared_ptr<const QuadratureGrid> grid,
                        Evaluation how = Evaluation::automatic);

// (Σ_j w_j |f(u_j)|^p)^{1/p}; p = ∞ gives the largest sample.
double group_lp_norm(const GridFunction& f, double p);

// Grid band needed to integrate |f|^p for f of band `band`: (p/2)·band for even p,
// otherwise the p = 4 grid (or the next even power above p).
TwoL norm_grid_band(TwoL band, double p);

// Weighted ℓ^p norm on the dual: (Σ d^{2-p/2} ‖c(l)‖_HS^p)^{1/p}, or sup d^{-1/2}‖c(l)‖_HS at p = ∞.
template <typename Scalar>
Scalar dual_lp_norm(const BlockSequence<Scalar>& c, Scalar p) {
  if (!(p >= 1)) throw DomainError("dual lp norm needs p >= 1");
  if (std::isinf(p)) {
    Scalar best = 0;
    for (int k = 0; k < c.levels(); ++k) best = std::max(best, hs_norm(c[k]) / std::sqrt(Scalar(k + 1)));
    return best;
  }
  Scalar sum = 0;
  for (int k = 0; k < c.levels(); ++k) {
    const Scalar hs = hs_norm(c[k]);
    if (hs > 0) sum += std::pow(Scalar(k + 1), 2 - p / 2) * std::pow(hs, p);
  }
  return std::pow(sum, 1 / p);
}

// Haar measure of {|f| ≥ x}.
double mu_distribution(const GridFunction& f, double x);

// Σ (2l+1)^2 over levels with ‖c(l)‖_HS/√(2l+1) ≥ y (> y when strict).
double nu_distribution(const FourierCoefficients& c, double y, bool strict = false);

// Independent complex Gaussian entries with variance (2l+1)^{-decay} at level l.
FourierCoefficients random_coefficients(TwoL band, std::mt19937_64& rng, double decay = 2.0);

// Generator for ensemble member `index` derived from a base seed.
std::mt19937_64 member_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace su2
