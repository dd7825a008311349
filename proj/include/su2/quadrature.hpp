#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "su2/core.hpp"

namespace su2 {

// Layout of a separable Euler-angle grid. Node index is (j * alphas + a) * gammas + g
// for beta node j, alpha node a, gamma node g.
struct ProductLayout {
  Eigen::VectorXd alphas;
  Eigen::VectorXd betas;
  Eigen::VectorXd beta_weights;  // sums to 1
  Eigen::VectorXd gammas;
};

class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<GroupElement> nodes, Eigen::VectorXd weights, TwoL band_limit,
                 std::optional<ProductLayout> layout = std::nullopt);

  const std::vector<GroupElement>& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  TwoL band_limit() const { return band_limit_; }
  std::size_t size() const { return nodes_.size(); }
  const std::optional<ProductLayout>& layout() const { return layout_; }

 private:
  std::vector<GroupElement> nodes_;
  Eigen::VectorXd weights_;
  TwoL band_limit_;
  std::optional<ProductLayout> layout_;
};

struct ClassGrid {
  std::vector<ConjugacyAngle> angles;
  Eigen::VectorXd weights;
};

inline constexpr std::size_t kDefaultNodeCap = 20'000'000;

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

QuadratureGrid haar_grid(TwoL band_limit, std::size_t node_cap = kDefaultNodeCap);
ClassGrid class_grid(TwoL band_limit);
QuadratureGrid sphere_grid(int resolution);

// Debug dump: re_a, im_a, re_b, im_b, weight.
void write_grid_csv(std::ostream& out, const QuadratureGrid& grid);

}  // namespace su2
