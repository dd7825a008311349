#include "su2/quadrature.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include <Eigen/Eigenvalues>

namespace su2 {

QuadratureGrid::QuadratureGrid(std::vector<GroupElement> nodes, Eigen::VectorXd weights, TwoL band_limit,
                               std::optional<ProductLayout> layout)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), band_limit_(band_limit), layout_(std::move(layout)) {
  if (static_cast<Eigen::Index>(nodes_.size()) != weights_.size())
    throw std::invalid_argument("grid needs one weight per node");
}

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw DomainError("Gauss-Legendre needs at least one node");
  nodes.resize(n);
  weights.resize(n);
  if (n == 1) {
    nodes(0) = 0.0;
    weights(0) = 2.0;
    return;
  }
  // Golub-Welsch for starting values, then Newton on P_n.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double off = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = off;
    jacobi(k - 1, k) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi, Eigen::EigenvaluesOnly);
  const auto un = static_cast<unsigned>(n);
  for (int i = 0; i < n; ++i) {
    double x = eig.eigenvalues()(i);
    double dp = 1.0;
    for (int it = 0; it < 3; ++it) {
      const double p = std::legendre(un, x);
      dp = n * (x * p - std::legendre(un - 1, x)) / (x * x - 1.0);
      x -= p / dp;
    }
    dp = n * (x * std::legendre(un, x) - std::legendre(un - 1, x)) / (x * x - 1.0);
    nodes(i) = x;
    weights(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

QuadratureGrid haar_grid(TwoL band_limit, std::size_t node_cap) {
  const int b = band_limit.value();
  const int n_angle = 2 * b + 2;
  const int n_beta = b + 1;
  const std::size_t count = static_cast<std::size_t>(n_angle) * n_angle * n_beta;
  if (count > node_cap)
    throw ResourceError("haar grid of band " + std::to_string(b) + " needs " + std::to_string(count) +
                        " nodes, cap is " + std::to_string(node_cap));

  ProductLayout layout;
  layout.alphas = Eigen::VectorXd::LinSpaced(n_angle, 0.0, 4 * kPi * (n_angle - 1) / n_angle);
  layout.gammas = layout.alphas;
  Eigen::VectorXd x;
  gauss_legendre(n_beta, x, layout.beta_weights);
  layout.beta_weights *= 0.5;
  layout.betas = x.array().acos();

  std::vector<GroupElement> nodes;
  nodes.reserve(count);
  Eigen::VectorXd weights(static_cast<Eigen::Index>(count));
  const double angle_weight = 1.0 / (static_cast<double>(n_angle) * n_angle);
  Eigen::Index k = 0;
  for (int j = 0; j < n_beta; ++j)
    for (int a = 0; a < n_angle; ++a)
      for (int g = 0; g < n_angle; ++g) {
        nodes.push_back(from_euler({layout.alphas(a), layout.betas(j), layout.gammas(g)}));
        weights(k++) = layout.beta_weights(j) * angle_weight;
      }
  return QuadratureGrid(std::move(nodes), std::move(weights), band_limit, std::move(layout));
}

ClassGrid class_grid(TwoL band_limit) {
  // Trapezoid in the half angle s = t/2 over a full period, weight 2 sin^2(s).
  const int m = 2 * band_limit.value() + 3;
  ClassGrid grid;
  grid.angles.reserve(m);
  grid.weights.resize(m);
  for (int k = 0; k < m; ++k) {
    const double s = 2 * kPi * k / m;
    double t = 2 * s;
    if (t > 2 * kPi) t = 4 * kPi - t;
    grid.angles.push_back({t});
    grid.weights(k) = 2.0 * std::sin(s) * std::sin(s) / m;
  }
  return grid;
}

QuadratureGrid sphere_grid(int resolution) {
  if (resolution < 1) throw DomainError("sphere grid resolution must be positive");
  Eigen::VectorXd xt, wt, xv, wv;
  gauss_legendre(resolution, xt, wt);
  gauss_legendre(resolution, xv, wv);
  const int n_h = 2 * resolution;

  std::vector<GroupElement> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<std::size_t>(resolution) * resolution * n_h);
  weights.reserve(nodes.capacity());
  for (int i = 0; i < resolution; ++i) {
    const double t = kPi * (xt(i) + 1.0);
    const double r = std::sin(0.5 * t);
    for (int j = 0; j < resolution; ++j) {
      const double v = r * xv(j);
      const double rho = std::sqrt(std::max(0.0, r * r - v * v));
      for (int k = 0; k < n_h; ++k) {
        const double h = 2 * kPi * k / n_h;
        nodes.push_back(GroupElement::from_quaternion(std::cos(0.5 * t), v, rho * std::cos(h), rho * std::sin(h)));
        weights.push_back(r * wt(i) * r * wv(j));
      }
    }
  }
  Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  w /= w.sum();
  return QuadratureGrid(std::move(nodes), std::move(w), TwoL(0));
}

void write_grid_csv(std::ostream& out, const QuadratureGrid& grid) {
  out << "re_a,im_a,re_b,im_b,weight\n";
  out.precision(17);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& u = grid.nodes()[i];
    out << u.a().real() << ',' << u.a().imag() << ',' << u.b().real() << ',' << u.b().imag() << ','
        << grid.weights()(static_cast<Eigen::Index>(i)) << '\n';
  }
}

}  // namespace su2
