#include "su2/transform.hpp"

#include <string>

#include "su2/wigner.hpp"

namespace su2 {

namespace {

using RowMajorXcd = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// exp(i (k/2) (θ + shift)) for k = -band..band, one row per angle.
Eigen::MatrixXcd half_phase_table(const Eigen::VectorXd& angles, double shift, int band) {
  Eigen::MatrixXcd table(angles.size(), 2 * band + 1);
  for (Eigen::Index a = 0; a < angles.size(); ++a)
    for (int k = -band; k <= band; ++k) table(a, k + band) = std::polar(1.0, 0.5 * k * (angles(a) + shift));
  return table;
}

FourierCoefficients forward_separable(const GridFunction& f, const ProductLayout& layout, int band) {
  const Eigen::Index n_alpha = layout.alphas.size();
  const Eigen::Index n_gamma = layout.gammas.size();
  const Eigen::MatrixXcd ea = half_phase_table(layout.alphas, 0.5 * kPi, band);
  const Eigen::MatrixXcd eg = half_phase_table(layout.gammas, -0.5 * kPi, band);
  const double angle_weight = 1.0 / (static_cast<double>(n_alpha) * n_gamma);

  FourierCoefficients out{TwoL(band)};
  for (Eigen::Index j = 0; j < layout.betas.size(); ++j) {
    const Eigen::Map<const RowMajorXcd> slice(f.values().data() + j * n_alpha * n_gamma, n_alpha, n_gamma);
    const Eigen::MatrixXcd partial = slice * eg;
    const Eigen::MatrixXcd folded = ea.transpose() * partial;
    const double scale = layout.beta_weights(j) * angle_weight;
    const double beta = layout.betas(j);
    const auto ladder = little_d_ladder(std::cos(0.5 * beta), std::sin(0.5 * beta), band);
    for (int big_l = 0; big_l <= band; ++big_l) {
      const Eigen::MatrixXd& d = (*ladder)[big_l];
      auto& block = out[big_l];
      const int offset = band - big_l;
      for (int rm = 0; rm <= big_l; ++rm)
        for (int rn = 0; rn <= big_l; ++rn)
          block(rn, rm) += scale * d(rm, rn) * folded(2 * rm + offset, 2 * rn + offset);
    }
  }
  return out;
}

FourierCoefficients forward_direct(const GridFunction& f, int band) {
  const auto& grid = f.grid();
  FourierCoefficients out{TwoL(band)};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Complex wf = grid.weights()(static_cast<Eigen::Index>(k)) * f.values()(static_cast<Eigen::Index>(k));
    if (wf == Complex(0.0)) continue;
    const auto reps = representation_ladder(TwoL(band), grid.nodes()[k]);
    for (int big_l = 0; big_l <= band; ++big_l) out[big_l] += wf * reps[big_l].adjoint();
  }
  return out;
}

Eigen::VectorXcd synthesize_separable(const FourierCoefficients& c, const ProductLayout& layout) {
  const int band = c.band_limit().value();
  const Eigen::Index n_alpha = layout.alphas.size();
  const Eigen::Index n_gamma = layout.gammas.size();
  const Eigen::MatrixXcd ea = half_phase_table(layout.alphas, 0.5 * kPi, band).conjugate();
  const Eigen::MatrixXcd eg_t = half_phase_table(layout.gammas, -0.5 * kPi, band).adjoint();

  Eigen::VectorXcd values(layout.betas.size() * n_alpha * n_gamma);
  Eigen::MatrixXcd folded(2 * band + 1, 2 * band + 1);
  for (Eigen::Index j = 0; j < layout.betas.size(); ++j) {
    const double beta = layout.betas(j);
    const auto ladder = little_d_ladder(std::cos(0.5 * beta), std::sin(0.5 * beta), band);
    folded.setZero();
    for (int big_l = 0; big_l <= band; ++big_l) {
      const Eigen::MatrixXd& d = (*ladder)[big_l];
      const auto& block = c[big_l];
      const int offset = band - big_l;
      const double dim = big_l + 1;
      for (int rm = 0; rm <= big_l; ++rm)
        for (int rn = 0; rn <= big_l; ++rn)
          folded(2 * rm + offset, 2 * rn + offset) += dim * block(rn, rm) * d(rm, rn);
    }
    Eigen::Map<RowMajorXcd> slice(values.data() + j * n_alpha * n_gamma, n_alpha, n_gamma);
    slice.noalias() = ea * folded * eg_t;
  }
  return values;
}

}  // namespace

GridFunction::GridFunction(std::shared_ptr<const QuadratureGrid> grid, Eigen::VectorXcd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw std::invalid_argument("grid function needs a grid");
  if (static_cast<std::size_t>(values_.size()) != grid_->size())
    throw std::invalid_argument("grid function needs one value per node");
}

GridFunction sample(std::shared_ptr<const QuadratureGrid> grid, const std::function<Complex(const GroupElement&)>& f) {
  Eigen::VectorXcd values(static_cast<Eigen::Index>(grid->size()));
  for (std::size_t k = 0; k < grid->size(); ++k) values(static_cast<Eigen::Index>(k)) = f(grid->nodes()[k]);
  return GridFunction(std::move(grid), std::move(values));
}

FourierCoefficients forward(const GridFunction& f, TwoL band_limit, Evaluation how) {
  const int band = band_limit.value();
  if (f.grid().band_limit().value() < 2 * band)
    throw GridTooCoarseError("forward transform to band " + std::to_string(band) + " needs a grid of band " +
                             std::to_string(2 * band) + ", got " + std::to_string(f.grid().band_limit().value()));
  if (how == Evaluation::automatic && f.grid().layout()) return forward_separable(f, *f.grid().layout(), band);
  return forward_direct(f, band);
}

Eigen::VectorXcd inverse(const FourierCoefficients& c, std::span<const GroupElement> points) {
  const int band = c.band_limit().value();
  Eigen::VectorXcd out(static_cast<Eigen::Index>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto reps = representation_ladder(TwoL(band), points[k]);
    Complex sum = 0.0;
    for (int big_l = 0; big_l <= band; ++big_l)
      sum += double(big_l + 1) * c[big_l].cwiseProduct(reps[big_l].transpose()).sum();
    out(static_cast<Eigen::Index>(k)) = sum;
  }
  return out;
}

GridFunction synthesize(const FourierCoefficients& c, std::shared_ptr<const QuadratureGrid> grid, Evaluation how) {
  if (how == Evaluation::automatic && grid->layout()) {
    auto values = synthesize_separable(c, *grid->layout());
    return GridFunction(std::move(grid), std::move(values));
  }
  auto values = inverse(c, grid->nodes());
  return GridFunction(std::move(grid), std::move(values));
}

double group_lp_norm(const GridFunction& f, double p) {
  if (!(p >= 1)) throw DomainError("group lp norm needs p >= 1");
  const Eigen::ArrayXd moduli = f.values().cwiseAbs().array();
  if (std::isinf(p)) return moduli.size() ? moduli.maxCoeff() : 0.0;
  if (p == 2) return std::sqrt((f.grid().weights().array() * moduli.square()).sum());
  return std::pow((f.grid().weights().array() * moduli.pow(p)).sum(), 1.0 / p);
}

TwoL norm_grid_band(TwoL band, double p) {
  if (!(p >= 1)) throw DomainError("norm grid needs p >= 1");
  const bool even = std::isfinite(p) && p == std::floor(p) && static_cast<long>(p) % 2 == 0;
  const double power = even ? p : std::max(4.0, 2.0 * std::ceil(p / 2.0));
  if (!std::isfinite(power)) throw DomainError("no exact grid for p = infinity");
  return TwoL(static_cast<int>(power / 2) * band.value());
}

double mu_distribution(const GridFunction& f, double x) {
  double mass = 0.0;
  for (Eigen::Index k = 0; k < f.values().size(); ++k)
    if (std::abs(f.values()(k)) >= x) mass += f.grid().weights()(k);
  return mass;
}

double nu_distribution(const FourierCoefficients& c, double y, bool strict) {
  double mass = 0.0;
  for (int k = 0; k < c.levels(); ++k) {
    const double d = k + 1;
    const double value = hs_norm(c[k]) / std::sqrt(d);
    if (strict ? value > y : value >= y) mass += d * d;
  }
  return mass;
}

FourierCoefficients random_coefficients(TwoL band, std::mt19937_64& rng, double decay) {
  std::normal_distribution<double> normal;
  FourierCoefficients c(band);
  for (int k = 0; k <= band.value(); ++k) {
    const double scale = std::sqrt(0.5 * std::pow(double(k + 1), -decay));
    auto& block = c[k];
    for (Eigen::Index r = 0; r < block.rows(); ++r)
      for (Eigen::Index col = 0; col < block.cols(); ++col) {
        const double re = normal(rng);
        const double im = normal(rng);
        block(r, col) = scale * Complex(re, im);
      }
  }
  return c;
}

std::mt19937_64 member_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace su2
