#include "su2/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace su2 {

namespace {

void require_exponents(double p, double q) {
  if (!(p > 1 && p <= 2 && q >= 2 && std::isfinite(q)))
    throw DomainError("multiplier bounds need 1 < p <= 2 <= q < infinity");
}

bool nonzero(const FourierCoefficients::Block& b) { return b.size() && b.cwiseAbs().maxCoeff() > 0; }

// v |v|^{r-2} pointwise, the duality map of L^r up to normalization.
Eigen::VectorXcd duality_map(const Eigen::VectorXcd& v, double r) {
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    out(i) = m > 0 ? v(i) * std::pow(m, r - 2) : Complex(0.0);
  }
  return out;
}

double parse_number(const std::string& text, const std::string& kind) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw DomainError("bad number '" + text + "' in symbol kind '" + kind + "'");
  return value;
}

class RatioEvaluator {
 public:
  RatioEvaluator(const MultiplierSymbol& sigma, double p, double q, std::shared_ptr<const QuadratureGrid> grid)
      : sigma_(sigma), adjoint_(adjoint_symbol(sigma)), p_(p), q_(q), grid_(std::move(grid)) {}

  double ratio(const FourierCoefficients& c) const {
    const double den = group_lp_norm(synthesize(c, grid_), p_);
    if (!(den > 0)) return 0.0;
    return group_lp_norm(synthesize(apply(sigma_, c), grid_), q_) / den;
  }

  // f ← P J_{p'}(A* P J_q(A f)), with P the projection onto the band.
  FourierCoefficients ascend(const FourierCoefficients& c) const {
    const TwoL band = c.band_limit();
    const auto g = synthesize(apply(sigma_, c), grid_);
    const auto h = forward(GridFunction(grid_, duality_map(g.values(), q_)), band);
    const auto back = synthesize(apply(adjoint_, h), grid_);
    const double dual = p_ / (p_ - 1);
    auto next = forward(GridFunction(grid_, duality_map(back.values(), dual)), band);
    const double scale = dual_lp_norm(next, 2.0);
    if (scale > 0) next *= Complex(1.0 / scale);
    return next;
  }

 private:
  const MultiplierSymbol& sigma_;
  MultiplierSymbol adjoint_;
  double p_, q_;
  std::shared_ptr<const QuadratureGrid> grid_;
};

}  // namespace

FourierCoefficients apply(const MultiplierSymbol& sigma, const FourierCoefficients& c) {
  const TwoL band = std::min(sigma.band_limit(), c.band_limit());
  FourierCoefficients out(band);
  for (int k = 0; k <= band.value(); ++k) {
    if (sigma[k].cols() != c[k].rows()) throw ConformabilityError("symbol and coefficient blocks differ in size");
    out[k].noalias() = sigma[k] * c[k];
  }
  return out;
}

MultiplierSymbol compose(const MultiplierSymbol& outer, const MultiplierSymbol& inner) {
  return MultiplierSymbol(apply(outer, inner.blocks()), outer.tag() + "*" + inner.tag());
}

MultiplierSymbol adjoint_symbol(const MultiplierSymbol& sigma) {
  FourierCoefficients blocks(sigma.band_limit());
  for (int k = 0; k < sigma.levels(); ++k) blocks[k] = sigma[k].adjoint();
  return MultiplierSymbol(std::move(blocks), sigma.tag() + "^*");
}

double lower_bound_diag(const MultiplierSymbol& sigma, double p, double q) {
  require_exponents(p, q);
  const double exponent = 1 - 1 / p + 1 / q;
  double best = 0;
  for (int k = 0; k < sigma.levels(); ++k)
    if (nonzero(sigma[k])) best = std::max(best, sigma[k].diagonal().cwiseAbs().minCoeff() / std::pow(k + 1.0, exponent));
  return best;
}

double lower_bound_diag_spectral(const MultiplierSymbol& sigma, double p, double q) {
  require_exponents(p, q);
  const double exponent = 1 - 1 / p + 1 / q;
  double best = 0;
  for (int k = 0; k < sigma.levels(); ++k) {
    const auto& b = sigma[k];
    if (!nonzero(b)) continue;
    const double scale = b.squaredNorm();
    if ((b * b.adjoint() - b.adjoint() * b).norm() > 1e-10 * scale) return std::numeric_limits<double>::quiet_NaN();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(b, false);
    best = std::max(best, eig.eigenvalues().cwiseAbs().minCoeff() / std::pow(k + 1.0, exponent));
  }
  return best;
}

double lower_bound_trace(const MultiplierSymbol& sigma, double p, double q) {
  require_exponents(p, q);
  const double exponent = 2 - 1 / p + 1 / q;
  double best = 0;
  for (int k = 0; k < sigma.levels(); ++k)
    best = std::max(best, std::abs(sigma[k].trace()) / std::pow(k + 1.0, exponent));
  return best;
}

double upper_bound(const MultiplierSymbol& sigma, double p, double q, [[maybe_unused]] bool strict) {
  require_exponents(p, q);
  const auto norms = sigma.op_norms();
  const double exponent = 1 / p - 1 / q;
  if (exponent == 0) return *std::max_element(norms.begin(), norms.end());
  // On [v_next, v) the strict level set {‖σ‖ > s} is {‖σ‖ ≥ v}; its sup is the
  // limit s → v, which is the value of the non-strict version at s = v.
  std::map<double, double, std::greater<>> mass_at;
  for (std::size_t k = 0; k < norms.size(); ++k)
    if (norms[k] > 0) mass_at[norms[k]] += double(k + 1) * double(k + 1);
  double best = 0, cumulative = 0;
  for (const auto& [v, mass] : mass_at) {
    cumulative += mass;
    best = std::max(best, v * std::pow(cumulative, exponent));
  }
  return best;
}

MultiplierSymbol identity_symbol(TwoL band) { return MultiplierSymbol(FourierCoefficients::identity(band), "identity"); }

MultiplierSymbol projection_symbol(TwoL band, TwoL level) {
  if (level > band) throw DomainError("projection level beyond the symbol band");
  FourierCoefficients blocks(band);
  blocks[level.value()].setIdentity();
  return MultiplierSymbol(std::move(blocks), "projection:" + std::to_string(level.value()));
}

MultiplierSymbol heat_symbol(TwoL band, double tau) {
  if (!(tau >= 0) || !std::isfinite(tau)) throw DomainError("heat symbol needs tau >= 0");
  FourierCoefficients blocks(band);
  for (int k = 0; k <= band.value(); ++k) {
    const double l = 0.5 * k;
    blocks[k].setIdentity();
    blocks[k] *= std::exp(-tau * l * (l + 1));
  }
  std::ostringstream tag;
  tag.precision(17);
  tag << "heat:" << tau;
  return MultiplierSymbol(std::move(blocks), tag.str());
}

MultiplierSymbol diagonal_symbol(TwoL band, const std::function<Complex(int, int)>& entry, std::string tag) {
  FourierCoefficients blocks(band);
  for (int k = 0; k <= band.value(); ++k)
    for (int r = 0; r <= k; ++r) blocks[k](r, r) = entry(k, 2 * r - k);
  return MultiplierSymbol(std::move(blocks), std::move(tag));
}

MultiplierSymbol random_symbol(TwoL band, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  FourierCoefficients blocks(band);
  for (int k = 0; k <= band.value(); ++k) {
    const double scale = std::sqrt(0.5 / (k + 1.0));
    for (Eigen::Index r = 0; r <= k; ++r)
      for (Eigen::Index c = 0; c <= k; ++c) {
        const double re = normal(rng);
        const double im = normal(rng);
        blocks[k](r, c) = scale * Complex(re, im);
      }
  }
  return MultiplierSymbol(std::move(blocks), "random:" + std::to_string(seed));
}

MultiplierSymbol make_symbol(const std::string& kind, TwoL band) {
  const auto colon = kind.find(':');
  const std::string head = kind.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : kind.substr(colon + 1);
  if (head == "identity" && arg.empty()) return identity_symbol(band);
  if (head == "projection") {
    const double level = parse_number(arg, kind);
    if (level < 0 || level != std::floor(level)) throw DomainError("projection needs a nonnegative integer 2l");
    return projection_symbol(band, TwoL(static_cast<int>(level)));
  }
  if (head == "heat") return heat_symbol(band, parse_number(arg, kind));
  if (head == "diagonal") {
    if (arg == "alternating")
      return diagonal_symbol(band, [](int twol, int twon) { return Complex(((twol - twon) / 2) % 2 ? -1.0 : 1.0); },
                             kind);
    std::vector<double> values;
    std::stringstream in(arg);
    for (std::string item; std::getline(in, item, ',');) values.push_back(parse_number(item, kind));
    if (values.empty()) throw DomainError("diagonal symbol needs values");
    return diagonal_symbol(
        band,
        [&](int twol, int) { return Complex(static_cast<std::size_t>(twol) < values.size() ? values[twol] : 0.0); },
        kind);
  }
  if (head == "random") {
    const double seed = parse_number(arg, kind);
    if (seed < 0 || seed != std::floor(seed)) throw DomainError("random symbol needs a nonnegative integer seed");
    return random_symbol(band, static_cast<std::uint64_t>(seed));
  }
  throw DomainError("unknown symbol kind '" + kind + "'");
}

EmpiricalResult empirical_norm(const MultiplierSymbol& sigma, double p, double q, const EmpiricalConfig& config) {
  if (!(p >= 1 && q >= 1 && std::isfinite(p) && std::isfinite(q)))
    throw DomainError("empirical norm needs finite p, q >= 1");
  const TwoL band = sigma.band_limit();
  const int grid_band =
      std::max({norm_grid_band(band, p).value(), norm_grid_band(band, q).value(), 2 * band.value()});
  const auto grid = std::make_shared<const QuadratureGrid>(haar_grid(TwoL(grid_band)));
  const RatioEvaluator evaluator(sigma, p, q, grid);

  struct Candidate {
    std::string name;
    FourierCoefficients c;
    double ratio;
  };
  std::vector<Candidate> randoms, witnesses;
  for (int i = 0; i < config.ensemble; ++i) {
    auto rng = member_rng(config.seed, static_cast<std::uint64_t>(i));
    auto c = random_coefficients(band, rng, config.decay);
    const double r = evaluator.ratio(c);
    randoms.push_back({"random:" + std::to_string(i), std::move(c), r});
  }
  for (int k = 0; k <= band.value(); ++k) {
    if (!nonzero(sigma[k])) continue;
    const Eigen::VectorXd diag = sigma[k].diagonal().cwiseAbs();
    Eigen::Index lo = 0, hi = 0;
    diag.minCoeff(&lo);
    diag.maxCoeff(&hi);
    std::vector<Eigen::Index> rows{lo, hi, k};
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (Eigen::Index r : rows) {
      FourierCoefficients c(band);
      c[k](r, r) = 1.0;  // f = (2l+1) t^l_nn
      const double ratio = evaluator.ratio(c);
      witnesses.push_back({"diagonal:" + std::to_string(k) + ":" + std::to_string(2 * r - k), std::move(c), ratio});
    }
    FourierCoefficients chi(band);
    chi[k].setIdentity();  // f = (2l+1) χ_l
    const double ratio = evaluator.ratio(chi);
    witnesses.push_back({"character:" + std::to_string(k), std::move(chi), ratio});
  }

  // Ascent starts: the best candidate overall and the best few random members, since
  // structured witnesses such as f = 1 can be fixed points of the iteration.
  auto by_ratio = [](const Candidate& x, const Candidate& y) { return x.ratio > y.ratio; };
  std::stable_sort(randoms.begin(), randoms.end(), by_ratio);
  std::stable_sort(witnesses.begin(), witnesses.end(), by_ratio);
  std::vector<const Candidate*> starts;
  if (!witnesses.empty() && (randoms.empty() || witnesses.front().ratio > randoms.front().ratio))
    starts.push_back(&witnesses.front());
  for (std::size_t i = 0; i < randoms.size() && i < static_cast<std::size_t>(config.random_starts) + 1; ++i)
    starts.push_back(&randoms[i]);
  if (starts.empty()) starts.push_back(&witnesses.front());

  EmpiricalResult result;
  result.grid_band = grid_band;
  for (const Candidate* s : starts) result.start_value = std::max(result.start_value, s->ratio);
  result.value = -1;
  FourierCoefficients winner(band);
  for (const Candidate* s : starts) {
    double value = s->ratio;
    int accepted = 0;
    FourierCoefficients current = s->c;
    for (int step = 0; p > 1 && step < config.ascent_steps; ++step) {
      auto next = evaluator.ascend(current);
      const double r = evaluator.ratio(next);
      if (!(r > value)) break;
      value = r;
      current = std::move(next);
      ++accepted;
    }
    if (value > result.value) {
      result.value = value;
      result.start = s->name;
      result.accepted_steps = accepted;
      winner = std::move(current);
    }
  }
  const auto fine = std::make_shared<const QuadratureGrid>(haar_grid(TwoL(grid_band + band.value())));
  result.fine_value = RatioEvaluator(sigma, p, q, fine).ratio(winner);
  return result;
}

BoundsReport bounds_report(const MultiplierSymbol& sigma, double p, double q, const EmpiricalConfig& config,
                           double slack, bool strict) {
  BoundsReport report;
  report.p = p;
  report.q = q;
  report.slack = slack;
  report.lower_diag = lower_bound_diag(sigma, p, q);
  report.lower_diag_spectral = lower_bound_diag_spectral(sigma, p, q);
  report.lower_trace = lower_bound_trace(sigma, p, q);
  report.upper = upper_bound(sigma, p, q, strict);
  report.empirical = empirical_norm(sigma, p, q, config);
  report.empirical_lower = report.empirical.value;
  report.lower_ok = std::max(report.lower_diag, report.lower_trace) <= report.empirical_lower * (1 + slack);
  report.upper_ok = report.empirical_lower <= report.upper * (1 + slack);
  return report;
}

}  // namespace su2
