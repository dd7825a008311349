#include "su2/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace su2 {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

double weighted_power_sum(const FourierCoefficients& c, double p) {
  double sum = 0.0;
  for (int k = 0; k < c.levels(); ++k) {
    const double hs = hs_norm(c[k]);
    if (hs > 0) sum += std::pow(k + 1.0, 2.5 * p - 4.0) * std::pow(hs, p);
  }
  return sum;
}

void require_conformable(const FourierCoefficients& c, const MultiplierSymbol& sigma) {
  if (sigma.levels() < c.levels())
    throw ConformabilityError("symbol band " + std::to_string(sigma.band_limit().value()) +
                              " does not cover coefficient band " + std::to_string(c.band_limit().value()));
}

// x^e with 0^0 = 1, so a zero exponent drops the factor entirely.
double power_or_one(double x, double e) { return e == 0 ? 1.0 : std::pow(x, e); }

bool is_even_integer(double p) { return p == std::floor(p) && static_cast<long>(p) % 2 == 0; }

}  // namespace

double hardy_littlewood_lhs(const FourierCoefficients& c, double p) {
  require(p > 1 && p <= 2, "Hardy-Littlewood functional needs 1 < p <= 2");
  return weighted_power_sum(c, p);
}

double hl_dual_rhs(const FourierCoefficients& c, double p) {
  require(p >= 2 && std::isfinite(p), "dual Hardy-Littlewood certificate needs 2 <= p < infinity");
  return weighted_power_sum(c, p);
}

double paley_K(const MultiplierSymbol& sigma, [[maybe_unused]] bool strict) {
  // Level sets only change at the distinct operator norms v. For s ∈ (v_next, v]
  // the sum over ‖σ‖ ≥ s is fixed, so the sup is taken at s = v; for the strict
  // version the sum over ‖σ‖ > s is fixed on [v_next, v) and the sup is the limit s → v.
  std::map<double, double, std::greater<>> mass_at;
  const auto norms = sigma.op_norms();
  for (std::size_t k = 0; k < norms.size(); ++k)
    if (norms[k] > 0) mass_at[norms[k]] += double(k + 1) * double(k + 1);
  double best = 0.0, cumulative = 0.0;
  for (const auto& [v, mass] : mass_at) {
    cumulative += mass;
    best = std::max(best, v * cumulative);
  }
  return best;
}

double paley_lhs(const FourierCoefficients& c, const MultiplierSymbol& sigma, double p) {
  require(p > 1 && p <= 2, "Paley functional needs 1 < p <= 2");
  require_conformable(c, sigma);
  double sum = 0.0;
  for (int k = 0; k < c.levels(); ++k) {
    const double hs = hs_norm(c[k]);
    if (hs == 0) continue;
    sum += std::pow(k + 1.0, 2.0 - p / 2) * std::pow(hs, p) * power_or_one(op_norm(sigma[k]), 2.0 - p);
  }
  return sum;
}

double general_paley_lhs(const FourierCoefficients& c, const MultiplierSymbol& sigma, double p, double b) {
  require(p > 1 && p <= 2, "general Paley functional needs 1 < p <= 2");
  const double dual = p / (p - 1);
  require(b >= p && b <= dual, "general Paley functional needs p <= b <= p'");
  require_conformable(c, sigma);
  const double exponent = 1.0 / b - 1.0 / dual;
  double sum = 0.0;
  for (int k = 0; k < c.levels(); ++k) {
    const double hs = hs_norm(c[k]);
    if (hs == 0) continue;
    const double term = hs * power_or_one(op_norm(sigma[k]), exponent);
    sum += std::pow(k + 1.0, 2.0 - b / 2) * std::pow(term, b);
  }
  return std::pow(sum, 1.0 / b);
}

double necessity_lhs(const FourierCoefficients& c, double p) {
  require(p > 2 && std::isfinite(p), "necessity functional needs 2 < p < infinity");
  std::vector<double> tail(static_cast<std::size_t>(c.levels()) + 1, 0.0);
  for (int k = c.levels() - 1; k >= 0; --k)
    tail[k] = std::max(tail[k + 1], std::abs(c[k].trace()) / (k + 1.0));
  double sum = 0.0;
  for (int k = 0; k < c.levels(); ++k)
    if (tail[k] > 0) sum += std::pow(k + 1.0, p - 2) * std::pow(tail[k], p);
  return sum;
}

std::string to_string(Inequality which) {
  switch (which) {
    case Inequality::plancherel: return "plancherel";
    case Inequality::hausdorff_young: return "hy";
    case Inequality::hardy_littlewood: return "hl";
    case Inequality::hl_dual: return "hl-dual";
    case Inequality::paley: return "paley";
    case Inequality::general_paley: return "general-paley";
    case Inequality::necessity: return "necessity";
  }
  return "unknown";
}

Inequality parse_inequality(const std::string& name) {
  for (auto which : {Inequality::plancherel, Inequality::hausdorff_young, Inequality::hardy_littlewood,
                     Inequality::hl_dual, Inequality::paley, Inequality::general_paley, Inequality::necessity})
    if (to_string(which) == name) return which;
  throw DomainError("unknown inequality '" + name + "'");
}

InequalityReport verify_ensemble(Inequality which, const InequalityParams& params, const EnsembleConfig& ensemble) {
  const double p = params.p;
  const int band = ensemble.band.value();
  if (ensemble.size < 1) throw DomainError("ensemble size must be positive");
  switch (which) {
    case Inequality::plancherel: require(p == 2, "Plancherel is the p = 2 identity"); break;
    case Inequality::hausdorff_young: require(p >= 1 && p <= 2, "Hausdorff-Young needs 1 <= p <= 2"); break;
    case Inequality::hardy_littlewood: require(p > 1 && p <= 2, "Hardy-Littlewood needs 1 < p <= 2"); break;
    case Inequality::hl_dual: require(p >= 2 && std::isfinite(p), "dual Hardy-Littlewood needs p >= 2"); break;
    case Inequality::paley: require(p > 1 && p <= 2, "Paley needs 1 < p <= 2"); break;
    case Inequality::general_paley:
      require(p > 1 && p <= 2, "general Paley needs 1 < p <= 2");
      require(params.b.has_value(), "general Paley needs b");
      require(*params.b >= p && *params.b <= p / (p - 1), "general Paley needs p <= b <= p'");
      break;
    case Inequality::necessity: require(p > 2 && std::isfinite(p), "necessity needs p > 2"); break;
  }

  const bool uses_forward = which == Inequality::plancherel || which == Inequality::hausdorff_young;
  int grid_band = norm_grid_band(ensemble.band, p).value();
  if (uses_forward) grid_band = std::max(grid_band, 2 * band);
  const auto grid = std::make_shared<const QuadratureGrid>(haar_grid(TwoL(grid_band)));

  const MultiplierSymbol sigma =
      params.sigma ? *params.sigma : MultiplierSymbol(FourierCoefficients::identity(ensemble.band), "identity");
  const bool uses_symbol = which == Inequality::paley || which == Inequality::general_paley;
  if (uses_symbol) require_conformable(FourierCoefficients(ensemble.band), sigma);

  InequalityReport report;
  report.name = to_string(which);
  report.p = p;
  report.b = params.b;
  report.ensemble = ensemble;
  report.grid_band = grid_band;
  report.ratio = -1;
  double kappa = 0;
  if (uses_symbol) {
    kappa = paley_K(sigma);
    report.paley_constant = kappa;
  }
  const double dual = p > 1 ? p / (p - 1) : INFINITY;

  std::optional<FourierCoefficients> worst;
  double endpoint_error = 0;
  for (int i = 0; i < ensemble.size; ++i) {
    auto rng = member_rng(ensemble.seed, static_cast<std::uint64_t>(i));
    const auto c = random_coefficients(ensemble.band, rng, ensemble.decay);
    const auto f = synthesize(c, grid);
    const double norm = group_lp_norm(f, p);
    double lhs = 0, rhs = 0;
    switch (which) {
      case Inequality::plancherel:
        lhs = dual_lp_norm(forward(f, ensemble.band), 2.0);
        rhs = norm;
        break;
      case Inequality::hausdorff_young:
        lhs = dual_lp_norm(forward(f, ensemble.band), dual);
        rhs = norm;
        break;
      case Inequality::hardy_littlewood:
        lhs = std::pow(hardy_littlewood_lhs(c, p), 1 / p);
        rhs = norm;
        break;
      case Inequality::hl_dual:
        lhs = norm;
        rhs = std::pow(hl_dual_rhs(c, p), 1 / p);
        break;
      case Inequality::paley:
        lhs = std::pow(paley_lhs(c, sigma, p), 1 / p);
        rhs = std::pow(kappa, (2 - p) / p) * norm;
        break;
      case Inequality::general_paley: {
        const double b = *params.b;
        lhs = general_paley_lhs(c, sigma, p, b);
        rhs = std::pow(kappa, 1 / b - 1 / dual) * norm;
        const double at_p = general_paley_lhs(c, sigma, p, p);
        const double at_dual = general_paley_lhs(c, sigma, p, dual);
        const double paley_root = std::pow(paley_lhs(c, sigma, p), 1 / p);
        const double hy = dual_lp_norm(c, dual);
        endpoint_error = std::max({endpoint_error, std::abs(at_p - paley_root) / paley_root,
                                   std::abs(at_dual - hy) / hy});
        break;
      }
      case Inequality::necessity:
        lhs = std::pow(necessity_lhs(c, p), 1 / p);
        rhs = norm;
        break;
    }
    const double ratio = rhs > 0 ? lhs / rhs : 0.0;
    report.ratios.push_back(ratio);
    if (ratio > report.ratio) {
      report.ratio = ratio;
      report.lhs = lhs;
      report.rhs = rhs;
      worst = c;
    }
  }

  if (!is_even_integer(p) && worst) {
    const auto fine = std::make_shared<const QuadratureGrid>(haar_grid(TwoL(grid_band + band)));
    const double coarse_norm = group_lp_norm(synthesize(*worst, grid), p);
    const double fine_norm = group_lp_norm(synthesize(*worst, fine), p);
    report.grid_residual = std::abs(coarse_norm - fine_norm) / fine_norm;
  }

  auto fail = [&](std::string why) {
    report.passed = false;
    report.failures.push_back(std::move(why));
  };
  const double lo = *std::min_element(report.ratios.begin(), report.ratios.end());
  if (which == Inequality::plancherel || (p == 2 && (which == Inequality::hardy_littlewood ||
                                                     which == Inequality::hl_dual))) {
    if (std::abs(report.ratio - 1) > 1e-9 || std::abs(lo - 1) > 1e-9) fail("Plancherel identity off by more than 1e-9");
  }
  if (which == Inequality::hausdorff_young && report.ratio > 1 + 1e-9) fail("Hausdorff-Young ratio exceeds 1 + 1e-9");
  if (which == Inequality::general_paley) {
    report.endpoint_error = endpoint_error;
    if (endpoint_error > 1e-10) fail("endpoint identities off by more than 1e-10");
  }
  if (which == Inequality::necessity) report.note = "levels summed in half-integer steps of l";
  return report;
}

}  // namespace su2
