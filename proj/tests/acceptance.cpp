// One PASS/FAIL line per acceptance criterion. Argument: path to su2tool.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "su2/interpolation.hpp"
#include "su2/io.hpp"
#include "su2/multipliers.hpp"
#include "su2/wigner.hpp"

using namespace su2;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

double relative(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

// Least-squares slope of log y against log x.
double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += std::log(x[i]), my += std::log(y[i]);
  mx /= double(x.size());
  my /= double(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. unitarity, homomorphism and Schur orthogonality for 2l ≤ 20
Outcome representation() {
  const auto start = Clock::now();
  const int top = 20;
  std::mt19937_64 rng(2024);
  double unitarity = 0, homomorphism = 0;
  for (int pair = 0; pair < 100; ++pair) {
    const auto u = random_element(rng), v = random_element(rng);
    const auto tu = representation_ladder(TwoL(top), u);
    const auto tv = representation_ladder(TwoL(top), v);
    const auto tuv = representation_ladder(TwoL(top), u * v);
    for (int k = 0; k <= top; ++k) {
      const auto id = Eigen::MatrixXcd::Identity(k + 1, k + 1);
      unitarity = std::max(unitarity, (tu[k] * tu[k].adjoint() - id).cwiseAbs().maxCoeff());
      unitarity = std::max(unitarity, (tv[k] * tv[k].adjoint() - id).cwiseAbs().maxCoeff());
      homomorphism = std::max(homomorphism, (tuv[k] - tu[k] * tv[k]).cwiseAbs().maxCoeff());
    }
  }

  // Schur sums Σ_j w_j t^l_mn(u_j) conj(t^l'_m'n'(u_j)) on haar_grid(40). On the product grid
  // t_mn = e^{-imα'} d_mn(β) e^{-inγ'} with α' = α + π/2, γ' = γ - π/2, so each sum is an
  // alpha sum times a gamma sum times a beta sum. The factorization is checked against
  // matrix_coefficient at grid nodes first.
  const auto grid = haar_grid(TwoL(2 * top));
  const auto& layout = *grid.layout();
  const auto na = layout.alphas.size(), nb = layout.betas.size(), ng = layout.gammas.size();
  auto node = [&](Eigen::Index j, Eigen::Index a, Eigen::Index g) { return (j * na + a) * ng + g; };
  auto factored = [&](int k, int r, int c, Eigen::Index j, Eigen::Index a, Eigen::Index g) {
    const double m = 0.5 * (2 * r - k), n = 0.5 * (2 * c - k);
    const double phase = -m * (layout.alphas(a) + kPi / 2) - n * (layout.gammas(g) - kPi / 2);
    return std::polar(little_d(TwoL(k), layout.betas(j))(r, c), phase);
  };
  double factor_error = 0, weight_error = 0;
  for (int s = 0; s < 200; ++s) {
    const Eigen::Index j = rng() % nb, a = rng() % na, g = rng() % ng;
    const auto& u = grid.nodes()[static_cast<std::size_t>(node(j, a, g))];
    for (int k : {0, 1, 7, 20}) {
      const auto t = matrix_coefficient(TwoL(k), u);
      for (int r = 0; r <= k; ++r)
        for (int c = 0; c <= k; ++c) factor_error = std::max(factor_error, std::abs(t(r, c) - factored(k, r, c, j, a, g)));
    }
  }
  for (Eigen::Index j = 0; j < nb; ++j)
    for (Eigen::Index a = 0; a < na; ++a)
      for (Eigen::Index g = 0; g < ng; ++g)
        weight_error = std::max(weight_error,
                                std::abs(grid.weights()(node(j, a, g)) - layout.beta_weights(j) / double(na * ng)));

  struct Entry {
    int k, twom, twon;
  };
  std::vector<Entry> entries;
  for (int k = 0; k <= top; ++k)
    for (int r = 0; r <= k; ++r)
      for (int c = 0; c <= k; ++c) entries.push_back({k, 2 * r - k, 2 * c - k});
  const auto count = static_cast<Eigen::Index>(entries.size());
  Eigen::MatrixXd d(count, nb);
  for (Eigen::Index j = 0; j < nb; ++j) {
    Eigen::Index e = 0;
    for (int k = 0; k <= top; ++k) {
      const auto dk = little_d(TwoL(k), layout.betas(j));
      for (int r = 0; r <= k; ++r)
        for (int c = 0; c <= k; ++c) d(e++, j) = dk(r, c);
    }
  }
  const Eigen::MatrixXd beta_sums = d * layout.beta_weights.asDiagonal() * d.transpose();
  // angle sums indexed by the difference of doubled weights, -2·top..2·top
  auto angle_sums = [&](const Eigen::VectorXd& angles, double shift) {
    std::vector<Complex> out(4 * top + 1);
    for (int diff = -2 * top; diff <= 2 * top; ++diff) {
      Complex sum = 0;
      for (Eigen::Index a = 0; a < angles.size(); ++a) sum += std::polar(1.0, -0.5 * diff * (angles(a) + shift));
      out[diff + 2 * top] = sum / double(angles.size());
    }
    return out;
  };
  const auto alpha_sums = angle_sums(layout.alphas, kPi / 2);
  const auto gamma_sums = angle_sums(layout.gammas, -kPi / 2);
  double schur = 0;
  for (Eigen::Index x = 0; x < count; ++x)
    for (Eigen::Index y = 0; y < count; ++y) {
      const auto &ex = entries[x], &ey = entries[y];
      const Complex value = alpha_sums[ex.twom - ey.twom + 2 * top] * gamma_sums[ex.twon - ey.twon + 2 * top] *
                            beta_sums(x, y);
      const double expected = x == y ? 1.0 / (ex.k + 1) : 0.0;
      schur = std::max(schur, std::abs(value - expected));
    }
  const double elapsed = seconds_since(start);
  const bool pass = unitarity <= 1e-9 && homomorphism <= 1e-9 && schur <= 1e-9 && factor_error <= 1e-9 &&
                    weight_error <= 1e-15 && elapsed <= 30;
  return {pass, fmt("unitarity %.2e, homomorphism %.2e, Schur %.2e over %d entries (factorization %.2e), %.1f s",
                    unitarity, homomorphism, schur, int(count), factor_error, elapsed)};
}

struct Ensemble {
  std::shared_ptr<const QuadratureGrid> grid;
  std::vector<FourierCoefficients> coefficients;  // padded to band 16
  std::vector<GridFunction> functions;
};

const Ensemble& plancherel_ensemble() {
  static const Ensemble ensemble = [] {
    Ensemble e;
    e.grid = std::make_shared<const QuadratureGrid>(haar_grid(TwoL(32)));
    for (int i = 0; i < 50; ++i) {
      auto rng = member_rng(31, static_cast<std::uint64_t>(i));
      const TwoL band(1 + i % 16);
      auto c = random_coefficients(band, rng).truncated(TwoL(16));
      e.functions.push_back(synthesize(c, e.grid));
      e.coefficients.push_back(std::move(c));
    }
    return e;
  }();
  return ensemble;
}

// 2. ‖f‖_2 = ‖f̂‖_ℓ²
Outcome plancherel() {
  const auto& e = plancherel_ensemble();
  double worst = 0;
  for (const auto& f : e.functions) {
    const double norm = group_lp_norm(f, 2.0);
    worst = std::max(worst, std::abs(norm - dual_lp_norm(forward(f, TwoL(16)), 2.0)) / norm);
  }
  return {worst <= 1e-9, fmt("max relative gap %.2e over 50 functions, 2l <= 16", worst)};
}

// 3. forward ∘ inverse = identity
Outcome round_trip() {
  const auto& e = plancherel_ensemble();
  double worst = 0;
  for (std::size_t i = 0; i < e.functions.size(); ++i)
    worst = std::max(worst, max_entry_difference(forward(e.functions[i], TwoL(16)), e.coefficients[i]));
  return {worst <= 1e-9, fmt("max entry error %.2e", worst)};
}

// 4. ‖f̂‖_ℓ^{p'} ≤ ‖f‖_p
Outcome hausdorff_young() {
  EnsembleConfig ens{.size = 50, .seed = 41, .band = TwoL(16), .decay = 2.0};
  std::string detail;
  bool pass = true;
  for (double p : {1.0, 4.0 / 3, 2.0}) {
    const auto report = verify_ensemble(Inequality::hausdorff_young, {.p = p}, ens);
    const double worst = *std::max_element(report.ratios.begin(), report.ratios.end());
    pass = pass && report.passed && worst <= 1 + 1e-9;
    detail += fmt("p=%.4g max ratio %.6f", p, worst);
    if (report.grid_residual) detail += fmt(" (grid residual %.1e)", *report.grid_residual);
    detail += "; ";
  }
  return {pass, detail};
}

// 5. ‖t^l_ll‖_p = (lp+1)^{-1/p}
Outcome coefficient_norms() {
  const auto grid = haar_grid(TwoL(40));
  double worst = 0, lo = INFINITY, hi = 0;
  for (int k = 0; k <= 20; ++k)
    for (double p : {2.0, 4.0}) {
      const double value = diag_coefficient_lp_norm(TwoL(k), k, p, grid);
      worst = std::max(worst, std::abs(value - std::pow(0.5 * k * p + 1, -1 / p)));
      const double ratio = value / std::pow(k + 1.0, -1 / p);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  return {worst <= 1e-6 && lo >= 0.5 && hi <= 1.5,
          fmt("max error %.2e; ratio to (2l+1)^{-1/p} in [%.4f, %.4f]", worst, lo, hi)};
}

// 6. ‖D_N‖_2 = √N and ‖D_N‖_4 ~ N^{3/4}
Outcome dirichlet() {
  double worst = 0, lo = INFINITY, hi = 0;
  for (int n = 1; n <= 64; ++n) {
    worst = std::max(worst, std::abs(dirichlet_lp_norm(n, 2) - std::sqrt(double(n))));
    const double ratio = dirichlet_lp_norm(n, 4) / std::pow(n, 0.75);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {worst <= 1e-10 && lo >= 0.5 && hi <= 2.0,
          fmt("max L2 error %.2e; L4 ratio to N^{3/4} in [%.4f, %.4f]", worst, lo, hi)};
}

std::vector<double> worst_ratios(Inequality which, double p, const std::vector<int>& bands) {
  std::vector<double> out;
  for (int band : bands) {
    EnsembleConfig ens{.size = 20, .seed = 43, .band = TwoL(band), .decay = 2.0};
    out.push_back(verify_ensemble(which, {.p = p}, ens).ratio);
  }
  return out;
}

// 7. Hardy-Littlewood
Outcome hardy_littlewood() {
  const std::vector<int> bands{4, 8, 16};
  const std::vector<double> x(bands.begin(), bands.end());
  EnsembleConfig ens{.size = 20, .seed = 43, .band = TwoL(16), .decay = 2.0};
  const auto at2 = verify_ensemble(Inequality::hardy_littlewood, {.p = 2.0}, ens);
  const double lo2 = *std::min_element(at2.ratios.begin(), at2.ratios.end());
  bool pass = at2.passed && std::abs(at2.ratio - 1) <= 1e-9 && std::abs(lo2 - 1) <= 1e-9;
  std::string detail = fmt("p=2 ratios in [%.12f, %.12f]", lo2, at2.ratio);
  for (double p : {4.0 / 3, 1.5}) {
    const auto ratios = worst_ratios(Inequality::hardy_littlewood, p, bands);
    const double slope = log_slope(x, ratios);
    pass = pass && slope <= 0.05;
    detail += fmt("; p=%.4g max ratios %.4f %.4f %.4f, slope %.4f", p, ratios[0], ratios[1], ratios[2], slope);
  }
  return {pass, detail};
}

// 8. Paley
Outcome paley() {
  const TwoL band(12);
  const auto sigma = heat_symbol(band, 0.3);
  const double p = 1.5;
  EnsembleConfig ens{.size = 30, .seed = 47, .band = band, .decay = 2.0};
  const auto report = verify_ensemble(Inequality::paley, {.p = p, .sigma = sigma}, ens);
  const double constant = std::pow(report.ratio, p);  // lhs ≤ C K^{2-p} ‖f‖_p^p
  const double kappa = *report.paley_constant;
  bool holds = true;
  for (double r : report.ratios) holds = holds && std::pow(r, p) <= constant * (1 + 1e-12);

  double endpoint = 0;
  for (double q : {1.25, 4.0 / 3, 1.5, 1.75})
    for (double b : {q, q / (q - 1)}) {
      const auto gp = verify_ensemble(Inequality::general_paley, {.p = q, .b = b, .sigma = sigma}, ens);
      endpoint = std::max(endpoint, *gp.endpoint_error);
    }
  const double k_identity = paley_K(identity_symbol(TwoL(3)));
  return {holds && endpoint <= 1e-10 && k_identity == 30.0,
          fmt("recorded C = %.4f (K_sigma = %.4f, heat(0.3), p = 1.5); endpoint error %.2e; K for 4-level identity %.17g",
              constant, kappa, endpoint, k_identity)};
}

// 9. necessity
Outcome necessity() {
  bool pass = true;
  double witness_error = 0;
  for (double p : {3.0, 4.0})
    for (int l0 = 0; l0 <= 16; ++l0) {
      FourierCoefficients c{TwoL(16)};
      c[l0].setIdentity();  // f = (2l0+1) χ_{l0}
      double expected = 0;
      for (int k = 0; k <= l0; ++k) expected += std::pow(k + 1.0, p - 2);
      witness_error = std::max(witness_error, relative(necessity_lhs(c, p), expected));
    }
  pass = witness_error <= 1e-15;
  std::string detail = fmt("character witness relative error %.1e", witness_error);
  const std::vector<int> bands{4, 8, 16};
  const std::vector<double> x(bands.begin(), bands.end());
  for (double p : {3.0, 4.0}) {
    const auto ratios = worst_ratios(Inequality::necessity, p, bands);
    const double slope = log_slope(x, ratios);
    const bool bounded = std::all_of(ratios.begin(), ratios.end(), [](double r) { return std::isfinite(r); });
    pass = pass && bounded && slope <= 0.05;
    detail += fmt("; p=%.0f max ratios %.4f %.4f %.4f, slope %.4f", p, ratios[0], ratios[1], ratios[2], slope);
  }
  return {pass, detail};
}

// 10. lower ≤ empirical ≤ upper
Outcome sandwich() {
  const auto start = Clock::now();
  const TwoL band(12);
  const double slack = 1e-3;
  bool pass = true;
  std::string failures;
  double identity_gap = 0;
  for (const char* kind : {"identity", "projection:0", "projection:2", "projection:3", "heat:0.1", "heat:1"})
    for (auto [p, q] : {std::pair{2.0, 2.0}, std::pair{4.0 / 3, 4.0}, std::pair{1.5, 2.0}}) {
      const auto sigma = make_symbol(kind, band);
      const auto r = bounds_report(sigma, p, q, {}, slack);
      std::printf("    %-13s p=%.4f q=%.0f  lower_diag %.6f lower_trace %.6f empirical %.6f upper %.6f %s\n", kind, p, q,
                  r.lower_diag, r.lower_trace, r.empirical.value, r.upper, r.sandwich_ok() ? "ok" : "VIOLATED");
      if (!r.sandwich_ok()) {
        pass = false;
        failures += fmt(" %s(p=%.4g,q=%.4g): empirical %.6f vs upper %.6f;", kind, p, q, r.empirical.value, r.upper);
      }
      if (std::string(kind) == "identity" && p == 2)
        identity_gap = std::max({std::abs(r.lower_diag - 1), std::abs(r.lower_trace - 1), std::abs(r.upper - 1),
                                 std::abs(r.empirical.value - 1)});
    }
  const double elapsed = seconds_since(start);
  pass = pass && identity_gap <= 1e-6 && elapsed <= 120;
  return {pass, fmt("identity at p=q=2 within %.1e of 1; %.1f s;", identity_gap, elapsed) +
                    (failures.empty() ? std::string(" all 18 orderings hold") : " violated:" + failures)};
}

// 11. ‖A‖_{p→q} = ‖A*‖_{q'→p'}
Outcome duality() {
  const auto sigma = heat_symbol(TwoL(12), 1);
  const double p = 4.0 / 3, q = 4.0;
  const double direct = empirical_norm(sigma, p, q).value;
  const double dual = empirical_norm(adjoint_symbol(sigma), q / (q - 1), p / (p - 1)).value;
  const double gap = relative(dual, direct);
  return {gap <= 0.05, fmt("empirical %.6f vs adjoint %.6f, relative gap %.2e", direct, dual, gap)};
}

// 12. interpolation constants and weak (1,1)
Outcome interpolation() {
  const double k = marcinkiewicz_constant(4.0 / 3, 1, 2);
  const double t = theta(4.0 / 3, 1, 2);
  const int band = 12;
  const auto grid = std::make_shared<const QuadratureGrid>(haar_grid(TwoL(2 * band)));
  const auto e = GroupElement::identity();
  std::vector<GridFunction> witnesses;
  Eigen::VectorXcd delta = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid->size()));
  std::size_t nearest = 0;
  for (std::size_t j = 1; j < grid->size(); ++j)
    if (distance(grid->nodes()[j], e) < distance(grid->nodes()[nearest], e)) nearest = j;
  delta(static_cast<Eigen::Index>(nearest)) = 1.0;
  witnesses.emplace_back(grid, delta);
  for (double r : {0.1, 0.3, 0.6, 1.0, 1.5, 2.5}) {
    witnesses.push_back(sample(grid, [&](const GroupElement& u) { return Complex(distance(u, e) < r ? 1.0 : 0.0); }));
    witnesses.push_back(sample(grid, [&](const GroupElement& u) { return Complex(conjugacy_angle(u).t < r ? 1.0 : 0.0); }));
  }
  const LevelMap map = [&](const GridFunction& f) { return forward(f, TwoL(band)); };
  const auto weak = estimate_weak_norm(map, 1.0, witnesses, LevelMeasure::hardy_littlewood(), true);
  const double k_error = relative(k, std::pow(6.0, 0.75));
  return {k_error <= 1e-12 && t == 0.5 && weak.norm <= 4.0 / 3 + 1e-3,
          fmt("K = %.15f (relative error %.1e); theta = %.17g; weak (1,1) estimate %.6f over %zu step functions",
              k, k_error, t, weak.norm, witnesses.size())};
}

// 13. identical config, identical bytes
Outcome cli_determinism(const std::string& tool) {
  const std::string args = " verify hy --p 1.5 --ensemble 20 --band-limit 8 --seed 7 --out ";
  std::string contents[2];
  for (int run = 0; run < 2; ++run) {
    const std::string path = "acceptance_cli_" + std::to_string(run) + ".json";
    std::remove(path.c_str());
    const int raw = std::system((tool + args + path + " >/dev/null 2>&1").c_str());
    if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) return {false, fmt("su2tool exit status %d", raw)};
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    contents[run] = buffer.str();
  }
  return {!contents[0].empty() && contents[0] == contents[1],
          fmt("%zu and %zu bytes, %s", contents[0].size(), contents[1].size(),
              contents[0] == contents[1] ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path to su2tool>\n");
    return 2;
  }
  const std::string tool = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"representation correctness", representation},
      {"Plancherel", plancherel},
      {"round trip", round_trip},
      {"Hausdorff-Young", hausdorff_young},
      {"coefficient norm law", coefficient_norms},
      {"Dirichlet kernel", dirichlet},
      {"Hardy-Littlewood", hardy_littlewood},
      {"Paley", paley},
      {"necessity", necessity},
      {"multiplier sandwich", sandwich},
      {"duality", duality},
      {"interpolation constants", interpolation},
      {"CLI determinism", [&] { return cli_determinism(tool); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
    failed += outcome.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
