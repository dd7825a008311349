// su2tool: forward/inverse transforms, inequality sweeps and multiplier bounds as JSON reports.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "su2/io.hpp"
#include "su2/wigner.hpp"

using namespace su2;

namespace {

enum ExitCode { kOk = 0, kAssertion = 1, kInput = 2, kConfig = 3 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int band_limit = 8;
  int oversample = 1;
  double p = 2.0;
  double q = 2.0;
  std::optional<double> b;
  std::optional<double> tau;
  int ensemble = 20;
  std::uint64_t seed = 1;
  double decay = 2.0;
  std::string symbol = "identity";
  bool strict_levelset = false;
  double slack = 1e-6;
  int ascent_steps = 10;
  std::string input;
  std::string function = "random";
  std::string out;
  std::string suite;

  Json to_json(const std::string& command) const {
    Json j = {{"command", command},         {"band_limit", band_limit}, {"oversample", oversample},
              {"p", p},                     {"q", q},                   {"ensemble", ensemble},
              {"seed", seed},               {"decay", decay},           {"symbol", symbol},
              {"strict_levelset", strict_levelset}, {"slack", slack},   {"ascent_steps", ascent_steps}};
    j["b"] = b ? Json(*b) : Json(nullptr);
    j["tau"] = tau ? Json(*tau) : Json(nullptr);
    if (command == "transform") {
      j["input"] = input;
      j["function"] = input.empty() ? function : "";
    }
    if (command == "verify") j["suite"] = suite;
    return j;
  }
};

// Values from a JSON config file fill every option not given on the command line.
void merge_config_file(const std::string& path, CLI::App& app, RunConfig& cfg) {
  const Json file = read_json(path);
  if (!file.is_object()) throw FormatError(path + ": config must be a JSON object");
  auto from_file = [&](const char* key, auto& target) {
    using T = std::decay_t<decltype(target)>;
    if (!file.contains(key) || app.count(std::string("--") + key) > 0) return;
    try {
      if constexpr (std::is_same_v<T, std::optional<double>>)
        target = file.at(key).get<double>();
      else
        target = file.at(key).get<T>();
    } catch (const Json::exception&) {
      throw FormatError(path + ": bad value for '" + key + "'");
    }
  };
  from_file("band-limit", cfg.band_limit);
  from_file("oversample", cfg.oversample);
  from_file("p", cfg.p);
  from_file("q", cfg.q);
  from_file("b", cfg.b);
  from_file("tau", cfg.tau);
  from_file("ensemble", cfg.ensemble);
  from_file("seed", cfg.seed);
  from_file("decay", cfg.decay);
  from_file("symbol", cfg.symbol);
  from_file("strict-levelset", cfg.strict_levelset);
  from_file("slack", cfg.slack);
  from_file("ascent-steps", cfg.ascent_steps);
  from_file("input", cfg.input);
  from_file("function", cfg.function);
  from_file("out", cfg.out);
}

void validate(const RunConfig& cfg) {
  auto require = [](bool ok, const std::string& why) {
    if (!ok) throw ConfigError(why);
  };
  require(cfg.band_limit >= 0 && cfg.band_limit <= kDefaultMaxTwoL,
          "band-limit must be in [0, " + std::to_string(kDefaultMaxTwoL) + "]");
  require(cfg.oversample >= 1, "oversample must be a positive integer");
  require(cfg.ensemble >= 1, "ensemble must be a positive integer");
  require(std::isfinite(cfg.p) && cfg.p >= 1, "p must be finite and >= 1");
  require(std::isfinite(cfg.q) && cfg.q >= 1, "q must be finite and >= 1");
  require(!cfg.b || std::isfinite(*cfg.b), "b must be finite");
  require(!cfg.tau || (std::isfinite(*cfg.tau) && *cfg.tau >= 0), "tau must be finite and >= 0");
  require(cfg.slack >= 0 && std::isfinite(cfg.slack), "slack must be finite and >= 0");
  require(cfg.ascent_steps >= 0, "ascent-steps must be >= 0");
  require(cfg.decay >= 0 && std::isfinite(cfg.decay), "decay must be finite and >= 0");
}

// "heat" takes its parameter from --tau; explicit "heat:<tau>" wins.
std::string symbol_kind(const RunConfig& cfg) {
  if (cfg.symbol == "heat") {
    if (!cfg.tau) throw ConfigError("symbol 'heat' needs --tau");
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "heat:%.17g", *cfg.tau);
    return buffer;
  }
  return cfg.symbol;
}

FourierCoefficients builtin_coefficients(const std::string& name, TwoL band, std::uint64_t seed) {
  if (name == "random") {
    auto rng = member_rng(seed, 0);
    return random_coefficients(band, rng);
  }
  FourierCoefficients c(band);
  if (name == "constant") {
    c[0](0, 0) = 1.0;
    return c;
  }
  if (name.rfind("character:", 0) == 0) {
    const int level = std::stoi(name.substr(10));
    if (level < 0 || level > band.value()) throw ConfigError("character level outside the band");
    c[level].setIdentity();
    c[level] /= double(level + 1);
    return c;
  }
  throw ConfigError("unknown function '" + name + "' (constant, random, character:<twol>)");
}

Json run_transform(const RunConfig& cfg, int& status) {
  const TwoL band(cfg.band_limit);
  const auto c = cfg.input.empty() ? builtin_coefficients(cfg.function, band, cfg.seed) : read_coefficients(cfg.input);
  const TwoL coeff_band = c.band_limit();
  const auto grid =
      std::make_shared<const QuadratureGrid>(haar_grid(TwoL(2 * coeff_band.value() * cfg.oversample)));
  const auto f = synthesize(c, grid);
  const auto back = forward(f, coeff_band);
  const double residual = max_entry_difference(back, c);
  Json nonzero = Json::array();
  for (int k = 0; k < back.levels(); ++k)
    if (back[k].cwiseAbs().maxCoeff() > 1e-12) nonzero.push_back(k);
  status = residual <= 1e-9 ? kOk : kAssertion;
  return {{"forward", to_json(back)},
          {"grid_band", grid->band_limit().value()},
          {"grid_size", grid->size()},
          {"nonzero_blocks", nonzero},
          {"inverse_l2_norm", group_lp_norm(f, 2.0)},
          {"round_trip_residual", residual}};
}

Json run_verify(const RunConfig& cfg, int& status) {
  const Inequality which = parse_inequality(cfg.suite);
  EnsembleConfig ensemble;
  ensemble.size = cfg.ensemble;
  ensemble.seed = cfg.seed;
  ensemble.band = TwoL(cfg.band_limit);
  ensemble.decay = cfg.decay;
  InequalityParams params{.p = cfg.p, .b = cfg.b, .sigma = std::nullopt};
  if (which == Inequality::paley || which == Inequality::general_paley)
    params.sigma = load_symbol(symbol_kind(cfg), ensemble.band);
  const auto report = verify_ensemble(which, params, ensemble);
  status = report.passed ? kOk : kAssertion;
  return to_json(report);
}

Json run_bounds(const RunConfig& cfg, int& status) {
  const auto sigma = load_symbol(symbol_kind(cfg), TwoL(cfg.band_limit));
  EmpiricalConfig empirical;
  empirical.ensemble = cfg.ensemble;
  empirical.seed = cfg.seed;
  empirical.ascent_steps = cfg.ascent_steps;
  empirical.decay = cfg.decay;
  const auto report = bounds_report(sigma, cfg.p, cfg.q, empirical, cfg.slack, cfg.strict_levelset);
  status = report.sandwich_ok() ? kOk : kAssertion;
  Json j = to_json(report);
  j["symbol"] = sigma.tag();
  j["paley_constant"] = paley_K(sigma, cfg.strict_levelset);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis on SU(2): transforms, inequality checks and multiplier bounds"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with default option values");
  app.add_option("--band-limit", cfg.band_limit, "band limit as 2l");
  app.add_option("--oversample", cfg.oversample, "grid oversampling factor for transform");
  app.add_option("--p", cfg.p, "exponent p");
  app.add_option("--q", cfg.q, "exponent q");
  app.add_option("--b", cfg.b, "general Paley exponent");
  app.add_option("--tau", cfg.tau, "heat symbol time");
  app.add_option("--symbol", cfg.symbol, "symbol kind or JSON file");
  app.add_option("--ensemble", cfg.ensemble, "ensemble size");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--decay", cfg.decay, "coefficient variance decay");
  app.add_flag("--strict-levelset", cfg.strict_levelset, "use strict level sets");
  app.add_option("--slack", cfg.slack, "relative slack for the bounds sandwich");
  app.add_option("--ascent-steps", cfg.ascent_steps, "power-iteration steps for the empirical norm");
  app.add_option("--out", cfg.out, "output JSON path (stdout when absent)");

  app.add_option("--input", cfg.input, "coefficient JSON file for transform");
  app.add_option("--function", cfg.function, "built-in for transform: constant, random, character:<twol>");

  auto* transform = app.add_subcommand("transform", "round trip of coefficients through the group");
  transform->fallthrough();
  auto* verify = app.add_subcommand("verify", "check an inequality on a random ensemble");
  verify->fallthrough();
  verify->add_option("suite", cfg.suite, "plancherel, hy, hl, hl-dual, paley, general-paley, necessity")->required();
  auto* bounds = app.add_subcommand("bounds", "lower, upper and empirical norms of a multiplier");
  bounds->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (!config_path.empty()) merge_config_file(config_path, app, cfg);
    validate(cfg);
    int status = kOk;
    Json result;
    if (command == "transform") result = run_transform(cfg, status);
    if (command == "verify") result = run_verify(cfg, status);
    if (command == "bounds") result = run_bounds(cfg, status);
    const std::string text = canonical_dump({{"config", cfg.to_json(command)}, {"report", std::move(result)}});
    if (cfg.out.empty())
      std::cout << text;
    else
      write_text(cfg.out, text);
    if (status != kOk) std::cerr << "assertion failed\n";
    return status;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::logic_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
}
