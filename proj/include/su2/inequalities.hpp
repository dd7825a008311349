#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "su2/symbol.hpp"
#include "su2/transform.hpp"

namespace su2 {

// Σ (2l+1)^{5p/2-4} ‖c(l)‖_HS^p for 1 < p ≤ 2.
double hardy_littlewood_lhs(const FourierCoefficients& c, double p);

// The same weighted sum for p ≥ 2, as an upper certificate for ‖f‖_p^p.
double hl_dual_rhs(const FourierCoefficients& c, double p);

// sup_{s>0} s Σ_{‖σ(l)‖_op ≥ s} (2l+1)^2 (strict: > s). Both give the same supremum.
double paley_K(const MultiplierSymbol& sigma, bool strict = false);

// Σ (2l+1)^{2-p/2} ‖c(l)‖_HS^p ‖σ(l)‖_op^{2-p} for 1 < p ≤ 2.
double paley_lhs(const FourierCoefficients& c, const MultiplierSymbol& sigma, double p);

// (Σ (2l+1)^{2-b/2} (‖c(l)‖_HS ‖σ(l)‖_op^{1/b-1/p'})^b)^{1/b} for p ≤ b ≤ p'.
double general_paley_lhs(const FourierCoefficients& c, const MultiplierSymbol& sigma, double p, double b);

// Σ_l (2l+1)^{p-2} (sup_{k≥l} |Tr c(k)|/(2k+1))^p for p > 2.
double necessity_lhs(const FourierCoefficients& c, double p);

enum class Inequality { plancherel, hausdorff_young, hardy_littlewood, hl_dual, paley, general_paley, necessity };

std::string to_string(Inequality which);
Inequality parse_inequality(const std::string& name);

struct InequalityParams {
  double p = 2.0;
  std::optional<double> b;                // general Paley exponent
  std::optional<MultiplierSymbol> sigma;  // Paley symbol; identity over the band when absent
};

struct EnsembleConfig {
  int size = 20;
  std::uint64_t seed = 1;
  TwoL band{8};
  double decay = 2.0;  // entry variance (2l+1)^{-decay}
};

// Both sides are in root form: ratio = lhs / rhs.
struct InequalityReport {
  std::string name;
  double p = 0;
  std::optional<double> b;
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;  // worst member
  std::vector<double> ratios;
  EnsembleConfig ensemble;
  int grid_band = 0;
  std::optional<double> paley_constant;   // K_σ
  std::optional<double> grid_residual;    // relative change of ‖f‖_p on a finer grid, non-even p
  std::optional<double> endpoint_error;   // general Paley identities at b = p and b = p'
  bool passed = true;                     // hard assertions only
  std::vector<std::string> failures;
  std::string note;
};

InequalityReport verify_ensemble(Inequality which, const InequalityParams& params, const EnsembleConfig& ensemble);

}  // namespace su2
