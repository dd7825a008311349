#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "su2/symbol.hpp"
#include "su2/transform.hpp"

namespace su2 {

// Block products σ(l)·c(l), truncated to the smaller band.
FourierCoefficients apply(const MultiplierSymbol& sigma, const FourierCoefficients& c);

// σ1(l)·σ2(l); the operator A1 A2.
MultiplierSymbol compose(const MultiplierSymbol& outer, const MultiplierSymbol& inner);

// Blockwise conjugate transpose.
MultiplierSymbol adjoint_symbol(const MultiplierSymbol& sigma);

// sup_l min_n |σ(l)_nn| / (2l+1)^{1/p'+1/q}, in the weight basis.
double lower_bound_diag(const MultiplierSymbol& sigma, double p, double q);

// Same with |eigenvalues| of normal blocks in place of diagonal entries.
// NaN when some nonzero block is not normal.
double lower_bound_diag_spectral(const MultiplierSymbol& sigma, double p, double q);

// sup_l |Tr σ(l)| / (2l+1)^{1+1/p'+1/q}.
double lower_bound_trace(const MultiplierSymbol& sigma, double p, double q);

// sup_{s>0} s (Σ_{‖σ(l)‖_op > s} (2l+1)^2)^{1/p-1/q}; sup_l ‖σ(l)‖_op when p = q = 2.
double upper_bound(const MultiplierSymbol& sigma, double p, double q, bool strict = false);

MultiplierSymbol identity_symbol(TwoL band);
MultiplierSymbol projection_symbol(TwoL band, TwoL level);
// e^{-τ l(l+1)} I with l = twol/2.
MultiplierSymbol heat_symbol(TwoL band, double tau);
MultiplierSymbol diagonal_symbol(TwoL band, const std::function<Complex(int twol, int twon)>& entry,
                                 std::string tag = "diagonal");
// Complex Gaussian blocks with entry variance 1/(2l+1).
MultiplierSymbol random_symbol(TwoL band, std::uint64_t seed);

// Kind strings: identity, projection:<twol>, heat:<tau>, diagonal:alternating,
// diagonal:<v0>,<v1>,... (scalar per level), random:<seed>.
MultiplierSymbol make_symbol(const std::string& kind, TwoL band);

struct EmpiricalConfig {
  int ensemble = 16;
  std::uint64_t seed = 1;
  int ascent_steps = 10;
  int random_starts = 3;  // random members ascended besides the best candidate
  double decay = 2.0;
};

struct EmpiricalResult {
  double value = 0;
  double start_value = 0;  // best ratio before ascent
  std::string start;       // candidate whose ascent gave `value`
  int accepted_steps = 0;
  int grid_band = 0;
  double fine_value = 0;  // the winning function re-evaluated on a grid finer by the symbol band
};

// Heuristic lower estimate of ‖A‖_{L^p→L^q}.
EmpiricalResult empirical_norm(const MultiplierSymbol& sigma, double p, double q, const EmpiricalConfig& config = {});

struct BoundsReport {
  double p = 0, q = 0;
  double lower_diag = 0;
  double lower_diag_spectral = 0;
  double lower_trace = 0;
  double upper = 0;
  double empirical_lower = 0;
  EmpiricalResult empirical;
  double slack = 1e-6;
  bool lower_ok = true;  // max(lower_diag, lower_trace) ≤ empirical·(1+slack)
  bool upper_ok = true;  // empirical ≤ upper·(1+slack)
  bool sandwich_ok() const { return lower_ok && upper_ok; }
};

BoundsReport bounds_report(const MultiplierSymbol& sigma, double p, double q, const EmpiricalConfig& config = {},
                           double slack = 1e-6, bool strict = false);

}  // namespace su2
