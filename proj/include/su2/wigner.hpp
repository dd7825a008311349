#pragma once

#include <memory>
#include <vector>

#include <Eigen/Core>

#include "su2/core.hpp"
#include "su2/quadrature.hpp"

namespace su2 {

inline constexpr int kDefaultMaxTwoL = 64;

// Real little-d matrices d^l(β) for 2l = 0..max_twol, indexed [twol](row m, col n),
// m and n ascending. Built from cos(β/2), sin(β/2).
using LittleDLadder = std::vector<Eigen::MatrixXd>;

// Memoized per thread; the cached and uncached paths run the same recurrence.
std::shared_ptr<const LittleDLadder> little_d_ladder(double cos_half, double sin_half, int max_twol);
LittleDLadder little_d_ladder_uncached(double cos_half, double sin_half, int max_twol);
void clear_little_d_cache();

Eigen::MatrixXd little_d(TwoL l, double beta);

// t^l(u) in the weight basis, rows and columns indexed by m, n = -l..l ascending.
Eigen::MatrixXcd matrix_coefficient(TwoL l, const GroupElement& u, int max_twol = kDefaultMaxTwoL);

// All t^l(u) for 2l = 0..band, sharing one recurrence.
std::vector<Eigen::MatrixXcd> representation_ladder(TwoL band, const GroupElement& u,
                                                    int max_twol = kDefaultMaxTwoL);

// Single entry t^l_{mn}(u), with m = twom/2 and n = twon/2.
Complex coefficient_entry(TwoL l, int twom, int twon, const GroupElement& u, int max_twol = kDefaultMaxTwoL);

// Σ_{n=-l}^{l} e^{int}, evaluated as the finite sum.
Complex character(TwoL l, ConjugacyAngle t);

// Quadrature value of ‖t^l_{nn}‖_{L^p}, n = twon/2.
double diag_coefficient_lp_norm(TwoL l, int twon, double p, const QuadratureGrid& grid);

// (1/2π ∫ |Σ_{k=1}^N e^{ikt}|^p dt)^{1/p}.
double dirichlet_lp_norm(int n, double p);

}  // namespace su2
