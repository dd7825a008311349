#include "su2/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

namespace su2 {

namespace {

void require_order(double p, double p1, double p2) {
  if (!(p1 >= 1 && p1 < p && p < p2)) throw DomainError("interpolation needs 1 <= p1 < p < p2");
}

}  // namespace

double theta(double p, double p1, double p2) {
  require_order(p, p1, p2);
  const double inv2 = std::isinf(p2) ? 0.0 : 1 / p2;
  return (1 / p1 - 1 / p) / (1 / p1 - inv2);
}

double marcinkiewicz_constant(double p, double p1, double p2) {
  require_order(p, p1, p2);
  const double upper = std::isinf(p2) ? 1.0 : p2 / (p2 - p);
  const double value = std::pow(p1 / (p - p1) + upper, 1 / p);
  return std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
}

double strong_bound(double M1, double M2, double p, double p1, double p2) {
  if (!(M1 >= 0 && M2 >= 0)) throw DomainError("weak-type norms must be nonnegative");
  const double t = theta(p, p1, p2);
  return marcinkiewicz_constant(p, p1, p2) * std::pow(M1, 1 - t) * std::pow(M2, t);
}

LevelMeasure LevelMeasure::plancherel() {
  return {"plancherel", [](int k) { return double(k + 1) * (k + 1); },
          [](int k, const FourierCoefficients::Block& h) { return hs_norm(h) / std::sqrt(k + 1.0); }};
}

LevelMeasure LevelMeasure::hardy_littlewood() {
  return {"hardy-littlewood", [](int k) { return std::pow(k + 1.0, -4); },
          [](int k, const FourierCoefficients::Block& h) { return std::pow(k + 1.0, 2.5) * hs_norm(h); }};
}

LevelMeasure LevelMeasure::paley(const MultiplierSymbol& sigma) {
  auto norms = std::make_shared<const std::vector<double>>(sigma.op_norms());
  auto norm_at = [norms](int k) { return static_cast<std::size_t>(k) < norms->size() ? (*norms)[k] : 0.0; };
  return {"paley:" + sigma.tag(),
          [norm_at](int k) {
            const double s = norm_at(k);
            return s * s * (k + 1.0) * (k + 1.0);
          },
          [norm_at](int k, const FourierCoefficients::Block& h) {
            const double s = norm_at(k);
            return s > 0 ? hs_norm(h) / (std::sqrt(k + 1.0) * s) : 0.0;
          }};
}

double level_distribution(const FourierCoefficients& h, const LevelMeasure& measure, double y, bool strict) {
  double total = 0;
  for (int k = 0; k < h.levels(); ++k) {
    const double m = measure.mass(k);
    if (m == 0) continue;
    const double v = measure.value(k, h[k]);
    if (strict ? v > y : v >= y) total += m;
  }
  return total;
}

WeakTypeEstimate estimate_weak_norm(const LevelMap& map, double p, std::span<const GridFunction> ensemble,
                                    const LevelMeasure& measure, bool strict) {
  if (!(p >= 1 && std::isfinite(p))) throw DomainError("weak-type estimate needs 1 <= p < infinity");
  constexpr int kLogPoints = 64;
  WeakTypeEstimate out;
  out.p = p;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const double fnorm = group_lp_norm(ensemble[i], p);
    if (!(fnorm > 0)) continue;
    const auto h = map(ensemble[i]);
    std::vector<double> values, masses;
    for (int k = 0; k < h.levels(); ++k) {
      const double m = measure.mass(k);
      if (m == 0) continue;
      const double v = measure.value(k, h[k]);
      if (v > 0) {
        values.push_back(v);
        masses.push_back(m);
      }
    }
    if (values.empty()) continue;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    std::vector<double> ys;
    for (double v : values) ys.push_back(strict ? std::nextafter(v, 0.0) : v);
    for (int j = 0; j < kLogPoints; ++j)
      ys.push_back(*lo * std::pow(*hi / *lo, double(j) / (kLogPoints - 1)));
    for (double y : ys) {
      if (!(y > 0)) continue;
      double nu = 0;
      for (std::size_t k = 0; k < values.size(); ++k)
        if (strict ? values[k] > y : values[k] >= y) nu += masses[k];
      const double ratio = y * std::pow(nu, 1 / p) / fnorm;
      ++out.samples;
      if (ratio > out.norm) {
        out.norm = ratio;
        out.worst_y = y;
        out.worst_member = static_cast<int>(i);
      }
    }
  }
  return out;
}

}  // namespace su2
