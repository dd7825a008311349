#include "su2/wigner.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace su2 {

namespace {

// One step of the recurrence from V_{L-1} to V_L. Entries are indexed by the
// power of z1 (i = l - m), so d^l is the reversal of the result.
Eigen::MatrixXd next_level(const Eigen::MatrixXd& prev, double c, double s) {
  const int big_l = static_cast<int>(prev.rows());
  Eigen::MatrixXd next(big_l + 1, big_l + 1);
  auto prev_at = [&](int i, int k) { return (i < 0 || i >= big_l) ? 0.0 : prev(i, k); };
  for (int k = 0; k <= big_l; ++k) {
    const bool use_first = k >= 1 && (k == big_l || k >= big_l - k);
    for (int i = 0; i <= big_l; ++i) {
      const double up = std::sqrt(static_cast<double>(i));
      const double down = std::sqrt(static_cast<double>(big_l - i));
      if (use_first)
        next(i, k) = (c * up * prev_at(i - 1, k - 1) - s * down * prev_at(i, k - 1)) / std::sqrt(double(k));
      else
        next(i, k) = (s * up * prev_at(i - 1, k) + c * down * prev_at(i, k)) / std::sqrt(double(big_l - k));
    }
  }
  return next;
}

void extend(LittleDLadder& raw, double c, double s, int max_twol) {
  if (raw.empty()) raw.push_back(Eigen::MatrixXd::Ones(1, 1));
  while (static_cast<int>(raw.size()) <= max_twol) raw.push_back(next_level(raw.back(), c, s));
}

LittleDLadder to_weight_order(const LittleDLadder& raw, int max_twol) {
  LittleDLadder out;
  out.reserve(max_twol + 1);
  for (int k = 0; k <= max_twol; ++k) out.push_back(raw[k].reverse());
  return out;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& key) const {
    return std::hash<std::uint64_t>{}(key.first * 0x9E3779B97F4A7C15ULL ^ key.second);
  }
};

struct LadderCache {
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const LittleDLadder>, PairHash> map;
};

thread_local LadderCache cache;
constexpr std::size_t kCacheEntries = 512;

void check_band(int twol, int max_twol) {
  if (twol > max_twol)
    throw BandLimitError("2l = " + std::to_string(twol) + " exceeds the maximum " + std::to_string(max_twol));
}

// Unit phases conj(a/|a|)^k and conj(b/|b|)^k for k = -big_l..big_l.
void phase_tables(const GroupElement& u, int big_l, std::vector<Complex>& pa, std::vector<Complex>& pb) {
  const double arg_a = std::abs(u.a()) > 0 ? std::arg(u.a()) : 0.0;
  const double arg_b = std::abs(u.b()) > 0 ? std::arg(u.b()) : 0.0;
  pa.resize(2 * big_l + 1);
  pb.resize(2 * big_l + 1);
  for (int k = -big_l; k <= big_l; ++k) {
    pa[k + big_l] = std::polar(1.0, -k * arg_a);
    pb[k + big_l] = std::polar(1.0, -k * arg_b);
  }
}

Eigen::MatrixXcd dress(const Eigen::MatrixXd& d, int twol, const std::vector<Complex>& pa,
                       const std::vector<Complex>& pb, int big_l) {
  Eigen::MatrixXcd t(twol + 1, twol + 1);
  for (int r = 0; r <= twol; ++r)
    for (int c = 0; c <= twol; ++c) t(r, c) = pa[r + c - twol + big_l] * pb[r - c + big_l] * d(r, c);
  return t;
}

}  // namespace

LittleDLadder little_d_ladder_uncached(double cos_half, double sin_half, int max_twol) {
  LittleDLadder raw;
  extend(raw, cos_half, sin_half, max_twol);
  return to_weight_order(raw, max_twol);
}

std::shared_ptr<const LittleDLadder> little_d_ladder(double cos_half, double sin_half, int max_twol) {
  const auto key = std::make_pair(std::bit_cast<std::uint64_t>(cos_half), std::bit_cast<std::uint64_t>(sin_half));
  auto it = cache.map.find(key);
  if (it != cache.map.end() && static_cast<int>(it->second->size()) > max_twol) return it->second;
  if (cache.map.size() >= kCacheEntries) cache.map.clear();
  auto ladder = std::make_shared<const LittleDLadder>(little_d_ladder_uncached(cos_half, sin_half, max_twol));
  cache.map[key] = ladder;
  return ladder;
}

void clear_little_d_cache() { cache.map.clear(); }

Eigen::MatrixXd little_d(TwoL l, double beta) {
  return (*little_d_ladder(std::cos(0.5 * beta), std::sin(0.5 * beta), l.value()))[l.value()];
}

Eigen::MatrixXcd matrix_coefficient(TwoL l, const GroupElement& u, int max_twol) {
  const int twol = l.value();
  check_band(twol, max_twol);
  const auto ladder = little_d_ladder(std::abs(u.a()), std::abs(u.b()), twol);
  std::vector<Complex> pa, pb;
  phase_tables(u, twol, pa, pb);
  return dress((*ladder)[twol], twol, pa, pb, twol);
}

std::vector<Eigen::MatrixXcd> representation_ladder(TwoL band, const GroupElement& u, int max_twol) {
  const int big_l = band.value();
  check_band(big_l, max_twol);
  const auto ladder = little_d_ladder(std::abs(u.a()), std::abs(u.b()), big_l);
  std::vector<Complex> pa, pb;
  phase_tables(u, big_l, pa, pb);
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(big_l + 1);
  for (int k = 0; k <= big_l; ++k) out.push_back(dress((*ladder)[k], k, pa, pb, big_l));
  return out;
}

Complex coefficient_entry(TwoL l, int twom, int twon, const GroupElement& u, int max_twol) {
  const int twol = l.value();
  check_band(twol, max_twol);
  if (std::abs(twom) > twol || std::abs(twon) > twol || (twom - twol) % 2 != 0 || (twon - twol) % 2 != 0)
    throw DomainError("weight indices out of range for this level");
  const auto ladder = little_d_ladder(std::abs(u.a()), std::abs(u.b()), twol);
  const int r = (twom + twol) / 2;
  const int c = (twon + twol) / 2;
  const double arg_a = std::abs(u.a()) > 0 ? std::arg(u.a()) : 0.0;
  const double arg_b = std::abs(u.b()) > 0 ? std::arg(u.b()) : 0.0;
  const int sum = (twom + twon) / 2;
  const int diff = (twom - twon) / 2;
  return std::polar(1.0, -sum * arg_a) * std::polar(1.0, -diff * arg_b) * (*ladder)[twol](r, c);
}

Complex character(TwoL l, ConjugacyAngle t) {
  Complex sum = 0.0;
  for (int twon = -l.value(); twon <= l.value(); twon += 2) sum += std::polar(1.0, 0.5 * twon * t.t);
  return sum;
}

double diag_coefficient_lp_norm(TwoL l, int twon, double p, const QuadratureGrid& grid) {
  const int twol = l.value();
  if (std::abs(twon) > twol || (twon - twol) % 2 != 0) throw DomainError("weight index out of range for this level");
  if (!(p > 0)) throw DomainError("p must be positive");
  const int idx = (twon + twol) / 2;
  double sum = 0.0;
  if (const auto& layout = grid.layout()) {
    for (Eigen::Index j = 0; j < layout->betas.size(); ++j) {
      const double beta = layout->betas(j);
      const auto ladder = little_d_ladder(std::cos(0.5 * beta), std::sin(0.5 * beta), twol);
      sum += layout->beta_weights(j) * std::pow(std::abs((*ladder)[twol](idx, idx)), p);
    }
  } else {
    for (std::size_t k = 0; k < grid.size(); ++k)
      sum += grid.weights()(static_cast<Eigen::Index>(k)) *
             std::pow(std::abs(coefficient_entry(l, twon, twon, grid.nodes()[k])), p);
  }
  return std::pow(sum, 1.0 / p);
}

double dirichlet_lp_norm(int n, double p) {
  if (n < 1) throw DomainError("Dirichlet kernel needs N >= 1");
  if (!(p > 0)) throw DomainError("p must be positive");
  // Trapezoid on the circle: exact for |D_N|^p when p is even and the grid is fine enough.
  const int m = std::max(1 << 15, 256 * n);
  double sum = 0.0;
  for (int k = 0; k < m; ++k) {
    const double t = 2 * kPi * k / m;
    const double value = k == 0 ? n : std::abs(std::sin(0.5 * n * t) / std::sin(0.5 * t));
    sum += std::pow(value, p);
  }
  return std::pow(sum / m, 1.0 / p);
}

}  // namespace su2
