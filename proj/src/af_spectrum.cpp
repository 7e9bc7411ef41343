#include "relaycap/af_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "relaycap/kernels.hpp"
#include "relaycap/stable_sum.hpp"

namespace relaycap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kWaterfillMaxIter = 200;
constexpr double kWaterfillResidual = 1e-12;

}  // namespace

IsiTaps build_isi(const SnrTriple& snr) {
  const double a = snr.a, b = snr.b, c = snr.c;
  const double denom = b + c + 1.0;
  return {
      .h0_mag = std::sqrt(a * (c + 1.0) / denom),
      .h1_mag = std::sqrt(b * c / denom),
      .h0_phase = snr.theta_a,
      .h1_phase = snr.theta_b + snr.theta_c,
  };
}

SpectrumProfile sample_spectrum(const IsiTaps& taps, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_spectrum: grid size must be >= 2");
  SpectrumProfile p;
  p.w.resize(n);
  for (std::size_t k = 0; k < n; ++k) p.w[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  p.gain_sq = parallel::spectrum_gain(taps.h0_mag, taps.h1_mag, taps.h0_phase - taps.h1_phase, n);
  p.allocation.assign(n, 1.0);
  return p;
}

double rate_quadrature(const SpectrumProfile& profile) {
  return parallel::quadrature_rate(profile.allocation, profile.gain_sq);
}

GrIdentity verify_gr_identity(double mu, double nu, double y, std::size_t n) {
  if (!(nu > 0.0) || !(mu >= nu))
    throw std::invalid_argument("verify_gr_identity: requires mu >= nu > 0");
  if (n < 2) throw std::invalid_argument("verify_gr_identity: grid size must be >= 2");
  std::vector<double> terms(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    terms[k] = std::log(mu + nu * std::cos(x + y));
  }
  const double lhs = kTwoPi * pairwise_sum(terms) / static_cast<double>(n);
  const double rhs = kTwoPi * std::log((mu + std::sqrt((mu - nu) * (mu + nu))) / 2.0);
  return {lhs, rhs};
}

SpectrumProfile waterfill(const SpectrumProfile& profile, double budget) {
  if (!(budget > 0.0) || !std::isfinite(budget))
    throw std::invalid_argument("waterfill: budget must be positive");
  const std::size_t n = profile.grid_size();
  std::vector<double> inv(n, std::numeric_limits<double>::infinity());
  double inv_min = std::numeric_limits<double>::infinity();
  double inv_max = 0.0;
  std::size_t positive = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (profile.gain_sq[k] > 0.0) {
      inv[k] = 1.0 / profile.gain_sq[k];
      inv_min = std::min(inv_min, inv[k]);
      inv_max = std::max(inv_max, inv[k]);
      ++positive;
    }
  }
  if (positive == 0) throw std::domain_error("waterfill: channel has zero gain everywhere");

  const double nd = static_cast<double>(n);
  const auto mean_power = [&](double level) {
    StableSum s;
    for (double v : inv)
      if (v < level) s.add(level - v);
    return s.get() / nd;
  };

  // Pouring everything into the best bin needs level = inv_min + N * budget;
  // with every bin usable, inv_max + budget already suffices.
  double lo = inv_min;
  double hi = inv_min + nd * budget;
  if (positive == n) hi = std::min(hi, inv_max + budget);

  const double tol = kWaterfillResidual * std::max(1.0, budget);
  double level = hi;
  for (int it = 0; it < kWaterfillMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double power = mean_power(mid);
    level = mid;
    if (std::abs(power - budget) <= tol) break;
    if (power < budget)
      lo = mid;
    else
      hi = mid;
    if (std::nextafter(lo, hi) >= hi) break;
  }

  // Solve exactly on the active set found by bisection.
  StableSum active_inv;
  std::size_t active = 0;
  for (double v : inv)
    if (v < level) {
      active_inv.add(v);
      ++active;
    }
  if (active > 0) {
    const double exact = (nd * budget + active_inv.get()) / static_cast<double>(active);
    bool consistent = true;
    for (double v : inv)
      if ((v < level) != (v < exact)) {
        consistent = false;
        break;
      }
    if (consistent) level = exact;
  }

  SpectrumProfile out = profile;
  for (std::size_t k = 0; k < n; ++k) out.allocation[k] = std::max(0.0, level - inv[k]);
  return out;
}

double rate_af_quadrature(const SnrTriple& snr, std::size_t n) {
  return rate_quadrature(sample_spectrum(build_isi(snr), n));
}

}  // namespace relaycap
