#include "relaycap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relaycap/rates.hpp"

namespace relaycap {

CorrelationCoefficient::CorrelationCoefficient(double rho) : rho_(rho), complement_(1.0 - rho) {
  if (!(rho >= 0.0 && rho <= 1.0))
    throw std::invalid_argument("correlation coefficient must lie in [0, 1]");
}

CorrelationCoefficient CorrelationCoefficient::from_complement(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("correlation complement must lie in [0, 1]");
  CorrelationCoefficient r;
  r.rho_ = 1.0 - q;
  r.complement_ = q;
  return r;
}

double c1_plus(CorrelationCoefficient rho, const SnrTriple& snr) {
  return log2_1p(rho.complement() * (1.0 + rho.value()) * (snr.a + snr.c));
}

double c2_plus(CorrelationCoefficient rho, const SnrTriple& snr) {
  return log2_1p(snr.a + snr.b + 2.0 * rho.value() * std::sqrt(snr.a * snr.b));
}

CorrelationCoefficient optimal_rho(const SnrTriple& snr) {
  const double a = snr.a, b = snr.b, c = snr.c;
  if (c <= b || a + c == 0.0) return CorrelationCoefficient{};
  // Root of (a+c) rho^2 + 2 sqrt(ab) rho + b - c = 0, written as
  // (c - b) / (sqrt(c(a-b+c)) + sqrt(ab)) to avoid cancellation near b = c.
  const double s = std::sqrt(c * (a - b + c));
  const double sab = std::sqrt(a * b);
  const double rho = (c - b) / (s + sab);
  if (rho < 0.5) return CorrelationCoefficient{std::clamp(rho, 0.0, 1.0)};
  // Near rho = 1 the broadcast cut depends on 1 - rho, so build that directly:
  // 1 - rho = (sqrt(ab) + (b s + a c) / (s + c)) / (s + sqrt(ab)).
  const double q = (sab + (b * s + a * c) / (s + c)) / (s + sab);
  return CorrelationCoefficient::from_complement(std::clamp(q, 0.0, 1.0));
}

UpperBoundResult cutset_upper_bound(const SnrTriple& snr) {
  if (snr.c <= snr.b) {
    const CorrelationCoefficient zero;
    return {std::min(c1_plus(zero, snr), c2_plus(zero, snr)), zero, BoundCase::RelayLimited};
  }
  const CorrelationCoefficient rho = optimal_rho(snr);
  return {std::min(c1_plus(rho, snr), c2_plus(rho, snr)), rho, BoundCase::Crossing};
}

double cutset_oracle(const SnrTriple& snr, long grid_points) {
  if (grid_points < 2) throw std::invalid_argument("cutset_oracle: grid_points must be >= 2");
  const auto objective = [&](CorrelationCoefficient r) { return std::min(c1_plus(r, snr), c2_plus(r, snr)); };
  const double step = 1.0 / static_cast<double>(grid_points - 1);
  double best = objective(CorrelationCoefficient{0.0});
  long best_i = 0;
  for (long i = 1; i < grid_points; ++i) {
    const double v = objective(i == grid_points - 1 ? CorrelationCoefficient{1.0}
                                                    : CorrelationCoefficient{static_cast<double>(i) * step});
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Refine over [rho_{i-1}, rho_{i+1}], stepping in 1 - rho so points near 1 stay exact.
  const double q_hi = std::min(1.0, static_cast<double>(grid_points - best_i) * step);
  const double q_lo = std::max(0.0, static_cast<double>(grid_points - 2 - best_i) * step);
  const double fine = (q_hi - q_lo) / static_cast<double>(grid_points - 1);
  for (long j = 0; j < grid_points; ++j) {
    const double q = j == grid_points - 1 ? q_lo : q_hi - static_cast<double>(j) * fine;
    best = std::max(best, objective(CorrelationCoefficient::from_complement(std::clamp(q, 0.0, 1.0))));
  }
  return best;
}

}  // namespace relaycap
