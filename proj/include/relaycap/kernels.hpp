#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "relaycap/channel.hpp"
#include "relaycap/rates.hpp"

namespace relaycap {

/// Slack on the gap theorems (bits).
inline constexpr double kGapTol = 1e-9;

/// Per-sample outcome of the gap and certificate checks.
struct SampleCheck {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double raw_af_gap = 0.0;  // c_plus - rate_af_closed, relay forced on
  bool relay_active = false;
  bool gap_ok = true;
  bool certificate_ok = true;
  int certificates = 0;
};

/// Evaluates gaps and every applicable certificate at one point.
SampleCheck check_sample(const SnrTriple& snr);

/// Reference kernels. Single-threaded.
namespace serial {
std::vector<RateReport> evaluate(std::span<const SnrTriple> snrs);
std::vector<SampleCheck> check(std::span<const SnrTriple> snrs);
std::vector<double> spectrum_gain(double h0, double h1, double phase, std::size_t n);
double quadrature_rate(std::span<const double> allocation, std::span<const double> gain_sq);
}  // namespace serial

/// OpenMP kernels. Bitwise identical to the serial ones for any thread
/// count: every element is computed independently and reductions happen
/// afterwards in index order.
namespace parallel {
std::vector<RateReport> evaluate(std::span<const SnrTriple> snrs);
std::vector<SampleCheck> check(std::span<const SnrTriple> snrs);
std::vector<double> spectrum_gain(double h0, double h1, double phase, std::size_t n);
double quadrature_rate(std::span<const double> allocation, std::span<const double> gain_sq);
}  // namespace parallel

}  // namespace relaycap
