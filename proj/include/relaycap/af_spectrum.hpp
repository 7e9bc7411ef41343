#pragma once

#include <cstddef>
#include <vector>

#include "relaycap/channel.hpp"

namespace relaycap {

/// Two-tap ISI channel seen by the destination under AF relaying:
/// tap 0 is the direct link, tap 1 the relayed copy delayed one symbol.
struct IsiTaps {
  double h0_mag = 0.0;
  double h1_mag = 0.0;
  double h0_phase = 0.0;
  double h1_phase = 0.0;
};

/// |H(w)|^2 and the power allocation on the grid w_k = 2 pi k / N.
struct SpectrumProfile {
  std::vector<double> w;
  std::vector<double> gain_sq;
  std::vector<double> allocation;

  std::size_t grid_size() const { return gain_sq.size(); }
};

struct GrIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};

inline constexpr std::size_t kDefaultGridSize = 4096;

IsiTaps build_isi(const SnrTriple& snr);

/// Throws std::invalid_argument if n < 2. Allocation starts uniform at 1.
SpectrumProfile sample_spectrum(const IsiTaps& taps, std::size_t n);

/// Periodic trapezoid rule for (1/2pi) int log2(1 + S(w) |H(w)|^2) dw.
double rate_quadrature(const SpectrumProfile& profile);

/// Quadrature and closed form of int_0^{2pi} ln(mu + nu cos(x + y)) dx.
/// Throws std::invalid_argument unless mu >= nu > 0 and n >= 2.
GrIdentity verify_gr_identity(double mu, double nu, double y, std::size_t n);

/// Water-filling over the grid: allocation = max(0, level - 1/gain) with the
/// level chosen by bisection so the grid mean equals budget.
/// Throws std::invalid_argument for budget <= 0 and std::domain_error when
/// every bin has zero gain.
SpectrumProfile waterfill(const SpectrumProfile& profile, double budget);

/// Convenience: uniform-allocation AF rate by quadrature.
double rate_af_quadrature(const SnrTriple& snr, std::size_t n = kDefaultGridSize);

}  // namespace relaycap
