#pragma once

#include <numbers>

namespace relaycap {

/// A complex gain in polar form. Magnitude is >= 0, phase in [-pi, pi).
struct PolarGain {
  double magnitude = 0.0;
  double phase = 0.0;
};

/// Physical parameters of the full-duplex three-node relay channel:
/// source (1), relay (2), destination (3).
class ChannelGains {
 public:
  /// Throws std::invalid_argument if any magnitude or power is negative or
  /// non-finite, or any phase is outside [-pi, pi).
  ChannelGains(PolarGain h21, PolarGain h31, PolarGain h32, double p1, double p2);

  const PolarGain& h21() const { return h21_; }
  const PolarGain& h31() const { return h31_; }
  const PolarGain& h32() const { return h32_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }

 private:
  PolarGain h21_, h31_, h32_;
  double p1_, p2_;
};

/// Received SNRs of the three links (linear scale) plus the gain phases.
///   a: source -> destination, b: relay -> destination, c: source -> relay.
struct SnrTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double theta_a = 0.0;
  double theta_b = 0.0;
  double theta_c = 0.0;

  /// Validating constructor for magnitude-only use; phases default to zero.
  static SnrTriple make(double a, double b, double c, double theta_a = 0.0,
                        double theta_b = 0.0, double theta_c = 0.0);
};

/// Signal levels of the linear deterministic model.
struct DeterministicLevels {
  int n21 = 0;
  int n31 = 0;
  int n32 = 0;

  bool operator==(const DeterministicLevels&) const = default;
};

/// Wraps an angle into [-pi, pi).
double wrap_phase(double radians);

SnrTriple derive_snr(const ChannelGains& gains);

/// max(0, ceil(log2(snr))), exact at powers of two.
int snr_level(double snr);

DeterministicLevels deterministic_levels(const SnrTriple& snr);

}  // namespace relaycap
