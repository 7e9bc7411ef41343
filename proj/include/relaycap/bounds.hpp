#pragma once

#include "relaycap/channel.hpp"

namespace relaycap {

/// Real input correlation between source and relay, restricted to [0, 1].
class CorrelationCoefficient {
 public:
  constexpr CorrelationCoefficient() = default;
  /// Throws std::invalid_argument outside [0, 1].
  explicit CorrelationCoefficient(double rho);

  /// Builds rho = 1 - q from its complement, keeping q at full precision.
  static CorrelationCoefficient from_complement(double q);

  constexpr double value() const { return rho_; }
  /// 1 - rho, exact for inputs built from a complement.
  constexpr double complement() const { return complement_; }

 private:
  double rho_ = 0.0;
  double complement_ = 1.0;
};

enum class BoundCase {
  RelayLimited,  // c <= b, rho* = 0
  Crossing,      // b < c, the two cuts meet at rho*
};

struct UpperBoundResult {
  double c_plus = 0.0;
  CorrelationCoefficient rho_star;
  BoundCase case_tag = BoundCase::RelayLimited;
};

/// Broadcast cut: log2(1 + (1 - rho^2)(a + c)).
double c1_plus(CorrelationCoefficient rho, const SnrTriple& snr);

/// Multiple-access cut: log2(1 + a + b + 2 rho sqrt(ab)).
double c2_plus(CorrelationCoefficient rho, const SnrTriple& snr);

CorrelationCoefficient optimal_rho(const SnrTriple& snr);

UpperBoundResult cutset_upper_bound(const SnrTriple& snr);

/// Grid search for max over rho of min{C1+, C2+}: a uniform grid of
/// grid_points, then a second uniform grid of the same size across the two
/// cells around the best point. Throws std::invalid_argument if grid_points < 2.
double cutset_oracle(const SnrTriple& snr, long grid_points);

}  // namespace relaycap
