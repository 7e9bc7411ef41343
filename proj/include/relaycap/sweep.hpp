#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "relaycap/channel.hpp"
#include "relaycap/kernels.hpp"
#include "relaycap/rates.hpp"

namespace relaycap {

enum class SweepMode { Figure4, Figure5, Figure6, Figure7, RandomSweep, Custom };

/// Grid or random-sample description for sweeps. Grid modes sweep the
/// source-relay SNR c log-uniformly and tie the other links to it through
/// |h31|^2 = r31 |h21|^2 and |h32|^2 = r32 |h21|^2 with P1 = P2.
struct SweepConfig {
  SweepMode mode = SweepMode::Custom;
  double snr_min = 1e-2;
  double snr_max = 1e6;
  std::size_t points = 200;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  double r31 = 0.1;
  double r32 = 1.5;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;

  static SweepConfig figure(int number);
  static SweepConfig random(std::size_t samples, std::uint64_t seed);
};

/// Which gap a figure plots: 1 for delta1 (CF), 2 for delta2 (AF).
int figure_gap(SweepMode mode);

std::vector<SnrTriple> ratio_grid(const SweepConfig& config);

/// Sample `index` of a seeded log-uniform draw over [lo, hi]^3. Each sample
/// has its own generator, so results do not depend on evaluation order.
SnrTriple random_triple(std::uint64_t seed, std::uint64_t index, double lo, double hi);

std::vector<SnrTriple> random_triples(const SweepConfig& config);

struct OffendingSample {
  std::size_t index = 0;
  SnrTriple snr;
  bool gap_violation = false;
  bool certificate_failure = false;
};

struct VerifySummary {
  std::size_t samples = 0;
  double max_delta1 = 0.0;
  double min_delta1 = 0.0;
  double max_delta2 = 0.0;
  double min_delta2 = 0.0;
  double max_delta2_relay_off = 0.0;
  double max_raw_af_gap_relay_off = 0.0;
  std::size_t gap_violations = 0;
  std::size_t certificate_failures = 0;
  std::size_t certificates_checked = 0;
  std::vector<OffendingSample> offending;

  bool ok() const { return gap_violations == 0 && certificate_failures == 0; }
};

/// Index-ordered fold of per-sample checks.
VerifySummary summarize(std::span<const SnrTriple> snrs, std::span<const SampleCheck> checks);

VerifySummary run_verify(const SweepConfig& config);
std::vector<RateReport> run_grid(const SweepConfig& config);

}  // namespace relaycap
