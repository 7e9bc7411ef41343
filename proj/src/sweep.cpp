#include "relaycap/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace relaycap {

void SweepConfig::validate() const {
  const auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (!std::isfinite(snr_min) || !std::isfinite(snr_max) || !(snr_min > 0.0))
    fail("snr range must be finite and positive");
  if (snr_min > snr_max) fail("snr-min must not exceed snr-max");
  if (!std::isfinite(r31) || !std::isfinite(r32) || r31 < 0.0 || r32 < 0.0)
    fail("gain ratios must be finite and >= 0");
  if (mode == SweepMode::RandomSweep) {
    if (samples == 0) fail("samples must be >= 1");
  } else if (points < 2) {
    fail("points must be >= 2");
  }
}

SweepConfig SweepConfig::figure(int number) {
  SweepConfig cfg;
  switch (number) {
    case 4: cfg.mode = SweepMode::Figure4; cfg.r31 = 0.1; cfg.r32 = 1.5; break;
    case 5: cfg.mode = SweepMode::Figure5; cfg.r31 = 0.1; cfg.r32 = 0.8; break;
    case 6: cfg.mode = SweepMode::Figure6; cfg.r31 = 0.1; cfg.r32 = 1.5; break;
    case 7: cfg.mode = SweepMode::Figure7; cfg.r31 = 0.48; cfg.r32 = 0.5; break;
    default: throw std::invalid_argument("figure must be one of 4, 5, 6, 7");
  }
  return cfg;
}

SweepConfig SweepConfig::random(std::size_t samples, std::uint64_t seed) {
  SweepConfig cfg;
  cfg.mode = SweepMode::RandomSweep;
  cfg.snr_min = 1e-3;
  cfg.snr_max = 1e6;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

int figure_gap(SweepMode mode) {
  switch (mode) {
    case SweepMode::Figure4:
    case SweepMode::Figure5: return 1;
    case SweepMode::Figure6:
    case SweepMode::Figure7: return 2;
    default: return 0;
  }
}

std::vector<SnrTriple> ratio_grid(const SweepConfig& config) {
  config.validate();
  const double lo = std::log(config.snr_min), hi = std::log(config.snr_max);
  std::vector<SnrTriple> grid(config.points);
  for (std::size_t i = 0; i < config.points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(config.points - 1);
    const double c = i + 1 == config.points ? config.snr_max : std::exp(lo + t * (hi - lo));
    grid[i] = SnrTriple{.a = config.r31 * c, .b = config.r32 * c, .c = c};
  }
  return grid;
}

SnrTriple random_triple(std::uint64_t seed, std::uint64_t index, double lo, double hi) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_lo = std::log(lo), span = std::log(hi) - std::log(lo);
  const auto draw = [&] { return std::clamp(std::exp(log_lo + unit(gen) * span), lo, hi); };
  const double a = draw();
  const double b = draw();
  const double c = draw();
  return SnrTriple{.a = a, .b = b, .c = c};
}

std::vector<SnrTriple> random_triples(const SweepConfig& config) {
  config.validate();
  std::vector<SnrTriple> out(config.samples);
  const auto n = static_cast<std::ptrdiff_t>(config.samples);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = random_triple(config.seed, static_cast<std::uint64_t>(i), config.snr_min, config.snr_max);
  return out;
}

VerifySummary summarize(std::span<const SnrTriple> snrs, std::span<const SampleCheck> checks) {
  VerifySummary s;
  s.samples = checks.size();
  if (checks.empty()) return s;
  s.max_delta1 = s.min_delta1 = checks[0].delta1;
  s.max_delta2 = s.min_delta2 = checks[0].delta2;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const SampleCheck& c = checks[i];
    s.max_delta1 = std::max(s.max_delta1, c.delta1);
    s.min_delta1 = std::min(s.min_delta1, c.delta1);
    s.max_delta2 = std::max(s.max_delta2, c.delta2);
    s.min_delta2 = std::min(s.min_delta2, c.delta2);
    if (!c.relay_active) {
      s.max_delta2_relay_off = std::max(s.max_delta2_relay_off, c.delta2);
      s.max_raw_af_gap_relay_off = std::max(s.max_raw_af_gap_relay_off, c.raw_af_gap);
    }
    s.certificates_checked += static_cast<std::size_t>(c.certificates);
    if (!c.gap_ok) ++s.gap_violations;
    if (!c.certificate_ok) ++s.certificate_failures;
    if (!c.gap_ok || !c.certificate_ok)
      s.offending.push_back({i, snrs[i], !c.gap_ok, !c.certificate_ok});
  }
  return s;
}

VerifySummary run_verify(const SweepConfig& config) {
  if (config.mode != SweepMode::RandomSweep)
    throw std::invalid_argument("verify requires a random sweep configuration");
  const auto snrs = random_triples(config);
  const auto checks = parallel::check(snrs);
  return summarize(snrs, checks);
}

std::vector<RateReport> run_grid(const SweepConfig& config) {
  const auto snrs = config.mode == SweepMode::RandomSweep ? random_triples(config) : ratio_grid(config);
  return parallel::evaluate(snrs);
}

}  // namespace relaycap
