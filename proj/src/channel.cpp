#include "relaycap/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relaycap {

namespace {

void require_gain(const PolarGain& g, const char* name) {
  if (!std::isfinite(g.magnitude) || g.magnitude < 0.0)
    throw std::invalid_argument(std::string(name) + ": magnitude must be finite and >= 0");
  if (!std::isfinite(g.phase) || g.phase < -std::numbers::pi || g.phase >= std::numbers::pi)
    throw std::invalid_argument(std::string(name) + ": phase must lie in [-pi, pi)");
}

void require_nonneg(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
}

}  // namespace

ChannelGains::ChannelGains(PolarGain h21, PolarGain h31, PolarGain h32, double p1, double p2)
    : h21_(h21), h31_(h31), h32_(h32), p1_(p1), p2_(p2) {
  require_gain(h21_, "h21");
  require_gain(h31_, "h31");
  require_gain(h32_, "h32");
  require_nonneg(p1_, "P1");
  require_nonneg(p2_, "P2");
}

SnrTriple SnrTriple::make(double a, double b, double c, double theta_a, double theta_b,
                          double theta_c) {
  require_nonneg(a, "a");
  require_nonneg(b, "b");
  require_nonneg(c, "c");
  return {a, b, c, theta_a, theta_b, theta_c};
}

double wrap_phase(double radians) {
  double r = std::remainder(radians, 2.0 * std::numbers::pi);
  if (r >= std::numbers::pi) r -= 2.0 * std::numbers::pi;
  if (r < -std::numbers::pi) r = -std::numbers::pi;
  return r;
}

SnrTriple derive_snr(const ChannelGains& g) {
  const auto sq = [](double m) { return m * m; };
  return SnrTriple{
      .a = sq(g.h31().magnitude) * g.p1(),
      .b = sq(g.h32().magnitude) * g.p2(),
      .c = sq(g.h21().magnitude) * g.p1(),
      .theta_a = g.h31().phase,
      .theta_b = g.h32().phase,
      .theta_c = g.h21().phase,
  };
}

int snr_level(double snr) {
  if (!(snr > 1.0)) return 0;
  // snr = m * 2^e, m in [0.5, 1): log2(snr) lies in [e-1, e), equal to e-1
  // only when m is exactly one half.
  int e = 0;
  const double m = std::frexp(snr, &e);
  return m == 0.5 ? e - 1 : e;
}

DeterministicLevels deterministic_levels(const SnrTriple& snr) {
  return {.n21 = snr_level(snr.c), .n31 = snr_level(snr.a), .n32 = snr_level(snr.b)};
}

}  // namespace relaycap
