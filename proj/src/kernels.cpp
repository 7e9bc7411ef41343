#include "relaycap/kernels.hpp"

#include <cmath>
#include <cstddef>

#include "relaycap/bounds.hpp"
#include "relaycap/gaps.hpp"
#include "relaycap/stable_sum.hpp"

namespace relaycap {

SampleCheck check_sample(const SnrTriple& snr) {
  const RateReport r = rate_report(snr);
  SampleCheck out;
  out.delta1 = r.delta1;
  out.delta2 = r.delta2;
  out.raw_af_gap = r.c_plus - rate_af_closed(snr);
  out.relay_active = r.af_relay_active;
  out.gap_ok = r.delta1 >= -kGapTol && r.delta1 <= 1.0 + kGapTol && r.delta2 >= -kGapTol &&
               r.delta2 <= 2.0 + kGapTol && (r.af_relay_active || r.delta2 <= 1.0 + kGapTol);
  if (snr.b < snr.c) {
    out.certificate_ok = out.certificate_ok && certificate_cf(snr).passed;
    ++out.certificates;
  }
  if (snr.a <= snr.c) {
    out.certificate_ok = out.certificate_ok && certificate_af(snr).passed;
    ++out.certificates;
  }
  return out;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double gain_at(double h0, double h1, double phase, std::size_t k, std::size_t n) {
  const double w = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  return h0 * h0 + h1 * h1 + 2.0 * h0 * h1 * std::cos(w + phase);
}

inline double rate_term(double alloc, double gain) { return log2_1p(alloc * gain); }

}  // namespace

namespace serial {

std::vector<RateReport> evaluate(std::span<const SnrTriple> snrs) {
  std::vector<RateReport> out(snrs.size());
  for (std::size_t i = 0; i < snrs.size(); ++i) out[i] = rate_report(snrs[i]);
  return out;
}

std::vector<SampleCheck> check(std::span<const SnrTriple> snrs) {
  std::vector<SampleCheck> out(snrs.size());
  for (std::size_t i = 0; i < snrs.size(); ++i) out[i] = check_sample(snrs[i]);
  return out;
}

std::vector<double> spectrum_gain(double h0, double h1, double phase, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = gain_at(h0, h1, phase, k, n);
  return g;
}

double quadrature_rate(std::span<const double> allocation, std::span<const double> gain_sq) {
  std::vector<double> terms(gain_sq.size());
  for (std::size_t k = 0; k < terms.size(); ++k) terms[k] = rate_term(allocation[k], gain_sq[k]);
  return pairwise_sum(terms) / static_cast<double>(terms.size());
}

}  // namespace serial

namespace parallel {

std::vector<RateReport> evaluate(std::span<const SnrTriple> snrs) {
  std::vector<RateReport> out(snrs.size());
  const auto n = static_cast<std::ptrdiff_t>(snrs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = rate_report(snrs[i]);
  return out;
}

std::vector<SampleCheck> check(std::span<const SnrTriple> snrs) {
  std::vector<SampleCheck> out(snrs.size());
  const auto n = static_cast<std::ptrdiff_t>(snrs.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = check_sample(snrs[i]);
  return out;
}

std::vector<double> spectrum_gain(double h0, double h1, double phase, std::size_t n) {
  std::vector<double> g(n);
  const auto m = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < m; ++k) g[k] = gain_at(h0, h1, phase, static_cast<std::size_t>(k), n);
  return g;
}

double quadrature_rate(std::span<const double> allocation, std::span<const double> gain_sq) {
  std::vector<double> terms(gain_sq.size());
  const auto m = static_cast<std::ptrdiff_t>(terms.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < m; ++k) terms[k] = rate_term(allocation[k], gain_sq[k]);
  return pairwise_sum(terms) / static_cast<double>(terms.size());
}

}  // namespace parallel

}  // namespace relaycap
