#include "relaycap/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "relaycap/bounds.hpp"
#include "relaycap/stable_sum.hpp"

namespace relaycap {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

double rate_df(const SnrTriple& snr) {
  const double direct = log2_1p(snr.a);
  const double relayed = std::min(log2_1p(snr.c), log2_1p(snr.a + snr.b));
  return std::max(direct, relayed);
}

double rate_cf(const SnrTriple& snr) {
  const double a = snr.a, b = snr.b, c = snr.c;
  return log2_1p(a + b * c / (1.0 + a + b + c));
}

CfDecomposition cf_decomposition(const SnrTriple& snr) {
  const double a = snr.a, b = snr.b, c = snr.c;
  const double delta = std::max(b, c) / (1.0 + a + b + c);
  return {
      .direct_term = log2_1p(a),
      .relay_term = log2_1p(delta * std::min(b, c) / (1.0 + a)),
      .delta = delta,
  };
}

AfClosedFormParts af_parts(const SnrTriple& snr) {
  const double a = snr.a, b = snr.b, c = snr.c;
  const double alpha2 = (a - b) * (a - b) + 2.0 * (a + b) + 1.0;
  return {
      .K = 1.0 + a + b + c + (a + b) * c,
      .L = (1.0 + c) * ((1.0 + a + b) * (1.0 + a + b) + alpha2 * c),
      .M = (1.0 + a + c) * (1.0 + b + c),
  };
}

double rate_af_closed(const SnrTriple& snr) {
  const double a = snr.a, b = snr.b, c = snr.c;
  const auto [K, L, M] = af_parts(snr);
  // log2((K + sqrt L) / (1+b+c)) - 1 = log2(1 + (sqrt L - T) / (2(1+b+c)))
  // where T = 2(1+b+c) - K. For T > 0 the numerator is rationalised using
  // L - T^2 = 4(a + 2ac + ac^2 + ab + bc + bc^2 + b^2 c - abc^2).
  const double T = 1.0 + b + c - a - (a + b) * c;
  const double root = std::sqrt(L);
  double num;
  if (T <= 0.0) {
    num = root - T;
  } else {
    const ScaledValue diff = stable_sum(
        {a, 2 * a * c, a * c * c, a * b, b * c, b * c * c, b * b * c, -a * b * c * c});
    num = 4.0 * diff.value / (root + T);
  }
  return std::max(0.0, log2_1p(num / (2.0 * (1.0 + b + c))));
}

AfSchemeRate af_scheme_rate(const SnrTriple& snr) {
  if (snr.a > snr.c) return {log2_1p(snr.a), false};
  return {rate_af_closed(snr), true};
}

int deterministic_capacity(const DeterministicLevels& n) {
  return std::min(std::max(n.n21, n.n31), std::max(n.n32, n.n31));
}

int deterministic_capacity_routed(const DeterministicLevels& n) {
  return n.n31 + std::max(std::min(n.n21, n.n32) - n.n31, 0);
}

RateReport rate_report(const SnrTriple& snr) {
  const UpperBoundResult ub = cutset_upper_bound(snr);
  const AfSchemeRate af = af_scheme_rate(snr);
  RateReport r;
  r.snr = snr;
  r.c_plus = ub.c_plus;
  r.rho_star = ub.rho_star.value();
  r.r_df = rate_df(snr);
  r.r_cf = rate_cf(snr);
  r.r_af = af.rate;
  r.af_relay_active = af.relay_active;
  r.c_d = deterministic_capacity(deterministic_levels(snr));
  r.delta1 = r.c_plus - r.r_cf;
  r.delta2 = r.c_plus - r.r_af;
  return r;
}

}  // namespace relaycap
