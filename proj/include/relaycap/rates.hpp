#pragma once

#include "relaycap/channel.hpp"

namespace relaycap {

/// Everything computed for one channel instance.
struct RateReport {
  SnrTriple snr;
  double c_plus = 0.0;
  double rho_star = 0.0;
  double r_df = 0.0;
  double r_cf = 0.0;
  double r_af = 0.0;  // rate of the AF scheme (relay switched off when a > c)
  bool af_relay_active = false;
  int c_d = 0;
  double delta1 = 0.0;  // c_plus - r_cf
  double delta2 = 0.0;  // c_plus - r_af
};

struct AfClosedFormParts {
  double K = 0.0;
  double L = 0.0;
  double M = 0.0;
};

struct CfDecomposition {
  double direct_term = 0.0;
  double relay_term = 0.0;
  double delta = 0.0;
};

struct AfSchemeRate {
  double rate = 0.0;
  bool relay_active = false;
};

/// log2(1 + x), accurate for small x.
double log2_1p(double x);

double rate_df(const SnrTriple& snr);
double rate_cf(const SnrTriple& snr);

/// Splits R_CF into a direct-link part log2(1+a) and a relaying part
/// log2(1 + delta * min(b, c) / (1 + a)). delta is 0 when b = c = 0.
CfDecomposition cf_decomposition(const SnrTriple& snr);

AfClosedFormParts af_parts(const SnrTriple& snr);

/// Uniform-allocation AF rate over the unit-memory ISI channel in closed
/// form: log2((K + sqrt(L)) / (1 + b + c)) - 1.
double rate_af_closed(const SnrTriple& snr);

/// AF with relay selection: the relay is switched off when a > c.
AfSchemeRate af_scheme_rate(const SnrTriple& snr);

/// min{max{n21, n31}, max{n32, n31}}.
int deterministic_capacity(const DeterministicLevels& levels);

/// Second form: n31 + [min{n21, n32} - n31]^+. Kept for cross-checking.
int deterministic_capacity_routed(const DeterministicLevels& levels);

RateReport rate_report(const SnrTriple& snr);

}  // namespace relaycap
