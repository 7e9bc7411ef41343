#pragma once

#include <map>
#include <string>

#include "relaycap/channel.hpp"

namespace relaycap {

enum class Regime {
  CleB,     // c <= b
  BltC,     // b < c
  AleCleB,  // a <= c <= b
  AleBltC,  // a <= b < c
  BltAleC,  // b < a <= c
};

const char* regime_name(Regime r);

/// Evaluated proof quantities at one (a, b, c) and whether every sign
/// condition and identity held there.
struct CertificateResult {
  std::string name;
  Regime regime = Regime::BltC;
  std::map<std::string, double> values;
  std::map<std::string, bool> checks;
  bool passed = false;
};

/// Absolute slack used for sign checks and identities, multiplied by the
/// magnitude of the largest intermediate term.
inline constexpr double kCertificateRelTol = 1e-9;

double gap_cf(const SnrTriple& snr);
double gap_af(const SnrTriple& snr);

/// CF certificate for b < c: (A - B)^2 - C >= 0 via the alpha quadratic
/// and its discriminant. Throws std::invalid_argument when c <= b.
CertificateResult certificate_cf(const SnrTriple& snr);

/// AF certificate for a <= c, dispatched on the sub-regime.
/// Throws std::invalid_argument when a > c.
CertificateResult certificate_af(const SnrTriple& snr);

/// Gap limits at large SNR. Keys: "delta1_b_large" (-> 0),
/// "delta1_bc_large" (-> 1), "delta2_abc_large" (-> 2), each paired with a
/// "<key>_distance" entry. Throws std::invalid_argument if scale < 1e3.
std::map<std::string, double> verify_asymptotics(double scale);

}  // namespace relaycap
