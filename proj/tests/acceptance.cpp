// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "relaycap/af_spectrum.hpp"
#include "relaycap/bounds.hpp"
#include "relaycap/gaps.hpp"
#include "relaycap/rates.hpp"
#include "relaycap/sweep.hpp"
#include "test_support.hpp"

using namespace relaycap;
using relaycap::testing::LogUniform;

namespace {

// Tolerances.
constexpr double kGapSlack = 1e-9;
constexpr double kQuadratureTol = 1e-6;
constexpr double kLogCosTol = 1e-10;
constexpr double kOracleTol = 1e-6;
constexpr double kCrossingRelTol = 1e-9;
constexpr double kIdentityRelTol = 1e-9;
constexpr double kDecompositionTol = 1e-12;
constexpr double kTrendSlack = 1e-12;

// Sample counts and grids.
constexpr std::size_t kGapSamples = 100000;
constexpr std::uint64_t kGapSeed = 42;
constexpr double kAsymptoticScale = 1e6;
constexpr int kQuadratureDraws = 1000;
constexpr std::size_t kQuadraturePoints = 4096;
constexpr int kLogCosDraws = 100;
constexpr std::size_t kLogCosPoints = 65536;
constexpr int kOracleDraws = 1000;
constexpr long kOracleGrid = 100000;
constexpr int kCertificateDraws = 10000;
constexpr int kMaxLevel = 16;
constexpr int kDecompositionDraws = 10000;

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void gap_theorems() {
  const auto t0 = std::chrono::steady_clock::now();
  const VerifySummary s = run_verify(SweepConfig::random(kGapSamples, kGapSeed));
  const double elapsed = seconds_since(t0);
  const bool ok1 = s.samples == kGapSamples && s.max_delta1 <= 1 + kGapSlack && s.min_delta1 >= -kGapSlack;
  report("AC1", ok1,
         fmt("%zu samples, delta1 in [%.12g, %.12g], %.2f s", s.samples, s.min_delta1, s.max_delta1, elapsed));
  const bool ok2 = s.samples == kGapSamples && s.max_delta2 <= 2 + kGapSlack && s.min_delta2 >= -kGapSlack &&
                   s.max_delta2_relay_off <= 1 + kGapSlack;
  report("AC2", ok2,
         fmt("delta2 in [%.12g, %.12g], relay off (a > c) max %.12g, %.2f s", s.min_delta2, s.max_delta2,
             s.max_delta2_relay_off, elapsed));
}

void asymptotics() {
  const auto m = verify_asymptotics(kAsymptoticScale);
  const double bc = m.at("delta1_bc_large"), b = m.at("delta1_b_large"), abc = m.at("delta2_abc_large");
  const bool ok = bc >= 0.99 && bc <= 1.0 && b <= 0.01 && abc >= 1.99 && abc <= 2.0;
  report("AC3", ok, fmt("delta1(1,1e6,1e6)=%.9f delta1(1,1e6,1)=%.3g delta2(1e6,1e6,1e6)=%.9f", bc, b, abc));
}

void quadrature() {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> snr(0.0, 1e4);
  double worst = 0;
  for (int i = 0; i < kQuadratureDraws; ++i) {
    const SnrTriple s{.a = snr(gen), .b = snr(gen), .c = snr(gen)};
    worst = std::max(worst, std::abs(rate_af_closed(s) - rate_af_quadrature(s, kQuadraturePoints)));
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  LogUniform mu_draw(2025, 1e-3, 1e6);
  double worst_gr = 0;
  for (int i = 0; i < kLogCosDraws; ++i) {
    const double mu = mu_draw();
    const double u = 1.0 - unit(gen);  // (0, 1]
    const GrIdentity g = verify_gr_identity(mu, mu * u, phase(gen), kLogCosPoints);
    worst_gr = std::max(worst_gr, std::abs(g.lhs - g.rhs));
  }
  report("AC4", worst <= kQuadratureTol && worst_gr <= kLogCosTol,
         fmt("max |closed - quadrature| = %.3g over %d draws (N=%zu); max log-cosine error = %.3g over %d draws "
             "(N=%zu)",
             worst, kQuadratureDraws, kQuadraturePoints, worst_gr, kLogCosDraws, kLogCosPoints));
}

void upper_bound() {
  LogUniform draw(77, 1e-3, 1e6);
  double worst = 0, worst_rel = 0;
  int crossing = 0;
  for (int i = 0; i < kOracleDraws; ++i) {
    const SnrTriple s = draw.triple();
    const UpperBoundResult ub = cutset_upper_bound(s);
    worst = std::max(worst, std::abs(ub.c_plus - cutset_oracle(s, kOracleGrid)));
    SnrTriple x = s;
    if (x.c < x.b) std::swap(x.b, x.c);
    if (x.b == x.c) continue;
    const CorrelationCoefficient r = optimal_rho(x);
    const double c1 = c1_plus(r, x), c2 = c2_plus(r, x);
    worst_rel = std::max(worst_rel, std::abs(c1 - c2) / std::max(c1, c2));
    ++crossing;
  }
  report("AC5", worst <= kOracleTol && worst_rel <= kCrossingRelTol,
         fmt("max |C+ - oracle(G=%ld)| = %.3g over %d draws; max relative |C1 - C2| at rho* = %.3g over %d b<c "
             "draws",
             kOracleGrid, worst, kOracleDraws, worst_rel, crossing));
}

double rel_gap(double direct, double factored) {
  return std::abs(direct - factored) / std::max({std::abs(direct), std::abs(factored), 1e-300});
}

void certificates() {
  LogUniform draw(31, 1e-3, 1e6);
  int failed = 0, draws[4] = {0, 0, 0, 0};
  double worst_id = 0, max_d = -INFINITY;
  const std::array<const char*, 4> names = {"b<c (CF)", "a<=c<=b", "a<=b<c", "b<a<=c"};
  for (int regime = 0; regime < 4; ++regime) {
    while (draws[regime] < kCertificateDraws) {
      std::array<double, 3> v = {draw(), draw(), draw()};
      std::sort(v.begin(), v.end());
      SnrTriple s;
      switch (regime) {
        case 0:  // CF: only b < c matters; a is free
          s = {.a = v[std::uniform_int_distribution<int>(0, 2)(draw.engine())], .b = v[0], .c = v[2]};
          if (s.a == v[0]) s.a = v[1];
          if (!(s.b < s.c)) continue;
          break;
        case 1: s = {.a = v[0], .b = v[2], .c = v[1]}; break;
        case 2:
          s = {.a = v[0], .b = v[1], .c = v[2]};
          if (!(s.b < s.c)) continue;
          break;
        default:
          s = {.a = v[1], .b = v[0], .c = v[2]};
          if (!(s.b < s.a)) continue;
          break;
      }
      ++draws[regime];
      if (regime == 0) {
        const CertificateResult r = certificate_cf(s);
        failed += !r.passed;
        worst_id = std::max(worst_id, rel_gap(r.values.at("(A-B)^2-C"), r.values.at("factored")));
        max_d = std::max(max_d, r.values.at("D"));
        continue;
      }
      const CertificateResult r = certificate_af(s);
      failed += !r.passed;
      if (regime == 1) {
        worst_id = std::max(worst_id, rel_gap(r.values.at("2(K+c(b-a))-M"), r.values.at("g(b)")));
      } else {
        const char* f = regime == 2 ? "s(c)" : "t(c)";
        worst_id = std::max(worst_id, rel_gap(r.values.at("lower_bound"), (s.a + s.c) * r.values.at(f)));
      }
    }
  }
  report("AC6", failed == 0 && worst_id <= kIdentityRelTol && max_d <= 0.0,
         fmt("%d draws each in %s, %s, %s, %s; certificate failures %d; max relative identity error %.3g; max D "
             "%.3g",
             kCertificateDraws, names[0], names[1], names[2], names[3], failed, worst_id, max_d));
}

void deterministic() {
  int cases = 0, mismatches = 0;
  for (int n21 = 0; n21 <= kMaxLevel; ++n21)
    for (int n31 = 0; n31 <= kMaxLevel; ++n31)
      for (int n32 = 0; n32 <= kMaxLevel; ++n32) {
        const DeterministicLevels l{.n21 = n21, .n31 = n31, .n32 = n32};
        ++cases;
        mismatches += deterministic_capacity(l) != deterministic_capacity_routed(l);
      }
  report("AC7", cases == 4913 && mismatches == 0, fmt("%d level triples, %d mismatches", cases, mismatches));
}

void decomposition() {
  LogUniform draw(55, 1e-3, 1e6);
  double worst = 0, min_delta = INFINITY, max_delta = -INFINITY;
  for (int i = 0; i < kDecompositionDraws; ++i) {
    const SnrTriple s = draw.triple();
    const CfDecomposition d = cf_decomposition(s);
    worst = std::max(worst, std::abs(d.direct_term + d.relay_term - rate_cf(s)));
    min_delta = std::min(min_delta, d.delta);
    max_delta = std::max(max_delta, d.delta);
  }
  report("AC8", worst <= kDecompositionTol && min_delta >= 0.0 && max_delta < 1.0,
         fmt("max |direct + relay - R_CF| = %.3g over %d draws; delta in [%.6g, %.15g]", worst, kDecompositionDraws,
             min_delta, max_delta));
}

// High-SNR limits along a = r31 c, b = r32 c (with r32 < 1).
double cutset_slope(double al, double be) {
  return al + be + (2 * std::sqrt(al * be * (al - be + 1)) - 2 * al * be) / (al + 1);
}
double cf_limit(double al, double be) { return std::log2(cutset_slope(al, be) / (al + be / (1 + al + be))); }
double af_limit(double al, double be) {
  return std::log2(cutset_slope(al, be) * 2 * (1 + be) / (al + be + std::abs(al - be)));
}

// Distance to the limit must not grow over the top two decades.
bool approaches(const std::vector<RateReport>& rows, bool use_delta1, double limit, double top, double& last) {
  bool ok = true;
  double prev = INFINITY;
  for (const auto& r : rows) {
    if (r.snr.c < top / 100.0 * (1 - 1e-12)) continue;
    const double d = std::abs((use_delta1 ? r.delta1 : r.delta2) - limit);
    ok = ok && d <= prev + kTrendSlack;
    prev = d;
  }
  last = prev;
  return ok;
}

void figures() {
  bool ok = true;
  std::string detail;
  for (int fig : {4, 5, 6, 7}) {
    const SweepConfig cfg = SweepConfig::figure(fig);
    const auto rows = run_grid(cfg);
    const bool cf = figure_gap(cfg.mode) == 1;
    double worst = 0;
    for (const auto& r : rows) worst = std::max(worst, cf ? r.delta1 : r.delta2);
    const bool below = worst < (cf ? 1.0 : 2.0);
    ok = ok && below;
    detail += fmt("fig%d max %s %.6f; ", fig, cf ? "delta1" : "delta2", worst);
    if (fig == 5 || fig == 7) {
      const double limit = fig == 5 ? cf_limit(cfg.r31, cfg.r32) : af_limit(cfg.r31, cfg.r32);
      double last = 0;
      const bool trend = approaches(rows, cf, limit, cfg.snr_max, last);
      ok = ok && trend;
      detail += fmt("fig%d limit %.6f, final distance %.3g%s; ", fig, limit, last, trend ? "" : " (not monotone)");
    }
  }
  detail.resize(detail.size() - 2);
  report("AC9", ok, detail);
}

}  // namespace

int main() {
  gap_theorems();
  asymptotics();
  quadrature();
  upper_bound();
  certificates();
  deterministic();
  decomposition();
  figures();
  std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
