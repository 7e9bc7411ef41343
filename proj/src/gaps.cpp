#include "relaycap/gaps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "relaycap/bounds.hpp"
#include "relaycap/rates.hpp"
#include "relaycap/stable_sum.hpp"

namespace relaycap {

namespace {

bool nonneg(const ScaledValue& v) { return v.value >= -kCertificateRelTol * v.scale; }
bool nonpos(const ScaledValue& v) { return v.value <= kCertificateRelTol * v.scale; }

bool agree(double x, double y, double scale) {
  return std::abs(x - y) <= kCertificateRelTol * std::max({std::abs(x), std::abs(y), scale});
}

/// Cubic q0 + q1 x + q2 x^2 + q3 x^3 and its first two derivatives at x.
/// Scales carry the coefficient term magnitudes through the powers of x.
struct CubicAt {
  ScaledValue f, df, d2f;
};

CubicAt eval_cubic(const std::array<ScaledValue, 4>& q, double x) {
  const double x2 = x * x, x3 = x2 * x;
  CubicAt r;
  r.f = stable_sum({q[0].value, q[1].value * x, q[2].value * x2, q[3].value * x3});
  r.f.scale = std::max({r.f.scale, q[0].scale, q[1].scale * x, q[2].scale * x2, q[3].scale * x3});
  r.df = stable_sum({q[1].value, 2 * q[2].value * x, 3 * q[3].value * x2});
  r.df.scale = std::max({r.df.scale, q[1].scale, 2 * q[2].scale * x, 3 * q[3].scale * x2});
  r.d2f = stable_sum({2 * q[2].value, 6 * q[3].value * x});
  r.d2f.scale = std::max({r.d2f.scale, 2 * q[2].scale, 6 * q[3].scale * x});
  return r;
}

// Constant coefficient shared by both AF cubics: a (ab - a - b^2 - 2b - 1)^2.
ScaledValue cubic_q0(double a, double b) {
  const double a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  return stable_sum({a3 * b2, -2 * a3 * b, a3, -2 * a2 * b3, -2 * a2 * b2, 2 * a2 * b, 2 * a2,
                     a * b4, 4 * a * b3, 6 * a * b2, 4 * a * b, a});
}

/// Lower-bound cubic in c for a <= b < c:
/// (2(a+c)(K + c(b-a)) - P)^2 - Q = (a+c) sum_k beta_k c^k.
std::array<ScaledValue, 4> beta_coefficients(double a, double b) {
  const double a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  return {
      cubic_q0(a, b),
      stable_sum({2 * a3 * b, -2 * a3, -11 * a2 * b2, 2 * a2 * b, a2, 8 * a * b3, 12 * a * b2,
                  8 * a * b, 4 * a, b4, -2 * b2, 1.0}),
      stable_sum({a3, -8 * a2 * b, -4 * a2, 13 * a * b2, 6 * a * b, a, -6 * b3, -2 * b2, 6 * b, 2.0}),
      stable_sum({a2, -10 * a * b, -2 * a, 9 * b2, 6 * b, 1.0}),
  };
}

/// Same for b < a <= c with K + c(a-b).
std::array<ScaledValue, 4> gamma_coefficients(double a, double b) {
  const double a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  return {
      cubic_q0(a, b),
      stable_sum({-6 * a3 * b, 6 * a3, 5 * a2 * b2, 10 * a2 * b, 9 * a2, -4 * a * b2, 4 * a, b4,
                  -2 * b2, 1.0}),
      stable_sum({9 * a3, 12 * a2, -11 * a * b2, -10 * a * b, 9 * a, 2 * b3, -2 * b2, -2 * b, 2.0}),
      stable_sum({9 * a2, -10 * a * b, 6 * a, b2, -2 * b, 1.0}),
  };
}

void finish(CertificateResult& r) {
  r.passed = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& kv) { return kv.second; });
}

void certify_af_relay_limited(const SnrTriple& snr, const AfClosedFormParts& parts,
                              CertificateResult& r) {
  const double a = snr.a, b = snr.b, c = snr.c;
  const auto [K, L, M] = parts;
  const double root_l = std::sqrt(L);

  // Delta2 <= 2  <=>  2(K + sqrt L) - M >= 0, bounded below using sqrt L >= c(b - a).
  const ScaledValue exact = stable_sum({2 * K, 2 * root_l, -M});
  const ScaledValue lower = stable_sum({2 * K, 2 * c * (b - a), -M});
  const ScaledValue g_b = stable_sum({(1 - a + 3 * c) * b, (1 - c) * (1 + a + c)});
  const ScaledValue g_c = stable_sum({1 + a + c, 2 * c * (c - a)});
  const ScaledValue g_at_c = stable_sum({(1 - a + 3 * c) * c, (1 - c) * (1 + a + c)});

  r.values = {{"K", K},           {"L", L},           {"M", M},
              {"2(K+sqrtL)-M", exact.value},          {"2(K+c(b-a))-M", lower.value},
              {"g(b)", g_b.value}, {"g(c)", g_c.value}, {"slope", 1 - a + 3 * c}};
  r.checks = {
      {"sqrtL>=c(b-a)", root_l >= c * (b - a) * (1 - kCertificateRelTol)},
      {"g_identity", agree(lower.value, g_b.value, std::max(lower.scale, g_b.scale))},
      {"g(c)_identity", agree(g_at_c.value, g_c.value, std::max(g_at_c.scale, g_c.scale))},
      {"slope>=0", 1 - a + 3 * c >= 0.0},
      {"g(c)>0", g_c.value > 0.0},
      {"g(b)>=0", nonneg(g_b)},
      {"2(K+sqrtL)-M>=0", nonneg(exact)},
  };
}

void certify_af_crossing(const SnrTriple& snr, const AfClosedFormParts& parts,
                         CertificateResult& r) {
  const double a = snr.a, b = snr.b, c = snr.c;
  const auto [K, L, M] = parts;
  const double root_l = std::sqrt(L);
  const double s = a + c;
  const double P = (1 + b + c) * ((1 + a + b) * s - 2 * a * b);
  const double Q = 4 * (1 + b + c) * (1 + b + c) * a * b * c * (a - b + c);

  const ScaledValue e_direct = stable_sum({2 * s * K, -P});
  const ScaledValue e_form =
      stable_sum({a * a * (1 - b + c), a * (1 + b + c) * (1 + b + c), c * (1 + (c - b) * b + c)});

  const double shift = c * std::abs(b - a);
  const double lower_base = 2 * s * (K + shift) - P;
  const double exact_base = 2 * s * (K + root_l) - P;
  // The bases themselves carry cancellation error, so scale by their parts.
  ScaledValue lower_sq = stable_sum({lower_base * lower_base, -Q});
  ScaledValue exact_sq = stable_sum({exact_base * exact_base, -Q});
  const double big = std::max(2 * s * (K + root_l), P);
  lower_sq.scale = std::max(lower_sq.scale, big * big);
  exact_sq.scale = std::max(exact_sq.scale, big * big);

  const bool beta_branch = a <= b;
  r.regime = beta_branch ? Regime::AleBltC : Regime::BltAleC;
  const auto q = beta_branch ? beta_coefficients(a, b) : gamma_coefficients(a, b);
  const double anchor = beta_branch ? b : a;
  const CubicAt at_c = eval_cubic(q, c);
  const CubicAt at_anchor = eval_cubic(q, anchor);
  const double factored = s * at_c.f.value;

  const std::string sym = beta_branch ? "beta" : "gamma";
  const std::string fn = beta_branch ? "s" : "t";
  const std::string arg = beta_branch ? "(b)" : "(a)";

  r.values = {{"K", K}, {"L", L}, {"M", M}, {"P", P}, {"Q", Q},
              {"2(a+c)K-P", e_direct.value},
              {"lower_bound", lower_sq.value},
              {"exact", exact_sq.value},
              {fn + "(c)", at_c.f.value},
              {fn + arg, at_anchor.f.value},
              {fn + "'" + arg, at_anchor.df.value},
              {fn + "''" + arg, at_anchor.d2f.value}};
  for (int k = 0; k < 4; ++k) r.values[sym + std::to_string(k)] = q[k].value;

  r.checks = {
      {"2(a+c)K-P_identity", agree(e_direct.value, e_form.value, std::max(e_direct.scale, e_form.scale))},
      {"2(a+c)K-P>=0", nonneg(e_form)},
      {"sqrtL>=c|b-a|", root_l >= shift * (1 - kCertificateRelTol)},
      {"lower_base>=0", lower_base >= -kCertificateRelTol * std::max(2 * s * (K + shift), P)},
      {"cubic_identity", agree(lower_sq.value, factored, std::max(lower_sq.scale, s * at_c.f.scale))},
      {sym + "3>0", q[3].value > 0.0},
      {fn + arg + ">=0", nonneg(at_anchor.f)},
      {fn + "'" + arg + ">=0", nonneg(at_anchor.df)},
      {fn + "''" + arg + ">=0", nonneg(at_anchor.d2f)},
      {fn + "(c)>=0", nonneg(at_c.f)},
      {"exact>=0", nonneg(exact_sq)},
  };
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::CleB: return "c<=b";
    case Regime::BltC: return "b<c";
    case Regime::AleCleB: return "a<=c<=b";
    case Regime::AleBltC: return "a<=b<c";
    case Regime::BltAleC: return "b<a<=c";
  }
  return "?";
}

double gap_cf(const SnrTriple& snr) { return cutset_upper_bound(snr).c_plus - rate_cf(snr); }

double gap_af(const SnrTriple& snr) {
  return cutset_upper_bound(snr).c_plus - af_scheme_rate(snr).rate;
}

CertificateResult certificate_cf(const SnrTriple& snr) {
  const double a = snr.a, b = snr.b, c = snr.c;
  if (!(b < c)) throw std::invalid_argument("certificate_cf: requires b < c");

  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, b2 = b * b, b3 = b2 * b;
  const double A = ((1 + a) * (1 + a + b + c) + b * c) * (a + c);
  const double B = b * c - a * b - a * b * c - a2 * b + b2 * c - a * b2;
  const double C = 4 * (1 + a + b + c) * (1 + a + b + c) * a * b * c * (a - b + c);

  const ScaledValue alpha0 = stable_sum({a4, 4 * a3 * (b + 1), 6 * a2 * (b + 1) * (b + 1),
                                         (b2 - 1) * (b2 - 1), 4 * a * (b3 + b2 + b + 1)});
  const ScaledValue alpha1 = stable_sum({(a + 1) * (a + 1) * (a + 1), (a2 + 1) * b, -(a + 1) * b2, -b3});
  const ScaledValue alpha2 = stable_sum({(a - b) * (a - b), 2 * (a + b), 1.0});
  const ScaledValue alpha3 =
      stable_sum({4 * a * b, 8 * a2 * b, 8 * a * b2, 8 * a2 * b2, 4 * a * b3});

  // f(c) = alpha0 + 2 alpha1 c + alpha2 c^2, a quadratic with discriminant D.
  ScaledValue f = stable_sum({alpha0.value, 2 * alpha1.value * c, alpha2.value * c * c});
  f.scale = std::max({f.scale, alpha0.scale, 2 * alpha1.scale * c, alpha2.scale * c * c});

  ScaledValue lhs = stable_sum({(A - B) * (A - B), -C});
  lhs.scale = std::max({lhs.scale, A * A, B * B});
  const double s = a + c;
  const ScaledValue factored = stable_sum({s * s * f.value, s * alpha3.value});
  const double factored_scale = std::max(s * s * f.scale, s * alpha3.scale);

  ScaledValue d_direct = stable_sum({alpha1.value * alpha1.value, -alpha0.value * alpha2.value});
  d_direct.scale = std::max(d_direct.scale, std::max(alpha1.scale * alpha1.scale, alpha0.scale * alpha2.scale));
  const ScaledValue d_inner =
      stable_sum({2 * a3, (3 * b + 5) * a2, (8 * b2 + 11 * b + 4) * a, (b + 1) * (b + 1) * (3 * b + 1)});
  const double d_factored = -4 * a * b * d_inner.value;

  const double ratio = (B + std::sqrt(C)) / A;

  CertificateResult r;
  r.name = "cf_one_bit";
  r.regime = Regime::BltC;
  r.values = {{"A", A},
              {"B", B},
              {"C", C},
              {"alpha0", alpha0.value},
              {"alpha1", alpha1.value},
              {"alpha2", alpha2.value},
              {"alpha3", alpha3.value},
              {"(A-B)^2-C", lhs.value},
              {"factored", factored.value},
              {"f(c)", f.value},
              {"D", d_direct.value},
              {"D_factored", d_factored},
              {"(B+sqrtC)/A", ratio},
              {"delta1_from_ABC", log2_1p(ratio)}};
  r.checks = {
      {"A>=B", A >= B},
      {"C>=0", C >= 0.0},
      {"alpha2>0", alpha2.value > 0.0},
      {"alpha3>=0", alpha3.value >= 0.0},
      {"identity_(A-B)^2-C", agree(lhs.value, factored.value, std::max(lhs.scale, factored_scale))},
      {"identity_D", agree(d_direct.value, d_factored, std::max(d_direct.scale, 4 * a * b * d_inner.scale))},
      {"D<=0", nonpos(d_direct)},
      {"f(c)>=0", nonneg(f)},
      {"(A-B)^2-C>=0", nonneg(lhs)},
      {"B+sqrtC<=A", ratio <= 1.0 + kCertificateRelTol},
      {"delta1_identity", std::abs(log2_1p(ratio) - gap_cf(snr)) <= kCertificateRelTol},
  };
  finish(r);
  return r;
}

CertificateResult certificate_af(const SnrTriple& snr) {
  if (snr.a > snr.c) throw std::invalid_argument("certificate_af: requires a <= c");
  CertificateResult r;
  r.name = "af_two_bit";
  const AfClosedFormParts parts = af_parts(snr);
  if (snr.c <= snr.b) {
    r.regime = Regime::AleCleB;
    certify_af_relay_limited(snr, parts, r);
  } else {
    certify_af_crossing(snr, parts, r);
  }
  const double delta2 = gap_af(snr);
  r.values["delta2"] = delta2;
  r.checks["delta2<=2"] = delta2 <= 2.0 + kCertificateRelTol;
  finish(r);
  return r;
}

std::map<std::string, double> verify_asymptotics(double scale) {
  if (!(scale >= 1e3)) throw std::invalid_argument("verify_asymptotics: scale must be >= 1e3");
  const double b_large = gap_cf(SnrTriple::make(1.0, scale, 1.0));
  const double bc_large = gap_cf(SnrTriple::make(1.0, scale, scale));
  const double abc_large = gap_af(SnrTriple::make(scale, scale, scale));
  return {
      {"delta1_b_large", b_large},
      {"delta1_b_large_distance", std::abs(b_large - 0.0)},
      {"delta1_bc_large", bc_large},
      {"delta1_bc_large_distance", std::abs(bc_large - 1.0)},
      {"delta2_abc_large", abc_large},
      {"delta2_abc_large_distance", std::abs(abc_large - 2.0)},
  };
}

}  // namespace relaycap
