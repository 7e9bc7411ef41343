#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "relaycap/bounds.hpp"
#include "test_support.hpp"

using namespace relaycap;
using relaycap::testing::LogUniform;

namespace {

SnrTriple snr(double a, double b, double c) { return SnrTriple{.a = a, .b = b, .c = c}; }

// Crossing point of the two cuts by plain bisection on [0, 1].
double crossing_by_bisection(const SnrTriple& s) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const CorrelationCoefficient r{mid};
    if (c1_plus(r, s) > c2_plus(r, s))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("CorrelationCoefficient validates its range") {
  CHECK_THROWS_AS(CorrelationCoefficient{-0.1}, std::invalid_argument);
  CHECK_THROWS_AS(CorrelationCoefficient{1.0000001}, std::invalid_argument);
  CHECK_THROWS_AS(CorrelationCoefficient{NAN}, std::invalid_argument);
  CHECK(CorrelationCoefficient{1.0}.value() == 1.0);
}

TEST_CASE("c1_plus") {
  CHECK(c1_plus(CorrelationCoefficient{0.0}, snr(1, 0, 3)) == doctest::Approx(std::log2(5.0)).epsilon(1e-15));
  CHECK(c1_plus(CorrelationCoefficient{1.0}, snr(7, 2, 9)) == 0.0);
  CHECK(c1_plus(CorrelationCoefficient{0.5}, snr(1, 0, 3)) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("c2_plus") {
  CHECK(c2_plus(CorrelationCoefficient{0.0}, snr(1, 1, 0)) == doctest::Approx(std::log2(3.0)).epsilon(1e-15));
  CHECK(c2_plus(CorrelationCoefficient{1.0}, snr(1, 1, 0)) == doctest::Approx(std::log2(5.0)).epsilon(1e-15));
  CHECK(c2_plus(CorrelationCoefficient{0.7}, snr(0, 0, 5)) == 0.0);
}

TEST_CASE("optimal_rho") {
  CHECK(optimal_rho(snr(1, 1, 1)).value() == 0.0);
  const CorrelationCoefficient r = optimal_rho(snr(1, 1, 3));
  CHECK(r.value() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(c1_plus(r, snr(1, 1, 3)) - 2.0) <= 1e-12);
  CHECK(std::abs(c2_plus(r, snr(1, 1, 3)) - 2.0) <= 1e-12);
  CHECK(optimal_rho(snr(0, 5, 0)).value() == 0.0);
  CHECK(optimal_rho(snr(0, 0, 0)).value() == 0.0);
}

TEST_CASE("optimal_rho agrees with bisection on the crossing") {
  LogUniform draw(101, 1e-3, 1e6);
  for (int i = 0; i < 2000; ++i) {
    SnrTriple s = draw.triple();
    if (s.c <= s.b) std::swap(s.b, s.c);
    if (s.b == s.c) continue;
    const CorrelationCoefficient r = optimal_rho(s);
    CHECK(r.value() >= 0.0);
    CHECK(r.value() <= 1.0);
    CHECK(std::abs(r.value() - crossing_by_bisection(s)) <= 1e-9);
    const double c1 = c1_plus(r, s), c2 = c2_plus(r, s);
    CHECK(std::abs(c1 - c2) <= 1e-9 * std::max(c1, c2));
  }
}

TEST_CASE("cutset_upper_bound") {
  const auto relay_limited = cutset_upper_bound(snr(1, 3, 1));
  CHECK(relay_limited.case_tag == BoundCase::RelayLimited);
  CHECK(relay_limited.rho_star.value() == 0.0);
  CHECK(relay_limited.c_plus == doctest::Approx(std::log2(3.0)).epsilon(1e-15));

  const auto crossing = cutset_upper_bound(snr(1, 1, 3));
  CHECK(crossing.case_tag == BoundCase::Crossing);
  CHECK(std::abs(crossing.c_plus - 2.0) <= 1e-12);

  CHECK(cutset_upper_bound(snr(0, 0, 0)).c_plus == 0.0);
  // c == b belongs to the relay-limited branch.
  CHECK(cutset_upper_bound(snr(2, 4, 4)).case_tag == BoundCase::RelayLimited);
}

TEST_CASE("cutset closed form matches the printed expression for b < c") {
  LogUniform draw(5, 1e-3, 1e6);
  for (int i = 0; i < 1000; ++i) {
    SnrTriple s = draw.triple();
    if (s.c <= s.b) std::swap(s.b, s.c);
    const double a = s.a, b = s.b, c = s.c;
    const double printed = std::log2(1 + a + b + (2 * std::sqrt(a * b * c * (a - b + c)) - 2 * a * b) / (a + c));
    CHECK(std::abs(cutset_upper_bound(s).c_plus - printed) <= 1e-9);
  }
}

TEST_CASE("cutset_oracle") {
  CHECK_THROWS_AS(cutset_oracle(snr(1, 1, 1), 1), std::invalid_argument);
  CHECK(std::abs(cutset_oracle(snr(1, 1, 3), 10001) - 2.0) <= 1e-6);
  for (long g : {2L, 3L, 17L, 1000L}) CHECK(cutset_oracle(snr(1, 3, 1), g) == std::log2(3.0));
  CHECK(cutset_oracle(snr(0, 0, 0), 5) == 0.0);

  LogUniform draw(9, 1e-3, 1e6);
  for (int i = 0; i < 200; ++i) {
    const SnrTriple s = draw.triple();
    const double exact = cutset_upper_bound(s).c_plus;
    const double coarse = cutset_oracle(s, 101);
    const double fine = cutset_oracle(s, 100001);
    CHECK(coarse <= exact + 1e-12);
    CHECK(fine <= exact + 1e-12);
    CHECK(fine >= coarse - 1e-12);
    CHECK(exact - fine <= 1e-6);
  }
}

TEST_CASE("cut monotonicity in rho and C1+(1) <= C2+(1)") {
  LogUniform draw(13, 1e-3, 1e6);
  for (int i = 0; i < 300; ++i) {
    const SnrTriple s = draw.triple();
    double prev1 = c1_plus(CorrelationCoefficient{0.0}, s);
    double prev2 = c2_plus(CorrelationCoefficient{0.0}, s);
    for (int k = 1; k <= 50; ++k) {
      const CorrelationCoefficient r{k / 50.0};
      const double v1 = c1_plus(r, s), v2 = c2_plus(r, s);
      CHECK(v1 <= prev1);
      CHECK(v2 >= prev2);
      prev1 = v1;
      prev2 = v2;
    }
    CHECK(c1_plus(CorrelationCoefficient{1.0}, s) <= c2_plus(CorrelationCoefficient{1.0}, s));
  }
}

TEST_CASE("cutset bound is nondecreasing in each SNR") {
  LogUniform draw(17, 1e-3, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const SnrTriple s = draw.triple();
    const double base = cutset_upper_bound(s).c_plus;
    const double f = 1.0 + draw() * 1e-3;
    SnrTriple up = s;
    up.a *= f;
    CHECK(cutset_upper_bound(up).c_plus >= base - 1e-12);
    up = s;
    up.b *= f;
    CHECK(cutset_upper_bound(up).c_plus >= base - 1e-12);
    up = s;
    up.c *= f;
    CHECK(cutset_upper_bound(up).c_plus >= base - 1e-12);
  }
}

TEST_CASE("rho* near one keeps its complement") {
  CHECK_THROWS_AS(CorrelationCoefficient::from_complement(-1e-3), std::invalid_argument);
  const auto q = CorrelationCoefficient::from_complement(1e-12);
  CHECK(q.complement() == 1e-12);
  CHECK(CorrelationCoefficient{0.25}.complement() == 0.75);

  // Tiny direct links and a strong source->relay link push rho* to within 1e-8 of 1.
  const SnrTriple s = snr(0.0021087, 0.0034869, 210903.0);
  const auto r = optimal_rho(s);
  const long double a = s.a, b = s.b, c = s.c;
  const long double rho = (c - b) / (std::sqrt(c * (a - b + c)) + std::sqrt(a * b));
  CHECK(std::abs(static_cast<long double>(r.complement()) - (1.0L - rho)) <= 1e-9L * (1.0L - rho));
  const double c1 = c1_plus(r, s), c2 = c2_plus(r, s);
  CHECK(std::abs(c1 - c2) <= 1e-12 * c2);
}
