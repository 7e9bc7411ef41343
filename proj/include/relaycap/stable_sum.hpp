#pragma once

#include <cmath>
#include <initializer_list>
#include <span>

namespace relaycap {

/// Neumaier-compensated accumulator. Also tracks the largest |term| seen,
/// which the certificate checks use to scale their tolerances.
class StableSum {
 public:
  StableSum() = default;

  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    if (std::abs(x) > max_abs_) max_abs_ = std::abs(x);
  }

  StableSum& operator+=(double x) {
    add(x);
    return *this;
  }
  StableSum& operator-=(double x) {
    add(-x);
    return *this;
  }

  double get() const { return sum_ + comp_; }
  double max_abs_term() const { return max_abs_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double max_abs_ = 0.0;
};

/// Polynomial value together with the magnitude of its largest term.
struct ScaledValue {
  double value = 0.0;
  double scale = 0.0;
};

inline ScaledValue stable_sum(std::initializer_list<double> terms) {
  StableSum s;
  for (double t : terms) s.add(t);
  return {s.get(), s.max_abs_term()};
}

/// Pairwise summation in a fixed order; the result depends only on the
/// input sequence, never on how it was produced.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace relaycap
