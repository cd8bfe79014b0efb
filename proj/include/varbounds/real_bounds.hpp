#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varbounds/report.hpp"

namespace varbounds {

/// Finite real sample with cached order statistics and central moments
/// (population convention: variance and fourth moment divide by n).
class RealSample {
 public:
  /// Throws std::invalid_argument on an empty list or non-finite values.
  explicit RealSample(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

  double min() const { return min_; }
  double max() const { return max_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double stddev() const;
  /// Fourth central moment m4.
  double fourth_moment() const { return m4_; }
  /// Raw second moment s^2 + mean^2.
  double raw_second_moment() const { return variance_ + mean_ * mean_; }
  double range() const { return max_ - min_; }

 private:
  std::vector<double> values_;
  double min_ = 0.0;
  double max_ = 0.0;
  double mean_ = 0.0;
  double variance_ = 0.0;
  double m4_ = 0.0;
};

/// Popoviciu s^2 <= (b-a)^2/4, Nagy s^2 >= (b-a)^2/(2n), and the refined
/// two-sided interval around s^2 (lower side needs n >= 3). Samples with
/// n < 2 yield inapplicable reports rather than errors.
std::vector<BoundReport> classic_bounds(const RealSample& sample);

/// Tightened Popoviciu/Nagy pair plus the second-moment range bound, valid
/// when 0 <= min < mean <= stddev.
std::vector<BoundReport> refined_bounds_positive_mean(const RealSample& sample);

/// Tightened pair for samples with a negative minimum, positive mean and
/// mean^2 >= (n/2) s^2; the looser printed gate 2*mean >= n*stddev is
/// recorded in the diagnostics but is vacuous.
std::vector<BoundReport> refined_bounds_negative_min(const RealSample& sample);

/// Kurtosis-gated upper bound (applicable when m4/m2^2 >= 3) and the
/// unconditional moment-product check.
std::vector<BoundReport> kurtosis_gated_bound(const RealSample& sample);

/// Two-sided localization of the sample minimum and maximum from the mean
/// and standard deviation. Throws for n < 2.
std::vector<BoundReport> extreme_value_bounds(const RealSample& sample);

/// s^2 >= (r/(n-r)) (subset_mean - mean)^2 for a subset of r < n distinct
/// indices; r = n yields an inapplicable report. Throws on invalid indices.
BoundReport mallows_richter(const RealSample& sample,
                            std::span<const std::size_t> subset);

}  // namespace varbounds
