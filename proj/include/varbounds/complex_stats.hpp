#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "varbounds/report.hpp"

namespace varbounds {

using Complex = std::complex<double>;

/// Ordered finite list of complex points. Order is kept so that summation is
/// reproducible, but no statistic depends on it beyond round-off.
class ComplexSample {
 public:
  /// Throws std::invalid_argument on an empty list or non-finite coordinates.
  explicit ComplexSample(std::vector<Complex> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<Complex>& points() const { return points_; }
  const Complex& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Complex> points_;
};

/// The four dispersion statistics of a complex sample: the mean, the mean
/// squared modulus of deviations (sz2), the complex mean of squared
/// deviations (s2), and sigma_z2 = (|s2| + sz2) / 2.
struct DispersionSummary {
  Complex mean;
  double sz2 = 0.0;
  Complex s2;
  double sigma_z2 = 0.0;
};

DispersionSummary dispersion(const ComplexSample& sample);

/// Variance of the concatenation a ++ b computed from the per-part means and
/// variances alone; agrees with dispersion(a ++ b).sz2 up to round-off.
double pooled_variance(const ComplexSample& a, const ComplexSample& b);

/// |mean(subset) - mean|^2 <= ((n - r) / r) * sigma_z2 for any subset of r
/// distinct indices. Throws on empty, duplicate, or out-of-range indices.
BoundReport subset_mean_bound(const ComplexSample& sample,
                              std::span<const std::size_t> subset);

/// sigma_z2 >= max_{j,k} |z_j - z_k|^2 / (2n); requires n >= 2.
BoundReport pairwise_gap_bound(const ComplexSample& sample);

/// The quarter-gap upper bound sigma_z2 <= max_gap^2 / 4 together with the
/// informational check of the same form against sz2, which can legitimately
/// fail (sz2 admits no quarter-gap bound). Requires n >= 2.
std::vector<BoundReport> gap_upper_checks(const ComplexSample& sample);

struct CollinearityResult {
  bool collinear = false;
  DispersionSummary summary;
};

/// True iff sz2 - |s2| <= tol * max(sz2, 1); always true for n <= 2.
/// Throws on negative tol.
CollinearityResult collinearity_test(const ComplexSample& sample,
                                     double tol = 1e-9);

/// Largest pairwise distance; 0 for a singleton.
double max_pairwise_gap(const ComplexSample& sample);

}  // namespace varbounds
