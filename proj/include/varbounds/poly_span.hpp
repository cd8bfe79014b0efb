#pragma once

#include <cstddef>
#include <vector>

#include "varbounds/report.hpp"

namespace varbounds {

/// Monic polynomial x^n + a_1 x^{n-1} + ... + a_n, n >= 2, given by the
/// trailing coefficients a_1..a_n. Real-rootedness is the caller's claim;
/// the span bounds certify its failure when the coefficient-derived root
/// variance turns negative.
class MonicPoly {
 public:
  /// coeffs holds a_1..a_n in order; degree = coeffs.size().
  explicit MonicPoly(std::vector<double> coeffs);

  std::size_t degree() const { return coeffs_.size(); }
  /// a_k for 1 <= k <= degree.
  double coeff(std::size_t k) const { return coeffs_.at(k - 1); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double evaluate(double x) const;

 private:
  std::vector<double> coeffs_;
};

struct RootMoments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Root mean -a1/n and root variance ((n-1) a1^2 - 2 n a2) / n^2, from the
/// first two coefficients alone.
RootMoments coeff_moments(const MonicPoly& p);

/// Two-sided span bounds 2s <= D <= sqrt(2n) s expressed in coefficients.
/// Throws std::domain_error("not real-rooted (certificate)") when the
/// radicand is negative beyond round-off.
BoundReport span_bounds(const MonicPoly& p);

/// Refined span bounds for nonnegative zeros. Emits the printed lower bound,
/// the derivation-consistent variant (the raw second moment over the mean),
/// and the refined upper bound. `zeros_nonnegative_asserted` is the caller's
/// claim about the zeros and is recorded in the diagnostics.
std::vector<BoundReport> refined_span_bounds(const MonicPoly& p,
                                             bool zeros_nonnegative_asserted);

}  // namespace varbounds
