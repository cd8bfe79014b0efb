#include "varbounds/real_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace varbounds {

RealSample::RealSample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empty sample");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite sample value");
  }
  const double n = static_cast<double>(values_.size());
  min_ = values_.front();
  max_ = values_.front();
  double sum = 0.0;
  for (double v : values_) {
    min_ = std::min(min_, v);
    max_ = std::max(max_, v);
    sum += v;
  }
  mean_ = sum / n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : values_) {
    const double d = v - mean_;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  variance_ = m2 / n;
  m4_ = m4 / n;
}

double RealSample::stddev() const { return std::sqrt(variance_); }

std::vector<BoundReport> classic_bounds(const RealSample& sample) {
  const double n = static_cast<double>(sample.size());
  const double s2 = sample.variance();
  const double range = sample.range();
  const double mean = sample.mean();
  const double mid = (sample.min() + sample.max()) / 2.0;

  std::vector<BoundReport> out;

  BoundReport popoviciu;
  popoviciu.name = "popoviciu-upper";
  popoviciu.kind = BoundKind::Upper;
  popoviciu.reference = "eq 1.5";
  popoviciu.require("n >= 2", sample.size() >= 2);
  popoviciu.add_value("s2", s2);
  popoviciu.add_value("upper", range * range / 4.0);
  if (popoviciu.applicable) popoviciu.satisfied = leq_tol(s2, range * range / 4.0);
  out.push_back(std::move(popoviciu));

  BoundReport nagy;
  nagy.name = "nagy-lower";
  nagy.kind = BoundKind::Lower;
  nagy.reference = "eq 1.9";
  nagy.require("n >= 2", sample.size() >= 2);
  if (sample.size() >= 1) {
    nagy.add_value("lower", range * range / (2.0 * n));
    nagy.add_value("s2", s2);
  }
  if (nagy.applicable) nagy.satisfied = leq_tol(range * range / (2.0 * n), s2);
  out.push_back(std::move(nagy));

  BoundReport refined_lower;
  refined_lower.name = "variance-lower-refined";
  refined_lower.kind = BoundKind::Lower;
  refined_lower.reference = "eq 1.11";
  refined_lower.require("n >= 3", sample.size() >= 3);
  if (sample.size() >= 3) {
    const double shift = mean - mid;
    const double lower =
        range * range / (2.0 * n) + 2.0 / (n - 2.0) * shift * shift;
    refined_lower.add_value("lower", lower);
    refined_lower.add_value("s2", s2);
    refined_lower.satisfied = leq_tol(lower, s2);
  }
  out.push_back(std::move(refined_lower));

  BoundReport refined_upper;
  refined_upper.name = "variance-upper-product";
  refined_upper.kind = BoundKind::Upper;
  refined_upper.reference = "eq 1.11";
  refined_upper.require("n >= 2", sample.size() >= 2);
  const double upper = (sample.max() - mean) * (mean - sample.min());
  refined_upper.add_value("s2", s2);
  refined_upper.add_value("upper", upper);
  if (refined_upper.applicable) refined_upper.satisfied = leq_tol(s2, upper);
  out.push_back(std::move(refined_upper));

  return out;
}

std::vector<BoundReport> refined_bounds_positive_mean(const RealSample& sample) {
  const double n = static_cast<double>(sample.size());
  const double s2 = sample.variance();
  const double s = sample.stddev();
  const double mean = sample.mean();
  const double range = sample.range();
  const bool gate = sample.min() >= 0.0 && sample.min() < mean && mean <= s;
  // Defined whenever the mean is nonzero; the gate implies mean > 0.
  const bool defined = mean != 0.0;
  const double correction = defined ? (s2 - mean * mean) / (2.0 * mean) : 0.0;

  std::vector<BoundReport> out;

  BoundReport upper;
  upper.name = "positive-mean-upper";
  upper.kind = BoundKind::Upper;
  upper.reference = "eq 2.19";
  upper.require("0 <= min < mean <= stddev", gate);
  if (defined) {
    upper.add_value("lhs", s2 + correction * correction);
    upper.add_value("rhs", range * range / 4.0);
    if (upper.applicable)
      upper.satisfied = leq_tol(s2 + correction * correction, range * range / 4.0);
  }
  out.push_back(std::move(upper));

  BoundReport lower;
  lower.name = "positive-mean-lower";
  lower.kind = BoundKind::Lower;
  lower.reference = "eq 2.20";
  lower.require("0 <= min < mean <= stddev", gate);
  lower.require("n >= 3", sample.size() >= 3);
  if (defined && sample.size() >= 3) {
    const double lhs = s2 - 2.0 / (n - 2.0) * correction * correction;
    lower.add_value("lhs", lhs);
    lower.add_value("rhs", range * range / (2.0 * n));
    if (lower.applicable)
      lower.satisfied = leq_tol(range * range / (2.0 * n), lhs);
  }
  out.push_back(std::move(lower));

  BoundReport moment;
  moment.name = "second-moment-range";
  moment.kind = BoundKind::Upper;
  moment.reference = "eq 2.24";
  moment.require("0 <= min < mean <= stddev", gate);
  if (defined) {
    const double lhs = sample.raw_second_moment() / mean;
    moment.add_value("lhs", lhs);
    moment.add_value("rhs", range);
    if (moment.applicable) moment.satisfied = leq_tol(lhs, range);
  }
  out.push_back(std::move(moment));

  return out;
}

std::vector<BoundReport> refined_bounds_negative_min(const RealSample& sample) {
  const double n = static_cast<double>(sample.size());
  const double s2 = sample.variance();
  const double s = sample.stddev();
  const double mean = sample.mean();
  const double range = sample.range();
  const bool gate =
      sample.min() < 0.0 && mean > 0.0 && mean * mean >= (n / 2.0) * s2;
  const bool defined = mean != 0.0;
  const double correction =
      defined ? (mean * mean - (n / 2.0) * s2) / (2.0 * mean) : 0.0;

  std::vector<BoundReport> out;

  BoundReport upper;
  upper.name = "negative-min-upper";
  upper.kind = BoundKind::Upper;
  upper.reference = "eq 2.27";
  upper.require("min < 0 and mean > 0 and mean^2 >= (n/2) s^2", gate);
  upper.diagnostics.push_back(
      {"printed gate 2*mean >= n*stddev (recorded, not used)",
       2.0 * mean >= n * s});
  if (defined) {
    upper.add_value("lhs", s2 + correction * correction);
    upper.add_value("rhs", range * range / 4.0);
    if (upper.applicable)
      upper.satisfied = leq_tol(s2 + correction * correction, range * range / 4.0);
  }
  out.push_back(std::move(upper));

  BoundReport lower;
  lower.name = "negative-min-lower";
  lower.kind = BoundKind::Lower;
  lower.reference = "eq 2.28";
  lower.require("min < 0 and mean > 0 and mean^2 >= (n/2) s^2", gate);
  lower.require("n >= 3", sample.size() >= 3);
  lower.diagnostics.push_back(
      {"printed gate 2*mean >= n*stddev (recorded, not used)",
       2.0 * mean >= n * s});
  if (defined && sample.size() >= 3) {
    const double lhs = s2 - 2.0 / (n - 2.0) * correction * correction;
    lower.add_value("lhs", lhs);
    lower.add_value("rhs", range * range / (2.0 * n));
    if (lower.applicable)
      lower.satisfied = leq_tol(range * range / (2.0 * n), lhs);
  }
  out.push_back(std::move(lower));

  return out;
}

std::vector<BoundReport> kurtosis_gated_bound(const RealSample& sample) {
  const double m2 = sample.variance();
  const double m4 = sample.fourth_moment();
  const double mean = sample.mean();
  const double range = sample.range();
  const double product = (mean - sample.min()) * (sample.max() - mean);

  std::vector<BoundReport> out;

  BoundReport gated;
  gated.name = "kurtosis-upper";
  gated.kind = BoundKind::Upper;
  gated.reference = "eq 2.37";
  const bool has_kurtosis = m2 > 0.0;
  gated.require("s^2 > 0 (kurtosis defined)", has_kurtosis);
  const double kurtosis = has_kurtosis ? m4 / (m2 * m2) : 0.0;
  gated.require("m4 / m2^2 >= 3", has_kurtosis && kurtosis >= 3.0);
  if (has_kurtosis) gated.add_value("kurtosis", kurtosis);
  const double upper = range * std::sqrt(product / 6.0);
  const double cap = range * range / (2.0 * std::sqrt(6.0));
  gated.add_value("s2", m2);
  gated.add_value("upper", upper);
  gated.add_value("cap", cap);
  if (gated.applicable)
    gated.satisfied = leq_tol(m2, upper) && leq_tol(upper, cap);
  out.push_back(std::move(gated));

  BoundReport unconditional;
  unconditional.name = "moment-product";
  unconditional.kind = BoundKind::Upper;
  unconditional.reference = "eq 2.35";
  const double lhs = m4 + 3.0 * m2 * m2;
  const double rhs = range * range * product;
  unconditional.add_value("lhs", lhs);
  unconditional.add_value("rhs", rhs);
  unconditional.satisfied = leq_tol(lhs, rhs);
  out.push_back(std::move(unconditional));

  return out;
}

std::vector<BoundReport> extreme_value_bounds(const RealSample& sample) {
  if (sample.size() < 2) throw std::invalid_argument("need at least two values");
  const double n = static_cast<double>(sample.size());
  const double s = sample.stddev();
  const double mean = sample.mean();
  const double wide = std::sqrt(n - 1.0) * s;
  const double narrow = s / std::sqrt(n - 1.0);

  std::vector<BoundReport> out;

  BoundReport min_report;
  min_report.name = "min-extreme";
  min_report.kind = BoundKind::TwoSided;
  min_report.reference = "eq 3.10";
  min_report.add_value("lower", mean - wide);
  min_report.add_value("observed", sample.min());
  min_report.add_value("upper", mean - narrow);
  min_report.satisfied = leq_tol(mean - wide, sample.min()) &&
                         leq_tol(sample.min(), mean - narrow);
  out.push_back(std::move(min_report));

  BoundReport max_report;
  max_report.name = "max-extreme";
  max_report.kind = BoundKind::TwoSided;
  max_report.reference = "eq 3.11";
  max_report.add_value("lower", mean + narrow);
  max_report.add_value("observed", sample.max());
  max_report.add_value("upper", mean + wide);
  max_report.satisfied = leq_tol(mean + narrow, sample.max()) &&
                         leq_tol(sample.max(), mean + wide);
  out.push_back(std::move(max_report));

  return out;
}

BoundReport mallows_richter(const RealSample& sample,
                            std::span<const std::size_t> subset) {
  const std::size_t n = sample.size();
  if (subset.empty()) throw std::invalid_argument("empty subset");
  std::vector<std::size_t> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end());
  if (idx.back() >= n) throw std::invalid_argument("subset index out of range");
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("duplicate subset index");

  const std::size_t r = idx.size();
  BoundReport report;
  report.name = "subset-mean-lower";
  report.kind = BoundKind::Lower;
  report.reference = "eq 1.8";
  report.require("subset size less than n", r < n);
  report.add_value("subset_size", static_cast<double>(r));
  if (r < n) {
    double sub_sum = 0.0;
    for (std::size_t i : idx) sub_sum += sample.values()[i];
    const double alpha = sub_sum / static_cast<double>(r);
    const double rf = static_cast<double>(r);
    const double nf = static_cast<double>(n);
    const double rhs =
        rf / (nf - rf) * (alpha - sample.mean()) * (alpha - sample.mean());
    report.add_value("subset_mean", alpha);
    report.add_value("lower", rhs);
    report.add_value("s2", sample.variance());
    report.satisfied = leq_tol(rhs, sample.variance());
  }
  return report;
}

}  // namespace varbounds
