#include "varbounds/complex_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace varbounds {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexSample::ComplexSample(std::vector<Complex> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("empty sample");
  for (const Complex& z : points_) {
    if (!finite(z)) throw std::invalid_argument("non-finite point in sample");
  }
}

DispersionSummary dispersion(const ComplexSample& sample) {
  const std::size_t n = sample.size();
  Complex sum{0.0, 0.0};
  for (const Complex& z : sample) sum += z;
  const Complex mean = sum / static_cast<double>(n);

  double sz2 = 0.0;
  Complex s2{0.0, 0.0};
  for (const Complex& z : sample) {
    const Complex d = z - mean;
    sz2 += std::norm(d);
    s2 += d * d;
  }
  sz2 /= static_cast<double>(n);
  s2 /= static_cast<double>(n);

  DispersionSummary out;
  out.mean = mean;
  out.sz2 = sz2;
  out.s2 = s2;
  out.sigma_z2 = (std::abs(s2) + sz2) / 2.0;
  return out;
}

double pooled_variance(const ComplexSample& a, const ComplexSample& b) {
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  const DispersionSummary da = dispersion(a);
  const DispersionSummary db = dispersion(b);
  return (n1 / n) * da.sz2 + (n2 / n) * db.sz2 +
         (n1 * n2 / (n * n)) * std::norm(da.mean - db.mean);
}

BoundReport subset_mean_bound(const ComplexSample& sample,
                              std::span<const std::size_t> subset) {
  const std::size_t n = sample.size();
  if (subset.empty()) throw std::invalid_argument("empty subset");
  std::vector<std::size_t> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end());
  if (idx.back() >= n) throw std::invalid_argument("subset index out of range");
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("duplicate subset index");

  const std::size_t r = idx.size();
  Complex sub_sum{0.0, 0.0};
  for (std::size_t i : idx) sub_sum += sample[i];
  const Complex sub_mean = sub_sum / static_cast<double>(r);

  const DispersionSummary disp = dispersion(sample);
  const double lhs = std::norm(sub_mean - disp.mean);
  const double rhs = (static_cast<double>(n - r) / static_cast<double>(r)) *
                     disp.sigma_z2;

  BoundReport report;
  report.name = "subset-mean-bound";
  report.kind = BoundKind::Upper;
  report.reference = "eq 2.10";
  report.add_value("lhs", lhs);
  report.add_value("rhs", rhs);
  report.add_value("subset_size", static_cast<double>(r));
  report.satisfied = leq_tol(lhs, rhs);
  return report;
}

double max_pairwise_gap(const ComplexSample& sample) {
  const std::size_t n = sample.size();
  double gap2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      gap2 = std::max(gap2, std::norm(sample[i] - sample[j]));
    }
  }
  return std::sqrt(gap2);
}

BoundReport pairwise_gap_bound(const ComplexSample& sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw std::invalid_argument("need at least two points");
  const DispersionSummary disp = dispersion(sample);
  const double gap = max_pairwise_gap(sample);
  const double lower = gap * gap / (2.0 * static_cast<double>(n));

  BoundReport report;
  report.name = "pairwise-gap-lower";
  report.kind = BoundKind::Lower;
  report.reference = "eq 2.17";
  report.add_value("lower", lower);
  report.add_value("sigma_z2", disp.sigma_z2);
  report.add_value("max_gap", gap);
  report.satisfied = leq_tol(lower, disp.sigma_z2);
  return report;
}

std::vector<BoundReport> gap_upper_checks(const ComplexSample& sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw std::invalid_argument("need at least two points");
  const DispersionSummary disp = dispersion(sample);
  const double gap = max_pairwise_gap(sample);
  const double quarter = gap * gap / 4.0;

  std::vector<BoundReport> out;

  BoundReport popoviciu_analogue;
  popoviciu_analogue.name = "sigma-quarter-gap-upper";
  popoviciu_analogue.kind = BoundKind::Upper;
  popoviciu_analogue.reference = "eq 1.6";
  popoviciu_analogue.add_value("sigma_z2", disp.sigma_z2);
  popoviciu_analogue.add_value("upper", quarter);
  popoviciu_analogue.satisfied = leq_tol(disp.sigma_z2, quarter);
  out.push_back(std::move(popoviciu_analogue));

  // The same comparison against sz2 is not a theorem; it is reported so the
  // failure cases are visible.
  BoundReport sz2_check;
  sz2_check.name = "sz2-quarter-gap-check";
  sz2_check.kind = BoundKind::Info;
  sz2_check.reference = "sec 1";
  sz2_check.add_value("sz2", disp.sz2);
  sz2_check.add_value("quarter_gap", quarter);
  sz2_check.satisfied = leq_tol(disp.sz2, quarter);
  sz2_check.note = "no quarter-gap upper bound holds for sz2 in general";
  out.push_back(std::move(sz2_check));
  return out;
}

CollinearityResult collinearity_test(const ComplexSample& sample, double tol) {
  if (tol < 0.0) throw std::invalid_argument("negative tolerance");
  CollinearityResult result;
  result.summary = dispersion(sample);
  if (sample.size() <= 2) {
    result.collinear = true;
    return result;
  }
  const double gap = result.summary.sz2 - std::abs(result.summary.s2);
  result.collinear = gap <= tol * std::max(result.summary.sz2, 1.0);
  return result;
}

}  // namespace varbounds
