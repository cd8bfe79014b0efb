#include "varbounds/spectral_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "varbounds/oracle.hpp"

namespace varbounds {

namespace {

SpectralSummary fill_summary(std::size_t n, double tr_a, double tr_a2) {
  SpectralSummary s;
  s.n = n;
  s.tr_a = tr_a;
  s.tr_a2 = tr_a2;
  s.tr_b2 = tr_a2 - tr_a * tr_a / static_cast<double>(n);
  s.mean = tr_a / static_cast<double>(n);
  s.s_lambda2 = s.tr_b2 / static_cast<double>(n);
  return s;
}

std::string sign_text(SpectrumSign sign) {
  switch (sign) {
    case SpectrumSign::Nonnegative:
      return "nonnegative";
    case SpectrumSign::HasNegative:
      return "has a negative eigenvalue";
    case SpectrumSign::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace

SpectralSummary summarize(const DenseMatrix& matrix) {
  SpectralSummary s =
      fill_summary(matrix.dim(), matrix.trace(), matrix.trace_of_square());
  if (matrix.is_symmetric() && s.tr_b2 < 0.0) {
    // Round-off only; the centered second moment of a real spectrum is
    // nonnegative.
    s.tr_b2 = 0.0;
    s.s_lambda2 = 0.0;
  }
  return s;
}

SpectralSummary summary_from_traces(std::size_t n, double tr_a, double tr_a2) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  return fill_summary(n, tr_a, tr_a2);
}

BoundReport spread_sandwich(const SpectralSummary& summary) {
  if (summary.n < 2) throw std::invalid_argument("need dimension at least 2");
  if (summary.tr_b2 < 0.0) throw std::domain_error("spectrum not real");
  const double n = static_cast<double>(summary.n);

  BoundReport report;
  report.name = "spread-sandwich";
  report.kind = BoundKind::TwoSided;
  report.reference = "eq 1.10";
  report.add_value("lower", std::sqrt(4.0 / n * summary.tr_b2));
  report.add_value("upper", std::sqrt(2.0 * summary.tr_b2));
  return report;
}

std::vector<BoundReport> refined_spread_bounds(
    const SpectralSummary& summary, SpectrumSign sign,
    const std::string& sign_provenance) {
  const double n = static_cast<double>(summary.n);
  const double tr_a = summary.tr_a;
  const double tr_a2 = summary.tr_a2;
  const double tr_b2 = summary.tr_b2;
  const double sq_trace = tr_a * tr_a;

  const bool nonneg = sign == SpectrumSign::Nonnegative;
  const bool has_negative = sign == SpectrumSign::HasNegative;
  const bool trace_positive = tr_a > 0.0;
  const bool mean_below_stddev =
      tr_b2 >= 0.0 && trace_positive && tr_a <= std::sqrt(n * tr_b2);
  // Theorem-level condition mean^2 >= (n/2) s^2 for the negative-minimum
  // family; the printed gate is recorded alongside.
  const bool mean_dominates = 2.0 * sq_trace >= n * n * tr_b2;
  const bool printed_neg_gate =
      tr_b2 >= 0.0 && trace_positive &&
      2.0 * tr_a <= std::sqrt(n * n * n * tr_b2);

  const std::string nonneg_diag =
      "eigenvalues nonnegative (" + sign_provenance + "): " + sign_text(sign);
  const std::string negative_diag =
      "smallest eigenvalue negative (" + sign_provenance + "): " +
      sign_text(sign);

  std::vector<BoundReport> out;

  BoundReport trace_ratio;
  trace_ratio.name = "spread-lower-trace-ratio";
  trace_ratio.kind = BoundKind::Lower;
  trace_ratio.reference = "eq 3.3";
  trace_ratio.require(nonneg_diag, nonneg);
  trace_ratio.require("tr A > 0", trace_positive);
  trace_ratio.require("tr A <= sqrt(n tr B^2)", mean_below_stddev);
  if (tr_a != 0.0) trace_ratio.add_value("lower", tr_a2 / tr_a);
  out.push_back(std::move(trace_ratio));

  {
    BoundReport printed;
    printed.name = "spread-upper-refined";
    printed.kind = BoundKind::Upper;
    printed.reference = "eq 3.4";
    printed.require(nonneg_diag, nonneg);
    printed.require("tr A > 0", trace_positive);
    printed.require("tr A <= sqrt(n tr B^2)", mean_below_stddev);
    printed.require("n >= 3", summary.n >= 3);
    if (trace_positive && summary.n >= 3) {
      const double dev = n * tr_b2 - tr_a2;
      const double radicand = 2.0 * tr_b2 * sq_trace - dev * dev / (n * (n - 2.0));
      printed.add_value("radicand", radicand);
      if (radicand >= 0.0) printed.add_value("upper", std::sqrt(radicand) / tr_a);
      printed.diagnostics.push_back({"radicand nonnegative", radicand >= 0.0});
    }
    out.push_back(std::move(printed));

    BoundReport derived;
    derived.name = "spread-upper-refined-derived";
    derived.kind = BoundKind::Upper;
    derived.reference = "eq 3.4 via eq 2.20";
    derived.require(nonneg_diag, nonneg);
    derived.require("tr A > 0", trace_positive);
    derived.require("tr A <= sqrt(n tr B^2)", mean_below_stddev);
    derived.require("n >= 3", summary.n >= 3);
    if (trace_positive && summary.n >= 3) {
      const double dev = n * tr_b2 - sq_trace;
      const double radicand = 2.0 * tr_b2 * sq_trace - dev * dev / (n * (n - 2.0));
      derived.add_value("radicand", radicand);
      if (radicand >= 0.0) derived.add_value("upper", std::sqrt(radicand) / tr_a);
      derived.diagnostics.push_back({"radicand nonnegative", radicand >= 0.0});
    }
    out.push_back(std::move(derived));
  }

  {
    const double radicand =
        16.0 * n * tr_b2 * sq_trace +
        (2.0 * sq_trace - n * n * tr_b2) * (2.0 * sq_trace - n * n * tr_b2);

    BoundReport printed;
    printed.name = "spread-lower-negative-min";
    printed.kind = BoundKind::Lower;
    printed.reference = "eq 3.6";
    printed.require(negative_diag, has_negative);
    printed.require("tr A > 0", trace_positive);
    printed.require("mean^2 >= (n/2) s_lambda^2", mean_dominates);
    printed.require("printed gate 0 < 2 tr A <= sqrt(n^3 tr B^2)",
                    printed_neg_gate);
    if (trace_positive && radicand >= 0.0) {
      printed.add_value("lower", std::sqrt(radicand) / (n * tr_a));
      printed.note = "printed prefactor; twice the bound the derivation gives";
    }
    out.push_back(std::move(printed));

    BoundReport derived;
    derived.name = "spread-lower-negative-min-derived";
    derived.kind = BoundKind::Lower;
    derived.reference = "eq 3.6 via eq 2.27";
    derived.require(negative_diag, has_negative);
    derived.require("tr A > 0", trace_positive);
    derived.require("mean^2 >= (n/2) s_lambda^2", mean_dominates);
    derived.require("printed gate 0 < 2 tr A <= sqrt(n^3 tr B^2)",
                    printed_neg_gate);
    if (trace_positive && radicand >= 0.0)
      derived.add_value("lower", std::sqrt(radicand) / (2.0 * n * tr_a));
    out.push_back(std::move(derived));
  }

  {
    BoundReport printed;
    printed.name = "spread-upper-negative-min";
    printed.kind = BoundKind::Upper;
    printed.reference = "eq 3.7";
    printed.require(negative_diag, has_negative);
    printed.require("tr A > 0", trace_positive);
    printed.require("mean^2 >= (n/2) s_lambda^2", mean_dominates);
    printed.require("printed gate 0 < 2 tr A <= sqrt(n^3 tr B^2)",
                    printed_neg_gate);
    printed.require("n >= 3", summary.n >= 3);
    if (trace_positive && summary.n >= 3) {
      const double dev = sq_trace - n * n * tr_b2;
      const double radicand = 2.0 * tr_b2 * sq_trace - dev * dev / (n * (n - 2.0));
      printed.add_value("radicand", radicand);
      if (radicand >= 0.0) printed.add_value("upper", std::sqrt(radicand) / tr_a);
      printed.diagnostics.push_back({"radicand nonnegative", radicand >= 0.0});
    }
    out.push_back(std::move(printed));

    BoundReport derived;
    derived.name = "spread-upper-negative-min-derived";
    derived.kind = BoundKind::Upper;
    derived.reference = "eq 3.7 via eq 2.28";
    derived.require(negative_diag, has_negative);
    derived.require("tr A > 0", trace_positive);
    derived.require("mean^2 >= (n/2) s_lambda^2", mean_dominates);
    derived.require("printed gate 0 < 2 tr A <= sqrt(n^3 tr B^2)",
                    printed_neg_gate);
    derived.require("n >= 3", summary.n >= 3);
    if (trace_positive && summary.n >= 3) {
      const double dev = 2.0 * sq_trace - n * n * tr_b2;
      const double radicand =
          2.0 * tr_b2 * sq_trace - dev * dev / (4.0 * n * (n - 2.0));
      derived.add_value("radicand", radicand);
      if (radicand >= 0.0) derived.add_value("upper", std::sqrt(radicand) / tr_a);
      derived.diagnostics.push_back({"radicand nonnegative", radicand >= 0.0});
    }
    out.push_back(std::move(derived));
  }

  return out;
}

std::vector<BoundReport> eigen_interval(const SpectralSummary& summary) {
  if (summary.n < 2) throw std::invalid_argument("need dimension at least 2");
  if (summary.tr_b2 < 0.0) throw std::domain_error("spectrum not real");
  const double n = static_cast<double>(summary.n);
  const double wide = std::sqrt((n - 1.0) / n * summary.tr_b2);
  const double narrow = std::sqrt(summary.tr_b2 / (n * (n - 1.0)));

  std::vector<BoundReport> out;

  BoundReport lo;
  lo.name = "lambda-min-interval";
  lo.kind = BoundKind::TwoSided;
  lo.reference = "eq 3.8";
  lo.add_value("lower", summary.mean - wide);
  lo.add_value("upper", summary.mean - narrow);
  out.push_back(std::move(lo));

  BoundReport hi;
  hi.name = "lambda-max-interval";
  hi.kind = BoundKind::TwoSided;
  hi.reference = "eq 3.9";
  hi.add_value("lower", summary.mean + narrow);
  hi.add_value("upper", summary.mean + wide);
  out.push_back(std::move(hi));

  return out;
}

std::vector<BoundReport> deflated_bounds(const SpectralSummary& summary,
                                         double nu) {
  if (summary.n < 3) throw std::invalid_argument("need dimension at least 3");
  const double n = static_cast<double>(summary.n);
  const double nf = n - 1.0;
  const double deflated_mean = (summary.tr_a - nu) / nf;
  const double gap = summary.mean - nu;
  double deflated_var = n / nf * summary.s_lambda2 - n / (nf * nf) * gap * gap;
  const double scale = std::max(1.0, summary.s_lambda2 + gap * gap);
  if (deflated_var < -1e-9 * scale)
    throw std::domain_error("inconsistent known eigenvalue");
  deflated_var = std::max(deflated_var, 0.0);
  const double s_nu = std::sqrt(deflated_var);
  const double wide = std::sqrt(n - 2.0) * s_nu;
  const double narrow = s_nu / std::sqrt(n - 2.0);

  std::vector<BoundReport> out;

  BoundReport lo;
  lo.name = "deflated-min-interval";
  lo.kind = BoundKind::TwoSided;
  lo.reference = "eq 3.14";
  lo.add_value("nu", nu);
  lo.add_value("deflated_mean", deflated_mean);
  lo.add_value("deflated_variance", deflated_var);
  lo.add_value("lower", deflated_mean - wide);
  lo.add_value("upper", deflated_mean - narrow);
  out.push_back(std::move(lo));

  BoundReport hi;
  hi.name = "deflated-max-interval";
  hi.kind = BoundKind::TwoSided;
  hi.reference = "eq 3.15";
  hi.add_value("lower", deflated_mean + narrow);
  hi.add_value("upper", deflated_mean + wide);
  out.push_back(std::move(hi));

  // Popoviciu and Nagy applied to the n-1 remaining eigenvalues; Nagy's
  // denominator counts those n-1 values.
  BoundReport spd;
  spd.name = "deflated-spread-sandwich";
  spd.kind = BoundKind::TwoSided;
  spd.reference = "eq 3.20";
  spd.add_value("lower", 2.0 * s_nu);
  spd.add_value("upper", std::sqrt(2.0 * (n - 1.0)) * s_nu);
  out.push_back(std::move(spd));

  return out;
}

UnitaryCheckResult unitary_trace_zero_check(const ComplexMatrix& matrix,
                                            double tol) {
  if (tol < 0.0) throw std::invalid_argument("negative tolerance");
  UnitaryCheckResult result;
  BoundReport report;
  report.name = "unitary-trace-zero";
  report.kind = BoundKind::Lower;
  report.reference = "thm 3.1";

  const double defect = matrix.unitary_defect();
  const double trace_mag = std::abs(matrix.trace());
  report.require("unitary (U* U = I entrywise)", defect <= tol);
  report.require("trace zero", trace_mag <= tol);
  report.add_value("unitary_defect", defect);
  report.add_value("trace_magnitude", trace_mag);
  if (!report.applicable) {
    result.report = std::move(report);
    return result;
  }

  result.eigenvalues = oracle::eigenvalues_normal(matrix);
  double spread = 0.0;
  double modulus_dev = 0.0;
  for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
    modulus_dev = std::max(modulus_dev,
                           std::fabs(std::abs(result.eigenvalues[i]) - 1.0));
    for (std::size_t j = i + 1; j < result.eigenvalues.size(); ++j) {
      spread = std::max(spread,
                        std::abs(result.eigenvalues[i] - result.eigenvalues[j]));
    }
  }
  result.spread = spread;
  result.disk = min_enclosing_disk(ComplexSample(result.eigenvalues));

  const double sqrt3 = std::sqrt(3.0);
  report.add_value("spread", spread);
  report.add_value("lower", sqrt3);
  report.add_value("disk_radius", result.disk.radius);
  report.add_value("disk_center_magnitude", std::abs(result.disk.center));
  report.add_value("modulus_deviation", modulus_dev);
  report.satisfied = spread >= sqrt3 - tol &&
                     std::fabs(result.disk.radius - 1.0) <= tol &&
                     std::abs(result.disk.center) <= tol;
  result.report = std::move(report);
  return result;
}

bool is_positive_semidefinite(const DenseMatrix& matrix, double tol) {
  if (!matrix.is_symmetric())
    throw std::invalid_argument("matrix not symmetric");
  const std::size_t n = matrix.dim();
  std::vector<double> a(matrix.entries());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(at(i, i)));

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (at(idx[i], idx[i]) > at(idx[piv], idx[piv])) piv = i;
    std::swap(idx[k], idx[piv]);
    const double d = at(idx[k], idx[k]);
    if (d < -tol * scale) return false;
    if (d <= tol * scale) {
      // Zero pivot block: PSD iff the remaining off-diagonal part vanishes.
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (std::fabs(at(idx[i], idx[j])) > 10.0 * tol * scale) return false;
      return true;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = at(idx[i], idx[k]) / d;
      for (std::size_t j = k + 1; j < n; ++j)
        at(idx[i], idx[j]) -= f * at(idx[k], idx[j]);
    }
  }
  return true;
}

}  // namespace varbounds
