#include "varbounds/poly_span.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace varbounds {

MonicPoly::MonicPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2)
    throw std::invalid_argument("polynomial degree must be at least 2");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coefficient");
  }
}

double MonicPoly::evaluate(double x) const {
  double result = 1.0;
  for (double c : coeffs_) result = result * x + c;
  return result;
}

RootMoments coeff_moments(const MonicPoly& p) {
  const double n = static_cast<double>(p.degree());
  const double a1 = p.coeff(1);
  const double a2 = p.coeff(2);
  RootMoments m;
  m.mean = -a1 / n;
  m.variance = ((n - 1.0) * a1 * a1 - 2.0 * n * a2) / (n * n);
  return m;
}

BoundReport span_bounds(const MonicPoly& p) {
  const double n = static_cast<double>(p.degree());
  const double a1 = p.coeff(1);
  const double a2 = p.coeff(2);
  double radicand = (n - 1.0) * a1 * a1 - 2.0 * n * a2;  // = n^2 * variance
  const double scale = std::max({1.0, a1 * a1, std::fabs(a2) * n});
  if (radicand < -1e-9 * scale)
    throw std::domain_error("not real-rooted (certificate)");
  radicand = std::max(radicand, 0.0);

  BoundReport report;
  report.name = "span-sandwich";
  report.kind = BoundKind::TwoSided;
  report.reference = "eq 3.22";
  report.add_value("lower", 2.0 / n * std::sqrt(radicand));
  report.add_value("upper", std::sqrt(2.0 * radicand / n));
  return report;
}

std::vector<BoundReport> refined_span_bounds(const MonicPoly& p,
                                             bool zeros_nonnegative_asserted) {
  const std::size_t n = p.degree();
  const double nf = static_cast<double>(n);
  const double a1 = p.coeff(1);
  const double a2 = p.coeff(2);
  // All-zero root set: both leading moments vanish and every bound is 0.
  const bool degenerate = a1 == 0.0 && a2 == 0.0;
  const bool mean_defined = a1 != 0.0 || degenerate;
  const bool printed_gate = nf * a2 <= (nf - 2.0) * a1 * a1;
  // mean <= stddev for the roots, phrased in coefficients.
  const bool derivation_gate = 2.0 * nf * a2 <= (nf - 2.0) * a1 * a1;

  auto with_gates = [&](BoundReport& r) {
    r.require("zeros nonnegative (caller-asserted)", zeros_nonnegative_asserted);
    r.require("n >= 3", n >= 3);
    r.require("a1 != 0 (or all zeros zero)", mean_defined);
    r.require("printed gate n*a2 <= (n-2)*a1^2", printed_gate);
    r.require("root mean <= root stddev (2n*a2 <= (n-2)*a1^2)", derivation_gate);
  };

  std::vector<BoundReport> out;

  BoundReport printed;
  printed.name = "span-lower-printed";
  printed.kind = BoundKind::Lower;
  printed.reference = "eq 3.23";
  with_gates(printed);
  if (degenerate) {
    printed.add_value("lower", 0.0);
  } else if (mean_defined) {
    const double radicand = (2.0 * a2 - a1 * a1) / a1;
    printed.add_value("radicand", radicand);
    if (radicand >= 0.0) printed.add_value("lower", std::sqrt(radicand));
    printed.diagnostics.push_back(
        {"printed radicand nonnegative", radicand >= 0.0});
  }
  out.push_back(std::move(printed));

  BoundReport derived;
  derived.name = "span-lower-derived";
  derived.kind = BoundKind::Lower;
  derived.reference = "eq 3.23 via eq 2.24";
  with_gates(derived);
  if (degenerate) {
    derived.add_value("lower", 0.0);
  } else if (mean_defined) {
    derived.add_value("lower", (2.0 * a2 - a1 * a1) / a1);
  }
  out.push_back(std::move(derived));

  BoundReport upper;
  upper.name = "span-upper-refined";
  upper.kind = BoundKind::Upper;
  upper.reference = "eq 3.24";
  with_gates(upper);
  if (degenerate) {
    upper.add_value("upper", 0.0);
  } else if (mean_defined && n >= 3) {
    const double correction = (2.0 * nf * a2 - (nf - 2.0) * a1 * a1) / a1;
    const double radicand = 2.0 / nf * ((nf - 1.0) * a1 * a1 - 2.0 * nf * a2) -
                            correction * correction / (nf * (nf - 2.0));
    upper.add_value("radicand", radicand);
    if (radicand >= 0.0) upper.add_value("upper", std::sqrt(radicand));
    upper.diagnostics.push_back(
        {"refined radicand nonnegative", radicand >= 0.0});
  }
  out.push_back(std::move(upper));

  return out;
}

}  // namespace varbounds
