#pragma once

#include <vector>

#include "varbounds/complex_stats.hpp"
#include "varbounds/enclosing_disk.hpp"
#include "varbounds/matrix.hpp"
#include "varbounds/poly_span.hpp"
#include "varbounds/report.hpp"

namespace varbounds::oracle {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
};

/// All eigenvalues of a symmetric matrix by cyclic two-sided rotations,
/// iterated until the off-diagonal norm drops below 1e-12 * ||A||_F.
/// Desk scale: throws above dimension 64 or on asymmetric input.
Spectrum eigenvalues_symmetric(const DenseMatrix& matrix);

/// All roots (with multiplicity, ascending) of a real-rooted monic
/// polynomial of degree <= 16. Roots are isolated between the critical
/// points obtained recursively and bisected; repeated roots are taken at
/// critical points where the polynomial itself vanishes. Throws
/// std::domain_error("not real-rooted") on a root-count deficit.
std::vector<double> real_roots(const MonicPoly& p);

/// Exhaustive smallest enclosing disk: every pair as a diameter and every
/// triple as a circumcircle. n <= 50.
Disk min_disk_brute(const ComplexSample& points);

/// Eigenvalues of a normal complex matrix at desk scale, via the real
/// symmetric embedding of a fixed Hermitian mix of its Hermitian and
/// skew-Hermitian parts. Used by the unitary trace-zero check.
std::vector<Complex> eigenvalues_normal(const ComplexMatrix& matrix);

enum class CheckStatus { Pass, Fail, Skipped };

struct ReportCheck {
  CheckStatus status = CheckStatus::Skipped;
  // truth - lower and upper - truth; a negative margin is a failure.
  double margin_lower = 0.0;
  double margin_upper = 0.0;
  bool has_lower = false;
  bool has_upper = false;
};

/// Checks lower <= truth <= upper for the sides the report records, within
/// tol relative slack; inapplicable reports come back Skipped.
ReportCheck verify_report(const BoundReport& report, double truth,
                          double tol = 1e-7);

}  // namespace varbounds::oracle
