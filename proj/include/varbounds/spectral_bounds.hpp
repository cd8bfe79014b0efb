#pragma once

#include <string>
#include <vector>

#include "varbounds/complex_stats.hpp"
#include "varbounds/enclosing_disk.hpp"
#include "varbounds/matrix.hpp"
#include "varbounds/report.hpp"

namespace varbounds {

/// The trace data the eigenvalue bounds consume: dimension, trace, trace of
/// the square, and the derived centered quantities.
struct SpectralSummary {
  std::size_t n = 0;
  double tr_a = 0.0;
  double tr_a2 = 0.0;  // trace of A^2
  double tr_b2 = 0.0;  // tr_a2 - tr_a^2 / n
  double mean = 0.0;   // tr_a / n
  double s_lambda2 = 0.0;  // tr_b2 / n
};

/// Traces taken directly from the entries; no eigendecomposition. For
/// symmetric input tr_b2 is clamped to zero if round-off drives it slightly
/// negative (it cannot be genuinely negative there).
SpectralSummary summarize(const DenseMatrix& matrix);

/// Assembles the summary from already-known traces.
SpectralSummary summary_from_traces(std::size_t n, double tr_a, double tr_a2);

/// sqrt((4/n) tr_b2) <= spread <= sqrt(2 tr_b2); requires a real spectrum
/// (throws std::domain_error("spectrum not real") when tr_b2 < 0) and n >= 2.
BoundReport spread_sandwich(const SpectralSummary& summary);

enum class SpectrumSign { Nonnegative, HasNegative, Unknown };

/// Refined spread bounds. The nonnegative-spectrum family needs
/// 0 < tr_a <= sqrt(n tr_b2); the negative-minimum family needs a negative
/// smallest eigenvalue and mean^2 >= (n/2) s_lambda^2 (the derivation's
/// condition; the looser printed gate is also required and recorded). The
/// negative-minimum bounds are emitted both as printed and in the form the
/// derivation actually yields; the printed forms overstate. sign_provenance
/// describes how the spectrum sign was established.
std::vector<BoundReport> refined_spread_bounds(
    const SpectralSummary& summary, SpectrumSign sign,
    const std::string& sign_provenance = "caller-asserted");

/// Two-sided localization of the smallest and largest eigenvalue.
std::vector<BoundReport> eigen_interval(const SpectralSummary& summary);

/// Bounds on the extremes and spread of the spectrum remaining after one
/// known eigenvalue nu is removed. Requires n >= 3; throws
/// std::domain_error("inconsistent known eigenvalue") when the deflated
/// variance is negative beyond round-off.
std::vector<BoundReport> deflated_bounds(const SpectralSummary& summary,
                                         double nu);

struct UnitaryCheckResult {
  BoundReport report;
  std::vector<Complex> eigenvalues;  // empty when not applicable
  double spread = 0.0;               // max pairwise eigenvalue distance
  Disk disk;
};

/// For a unitary matrix with zero trace, the unit circle is the smallest
/// circle enclosing the eigenvalues and the spread is at least sqrt(3).
/// Verifies both claims with oracle eigenvalues; a matrix failing the
/// unitarity or trace preconditions yields an inapplicable report.
UnitaryCheckResult unitary_trace_zero_check(const ComplexMatrix& matrix,
                                            double tol = 1e-9);

/// Pivoted Cholesky probe for positive semidefiniteness of a symmetric
/// matrix; used to establish the spectrum sign without an eigensolve.
bool is_positive_semidefinite(const DenseMatrix& matrix, double tol = 1e-9);

}  // namespace varbounds
