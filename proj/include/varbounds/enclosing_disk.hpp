#pragma once

#include <optional>

#include "varbounds/complex_stats.hpp"
#include "varbounds/report.hpp"

namespace varbounds {

struct Disk {
  Complex center;
  double radius = 0.0;

  /// Containment with slack 1e-9 * max(radius, 1).
  bool contains(Complex p) const;
};

/// Circumcenter of three points, or nothing when they are (near) collinear.
/// Solved as a perpendicular-bisector 2x2 system with row pivoting.
std::optional<Complex> circumcenter(Complex a, Complex b, Complex c);

/// Smallest disk containing all points. Randomized incremental construction
/// with a fixed seed, so results are deterministic. Duplicate points are
/// dropped before the support search.
Disk min_enclosing_disk(const ComplexSample& points);

/// Checks sz2 <= r_z^2 <= max_gap^2 / 3 together with the planar Jung
/// sandwich max_gap / 2 <= r_z <= max_gap / sqrt(3). Requires n >= 2.
BoundReport disk_inequality_chain(const ComplexSample& points);

struct CircleOnMeanResult {
  /// All |z_i - mean| equal within the relative tolerance.
  bool on_circle = false;
  /// Mean distance from the mean; meaningful when on_circle.
  double common_radius = 0.0;
  Disk disk;
  BoundReport report;
};

/// When the points lie on a circle centred at their mean, that circle is the
/// smallest enclosing disk; the result records the check of both claims.
CircleOnMeanResult circle_on_mean_check(const ComplexSample& points,
                                        double tol = 1e-9);

}  // namespace varbounds
