#include "varbounds/enclosing_disk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace varbounds {

namespace {

// Slack for support-point searches; much tighter than Disk::contains so the
// reported radius stays within 1e-9 of the exhaustive optimum.
constexpr double kInternalSlack = 1e-12;

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool covers(const Disk& d, Complex p) {
  return std::abs(p - d.center) <=
         d.radius + kInternalSlack * std::max(d.radius, 1.0);
}

Disk disk_from_two(Complex a, Complex b) {
  const Complex c = (a + b) * 0.5;
  const double r = std::max(std::abs(a - c), std::abs(b - c));
  return {c, r};
}

std::optional<Disk> disk_from_three(Complex a, Complex b, Complex c) {
  const auto center = circumcenter(a, b, c);
  if (!center) return std::nullopt;
  const double r = std::max(
      {std::abs(a - *center), std::abs(b - *center), std::abs(c - *center)});
  return Disk{*center, r};
}

// Smallest disk with a and b on the boundary covering pts[0..count).
// Boundary circles on either side of the chord ab are tracked separately;
// collinear third points yield no circumcircle and are skipped (the widest
// diameter pair covers them).
Disk disk_with_two(const std::vector<Complex>& pts, std::size_t count,
                   Complex a, Complex b) {
  const Disk circ = disk_from_two(a, b);
  Disk left{{}, -1.0};
  Disk right{{}, -1.0};
  for (std::size_t i = 0; i < count; ++i) {
    const Complex p = pts[i];
    if (covers(circ, p)) continue;
    const double side = cross(a, b, p);
    const auto d = disk_from_three(a, b, p);
    if (!d) continue;
    const double center_side = cross(a, b, d->center);
    if (side > 0.0 &&
        (left.radius < 0.0 || center_side > cross(a, b, left.center))) {
      left = *d;
    } else if (side < 0.0 &&
               (right.radius < 0.0 || center_side < cross(a, b, right.center))) {
      right = *d;
    }
  }
  if (left.radius < 0.0 && right.radius < 0.0) return circ;
  if (left.radius < 0.0) return right;
  if (right.radius < 0.0) return left;
  return left.radius <= right.radius ? left : right;
}

// Smallest disk with a on the boundary covering pts[0..count).
Disk disk_with_one(const std::vector<Complex>& pts, std::size_t count,
                   Complex a) {
  Disk d{a, 0.0};
  for (std::size_t i = 0; i < count; ++i) {
    const Complex p = pts[i];
    if (covers(d, p)) continue;
    if (d.radius == 0.0) {
      d = disk_from_two(a, p);
    } else {
      d = disk_with_two(pts, i, a, p);
    }
  }
  return d;
}

}  // namespace

bool Disk::contains(Complex p) const {
  return std::abs(p - center) <= radius + 1e-9 * std::max(radius, 1.0);
}

std::optional<Complex> circumcenter(Complex a, Complex b, Complex c) {
  // Perpendicular-bisector system in coordinates relative to a.
  double m00 = b.real() - a.real();
  double m01 = b.imag() - a.imag();
  double m10 = c.real() - a.real();
  double m11 = c.imag() - a.imag();
  double r0 = 0.5 * (m00 * m00 + m01 * m01);
  double r1 = 0.5 * (m10 * m10 + m11 * m11);
  const double scale =
      std::max({std::fabs(m00), std::fabs(m01), std::fabs(m10), std::fabs(m11)});
  const double det = m00 * m11 - m01 * m10;
  if (scale == 0.0 || std::fabs(det) <= 1e-14 * scale * scale)
    return std::nullopt;
  if (std::fabs(m10) > std::fabs(m00)) {
    std::swap(m00, m10);
    std::swap(m01, m11);
    std::swap(r0, r1);
  }
  const double f = m10 / m00;
  const double y = (r1 - f * r0) / (m11 - f * m01);
  const double x = (r0 - m01 * y) / m00;
  return a + Complex{x, y};
}

Disk min_enclosing_disk(const ComplexSample& points) {
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return {pts[0], 0.0};

  std::mt19937 rng(0x5eed0123u);
  std::shuffle(pts.begin(), pts.end(), rng);

  Disk d{pts[0], -1.0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (d.radius < 0.0 || !covers(d, pts[i])) {
      d = disk_with_one(pts, i, pts[i]);
    }
  }
  return d;
}

BoundReport disk_inequality_chain(const ComplexSample& points) {
  if (points.size() < 2) throw std::invalid_argument("need at least two points");
  const DispersionSummary disp = dispersion(points);
  const Disk disk = min_enclosing_disk(points);
  const double gap = max_pairwise_gap(points);
  const double rz2 = disk.radius * disk.radius;
  const double gap2_over_3 = gap * gap / 3.0;
  const double jung_lower = gap / 2.0;
  const double jung_upper = gap / std::sqrt(3.0);

  BoundReport report;
  report.name = "disk-chain";
  report.kind = BoundKind::TwoSided;
  report.reference = "eq 1.7";
  report.add_value("sz2", disp.sz2);
  report.add_value("rz2", rz2);
  report.add_value("gap2_over_3", gap2_over_3);
  report.add_value("rz", disk.radius);
  report.add_value("jung_lower", jung_lower);
  report.add_value("jung_upper", jung_upper);
  report.satisfied = leq_tol(disp.sz2, rz2) && leq_tol(rz2, gap2_over_3) &&
                     leq_tol(jung_lower, disk.radius) &&
                     leq_tol(disk.radius, jung_upper);
  return report;
}

CircleOnMeanResult circle_on_mean_check(const ComplexSample& points,
                                        double tol) {
  if (tol < 0.0) throw std::invalid_argument("negative tolerance");
  const DispersionSummary disp = dispersion(points);

  double dmin = std::numeric_limits<double>::infinity();
  double dmax = 0.0;
  double dsum = 0.0;
  for (const Complex& z : points) {
    const double d = std::abs(z - disp.mean);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
    dsum += d;
  }
  const double common = dsum / static_cast<double>(points.size());

  CircleOnMeanResult result;
  result.on_circle = (dmax - dmin) <= tol * std::max(dmax, 1.0);
  result.common_radius = common;
  result.disk = min_enclosing_disk(points);

  BoundReport report;
  report.name = "circle-on-mean";
  report.kind = BoundKind::Info;
  report.reference = "thm 2.1";
  report.add_value("distance_min", dmin);
  report.add_value("distance_max", dmax);
  report.add_value("disk_radius", result.disk.radius);
  report.add_value("center_offset", std::abs(result.disk.center - disp.mean));
  report.diagnostics.push_back(
      {"all points equidistant from the mean", result.on_circle});
  if (result.on_circle) {
    const bool radius_ok =
        std::fabs(result.disk.radius - common) <= tol * std::max(common, 1.0);
    const bool center_ok =
        std::abs(result.disk.center - disp.mean) <= tol * std::max(common, 1.0);
    report.satisfied = radius_ok && center_ok;
  }
  result.report = std::move(report);
  return result;
}

}  // namespace varbounds
