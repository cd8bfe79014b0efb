#include "varbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace varbounds::oracle {

namespace {

struct EigenSystem {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k of the n x n array is the k-th pair
};

double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

// Cyclic Jacobi diagonalization of a symmetric matrix held in a dense n x n
// buffer. Rotations follow the tangent-based formulas; each sweep visits all
// off-diagonal pairs in index order.
EigenSystem jacobi(std::vector<double> a, std::size_t n, bool want_vectors) {
  EigenSystem sys;
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  const double norm = frobenius(a);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  if (norm > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
      double off2 = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) off2 += 2.0 * at(p, q) * at(p, q);
      if (std::sqrt(off2) <= 1e-12 * norm) {
        converged = true;
        break;
      }
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const double apq = at(p, q);
          if (apq == 0.0) continue;
          const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
          double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          at(p, p) -= t * apq;
          at(q, q) += t * apq;
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          for (std::size_t r = 0; r < n; ++r) {
            if (r == p || r == q) continue;
            const double arp = at(r, p);
            const double arq = at(r, q);
            at(r, p) = c * arp - s * arq;
            at(p, r) = at(r, p);
            at(r, q) = s * arp + c * arq;
            at(q, r) = at(r, q);
          }
          if (want_vectors) {
            for (std::size_t r = 0; r < n; ++r) {
              const double vrp = v[r * n + p];
              const double vrq = v[r * n + q];
              v[r * n + p] = c * vrp - s * vrq;
              v[r * n + q] = s * vrp + c * vrq;
            }
          }
        }
      }
    }
    if (!converged) {
      double off2 = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) off2 += 2.0 * at(p, q) * at(p, q);
      if (std::sqrt(off2) > 1e-12 * norm)
        throw std::runtime_error("eigensolver failed to converge");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return at(i, i) < at(j, j);
  });
  sys.values.resize(n);
  if (want_vectors) sys.vectors.assign(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    sys.values[k] = at(order[k], order[k]);
    if (want_vectors)
      for (std::size_t r = 0; r < n; ++r)
        sys.vectors[r * n + k] = v[r * n + order[k]];
  }
  return sys;
}

double horner(const std::vector<double>& coeffs, double x) {
  double r = 1.0;
  for (double c : coeffs) r = r * x + c;
  return r;
}

// Sum of absolute monomial magnitudes; the natural scale for deciding that a
// residual value of the polynomial is zero.
double horner_scale(const std::vector<double>& coeffs, double x) {
  const double ax = std::fabs(x);
  double r = 1.0;
  for (double c : coeffs) r = r * ax + std::fabs(c);
  return r;
}

bool vanishes(const std::vector<double>& coeffs, double x) {
  return std::fabs(horner(coeffs, x)) <= 1e-10 * horner_scale(coeffs, x);
}

double bisect(const std::vector<double>& coeffs, double lo, double hi,
              double flo) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-14 * std::max({1.0, std::fabs(lo), std::fabs(hi)}))
      return mid;
    const double fm = horner(coeffs, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> roots_rec(const std::vector<double>& coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 1) return {-coeffs[0]};

  // Monic derivative p' / n.
  std::vector<double> deriv(n - 1);
  for (std::size_t k = 1; k < n; ++k)
    deriv[k - 1] = coeffs[k - 1] * static_cast<double>(n - k) /
                   static_cast<double>(n);
  const std::vector<double> crit = roots_rec(deriv);

  double max_coeff = 0.0;
  for (double c : coeffs) max_coeff = std::max(max_coeff, std::fabs(c));
  const double bound = 1.0 + max_coeff;

  // Distinct critical points with multiplicities.
  std::vector<double> distinct;
  std::vector<std::size_t> mult;
  for (double c : crit) {
    if (!distinct.empty() &&
        std::fabs(c - distinct.back()) <= 1e-10 * std::max(1.0, std::fabs(c))) {
      ++mult.back();
    } else {
      distinct.push_back(c);
      mult.push_back(1);
    }
  }

  std::vector<double> breakpoints;
  breakpoints.push_back(-bound);
  breakpoints.insert(breakpoints.end(), distinct.begin(), distinct.end());
  breakpoints.push_back(bound);

  std::vector<bool> is_root(breakpoints.size(), false);
  std::vector<double> roots;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (vanishes(coeffs, distinct[i])) {
      is_root[i + 1] = true;
      for (std::size_t k = 0; k <= mult[i]; ++k) roots.push_back(distinct[i]);
    }
  }

  // Between consecutive critical points the polynomial is strictly monotone,
  // so a sign change brackets exactly one simple root.
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (is_root[i] || is_root[i + 1]) continue;
    const double lo = breakpoints[i];
    const double hi = breakpoints[i + 1];
    if (!(lo < hi)) continue;
    const double flo = horner(coeffs, lo);
    const double fhi = horner(coeffs, hi);
    if (flo == 0.0 || fhi == 0.0) continue;  // flagged cases covered above
    if ((flo > 0.0) != (fhi > 0.0)) roots.push_back(bisect(coeffs, lo, hi, flo));
  }

  std::sort(roots.begin(), roots.end());
  if (roots.size() != n) throw std::domain_error("not real-rooted");
  return roots;
}

bool brute_covers(const Disk& d, Complex p) {
  return std::abs(p - d.center) <=
         d.radius + 1e-12 * std::max(d.radius, 1.0);
}

}  // namespace

Spectrum eigenvalues_symmetric(const DenseMatrix& matrix) {
  const std::size_t n = matrix.dim();
  if (n > 64) throw std::invalid_argument("dimension above desk-scale cap 64");
  if (!matrix.is_symmetric(1e-12))
    throw std::invalid_argument("matrix not symmetric");
  EigenSystem sys = jacobi(matrix.entries(), n, /*want_vectors=*/false);
  return Spectrum{std::move(sys.values)};
}

std::vector<double> real_roots(const MonicPoly& p) {
  if (p.degree() > 16)
    throw std::invalid_argument("degree above desk-scale cap 16");
  return roots_rec(p.coeffs());
}

Disk min_disk_brute(const ComplexSample& points) {
  if (points.size() > 50)
    throw std::invalid_argument("brute-force disk capped at 50 points");
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n == 1) return {pts[0], 0.0};

  auto covers_all = [&](const Disk& d) {
    for (const Complex& p : pts)
      if (!brute_covers(d, p)) return false;
    return true;
  };

  Disk best{{}, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex c = (pts[i] + pts[j]) * 0.5;
      const double r = std::max(std::abs(pts[i] - c), std::abs(pts[j] - c));
      const Disk d{c, r};
      if (r < best.radius && covers_all(d)) best = d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto center = circumcenter(pts[i], pts[j], pts[k]);
        if (!center) continue;
        const double r = std::max({std::abs(pts[i] - *center),
                                  std::abs(pts[j] - *center),
                                  std::abs(pts[k] - *center)});
        const Disk d{*center, r};
        if (r < best.radius && covers_all(d)) best = d;
      }
    }
  }
  if (!std::isfinite(best.radius))
    throw std::runtime_error("no covering candidate disk found");
  return best;
}

std::vector<Complex> eigenvalues_normal(const ComplexMatrix& matrix) {
  const std::size_t n = matrix.dim();
  if (n > 32) throw std::invalid_argument("dimension above desk-scale cap 32");
  const double scale = std::max(1.0, matrix.max_abs());

  // Normality check: A A* and A* A must agree entrywise.
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex lhs{0.0, 0.0}, rhs{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        lhs += matrix(i, k) * std::conj(matrix(j, k));
        rhs += std::conj(matrix(k, i)) * matrix(k, j);
      }
      defect = std::max(defect, std::abs(lhs - rhs));
    }
  }
  if (defect > 1e-8 * scale * scale * static_cast<double>(n))
    throw std::invalid_argument("matrix not normal");

  // Hermitian and skew-Hermitian parts; both are exactly Hermitian by
  // construction, so the 2n x 2n embedding below is exactly symmetric.
  std::vector<Complex> h(n * n), k(n * n);
  const Complex half_i{0.0, -0.5};  // 1 / (2i)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex a = matrix(i, j);
      const Complex b = std::conj(matrix(j, i));
      h[i * n + j] = 0.5 * (a + b);
      k[i * n + j] = half_i * (a - b);
    }
  }

  // A generic mix H + tK has distinct eigenvalues whenever the (h, k) pairs
  // are distinct, so its eigenvectors are shared eigenvectors of the input.
  // Collisions are detected by the residual check and retried with another t.
  const double mixes[] = {0.6180339887498949, 1.2720196495140690,
                          0.3141592653589793};
  for (double t : mixes) {
    std::vector<double> w(4 * n * n, 0.0);
    const std::size_t m = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Complex mij = h[i * n + j] + t * k[i * n + j];
        w[i * m + j] = mij.real();
        w[i * m + (j + n)] = -mij.imag();
        w[(i + n) * m + j] = mij.imag();
        w[(i + n) * m + (j + n)] = mij.real();
      }
    }
    EigenSystem sys = jacobi(std::move(w), m, /*want_vectors=*/true);

    // Each eigenvector (x; y) of the embedding maps to the complex vector
    // x + i y; a 2-dimensional real eigenspace maps onto one complex line,
    // so a Gram-Schmidt sweep keeps exactly n independent directions.
    std::vector<std::vector<Complex>> basis;
    for (std::size_t col = 0; col < m && basis.size() < n; ++col) {
      std::vector<Complex> v(n);
      for (std::size_t r = 0; r < n; ++r)
        v[r] = Complex{sys.vectors[r * m + col], sys.vectors[(r + n) * m + col]};
      for (const auto& u : basis) {
        Complex proj{0.0, 0.0};
        for (std::size_t r = 0; r < n; ++r) proj += std::conj(u[r]) * v[r];
        for (std::size_t r = 0; r < n; ++r) v[r] -= proj * u[r];
      }
      double norm2 = 0.0;
      for (const Complex& c : v) norm2 += std::norm(c);
      const double norm = std::sqrt(norm2);
      if (norm < 0.3) continue;
      for (Complex& c : v) c /= norm;
      basis.push_back(std::move(v));
    }
    if (basis.size() != n) continue;

    std::vector<Complex> eigenvalues;
    bool ok = true;
    for (const auto& v : basis) {
      std::vector<Complex> av(n, Complex{0.0, 0.0});
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) av[i] += matrix(i, j) * v[j];
      Complex lambda{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) lambda += std::conj(v[i]) * av[i];
      double res2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) res2 += std::norm(av[i] - lambda * v[i]);
      if (std::sqrt(res2) > 1e-8 * scale * static_cast<double>(n)) {
        ok = false;
        break;
      }
      eigenvalues.push_back(lambda);
    }
    if (!ok) continue;
    std::sort(eigenvalues.begin(), eigenvalues.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return eigenvalues;
  }
  throw std::runtime_error("normal eigensolver failed on all mixes");
}

ReportCheck verify_report(const BoundReport& report, double truth, double tol) {
  ReportCheck check;
  if (!report.applicable) {
    check.status = CheckStatus::Skipped;
    return check;
  }
  const double* lower = report.find_value("lower");
  const double* upper = report.find_value("upper");
  if (lower == nullptr && upper == nullptr) {
    check.status = CheckStatus::Skipped;
    return check;
  }
  bool pass = true;
  if (lower != nullptr) {
    check.has_lower = true;
    check.margin_lower = truth - *lower;
    const double slack = tol * std::max({1.0, std::fabs(truth), std::fabs(*lower)});
    pass = pass && check.margin_lower >= -slack;
  }
  if (upper != nullptr) {
    check.has_upper = true;
    check.margin_upper = *upper - truth;
    const double slack = tol * std::max({1.0, std::fabs(truth), std::fabs(*upper)});
    pass = pass && check.margin_upper >= -slack;
  }
  check.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  return check;
}

}  // namespace varbounds::oracle
