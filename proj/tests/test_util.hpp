#pragma once

#include <complex>
#include <random>
#include <vector>

#include "varbounds/complex_stats.hpp"
#include "varbounds/matrix.hpp"
#include "varbounds/poly_span.hpp"
#include "varbounds/real_bounds.hpp"

namespace testutil {

using varbounds::Complex;

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline std::vector<Complex> random_cloud(std::mt19937& gen, std::size_t n,
                                         double scale = 10.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::vector<Complex> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(dist(gen), dist(gen));
  return pts;
}

inline std::vector<double> random_reals(std::mt19937& gen, std::size_t n,
                                        double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

inline varbounds::DenseMatrix random_symmetric(std::mt19937& gen,
                                               std::size_t n,
                                               double scale = 10.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  varbounds::DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = dist(gen);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

/// Coefficients a_1..a_n of the monic polynomial with the given roots.
inline std::vector<double> expand_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};  // full coefficient list, leading first
  for (double r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] -= r * c[k - 1];
  }
  return {c.begin() + 1, c.end()};
}

/// Random real root multiset; with some probability repeats an earlier root
/// exactly, so multiple roots stay exercised.
inline std::vector<double> random_roots(std::mt19937& gen, std::size_t n,
                                        double scale = 4.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> roots;
  roots.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!roots.empty() && unit(gen) < 0.25) {
      std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
      roots.push_back(roots[pick(gen)]);
    } else {
      roots.push_back(dist(gen));
    }
  }
  return roots;
}

}  // namespace testutil
