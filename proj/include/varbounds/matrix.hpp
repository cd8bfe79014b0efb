#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace varbounds {

/// Dense square real matrix, row major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  }
  DenseMatrix(std::size_t n, std::vector<double> entries)
      : n_(n), a_(std::move(entries)) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
    if (a_.size() != n * n)
      throw std::invalid_argument("entry count does not match dimension");
    for (double v : a_) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite entry");
    }
  }

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const double& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  const std::vector<double>& entries() const { return a_; }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Trace of the matrix square, sum_ij a_ij a_ji; no eigendecomposition.
  double trace_of_square() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t += (*this)(i, j) * (*this)(j, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
  }

  bool is_symmetric(double tol = 1e-12) const {
    const double slack = tol * std::max(1.0, max_abs());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (std::fabs((*this)(i, j) - (*this)(j, i)) > slack) return false;
    return true;
  }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Dense square complex matrix, row major. Used for the unitary checks only.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  }
  explicit ComplexMatrix(const DenseMatrix& real) : ComplexMatrix(real.dim()) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = real(i, j);
  }

  std::size_t dim() const { return n_; }
  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  value_type trace() const {
    value_type t{0.0, 0.0};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const value_type& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Largest entry of U* U - I; zero for a unitary matrix.
  double unitary_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        value_type dot{0.0, 0.0};
        for (std::size_t k = 0; k < n_; ++k)
          dot += std::conj((*this)(k, i)) * (*this)(k, j);
        if (i == j) dot -= 1.0;
        worst = std::max(worst, std::abs(dot));
      }
    }
    return worst;
  }

 private:
  std::size_t n_ = 0;
  std::vector<value_type> a_;
};

}  // namespace varbounds
