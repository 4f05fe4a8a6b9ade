// Spectral norm and numerical rank via power iteration on A^T A.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "magicspectra/errors.hpp"
#include "magicspectra/matrix.hpp"
#include "magicspectra/tolerance.hpp"

namespace magicspectra {

namespace detail {

// Deterministic start vector (1, 1/2, 1/3, ...), normalized. Reproducible
// runs without any seeding machinery.
inline std::vector<double> power_start(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / static_cast<double>(i + 1);
  const double nrm = norm2(x);
  for (auto& v : x) v /= nrm;
  return x;
}

// Dominant eigenvalue and eigenvector of a symmetric PSD matrix.
// Returns lambda = 0 immediately when the iterate is annihilated.
inline double power_iteration_sym(const DenseMatrix& b, std::vector<double>& x,
                                  const ToleranceConfig& cfg) {
  double lambda = 0.0;
  for (int it = 0; it < cfg.norm_iters; ++it) {
    std::vector<double> y = b * x;
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) rayleigh += x[i] * y[i];
    const double ynorm = norm2(y);
    if (ynorm == 0.0) return 0.0;
    for (auto& v : y) v /= ynorm;
    x = std::move(y);
    if (it > 0 && std::abs(rayleigh - lambda) <= cfg.norm_tol * std::abs(rayleigh)) {
      return rayleigh;
    }
    lambda = rayleigh;
  }
  throw ConvergenceError("power iteration: no convergence within norm_iters");
}

}  // namespace detail

/// Largest singular value of A, i.e. sqrt of the dominant eigenvalue of A^T A.
inline double spectral_norm(const DenseMatrix& a, const ToleranceConfig& cfg = {}) {
  if (a.empty()) throw InvalidDimensionError("spectral_norm: empty matrix");
  const DenseMatrix b = a.transposed() * a;
  std::vector<double> x = detail::power_start(b.rows());
  const double lambda = detail::power_iteration_sym(b, x, cfg);
  return std::sqrt(std::max(lambda, 0.0));
}

/// Number of singular values exceeding zero_threshold relative to sigma_max.
///
/// Counted through Householder QR with column pivoting: the decaying diagonal
/// of R tracks the singular values closely for the well-gapped matrices this
/// library meets, and the factorization is finite, with no deflation or
/// convergence questions. sigma_max itself comes from spectral_norm so the
/// threshold matches the documented definition.
inline std::size_t numerical_rank(const DenseMatrix& a,
                                  const ToleranceConfig& cfg = {}) {
  if (a.empty()) throw InvalidDimensionError("numerical_rank: empty matrix");
  const double sigma_max = spectral_norm(a, cfg);
  if (sigma_max == 0.0) return 0;
  const double thresh = cfg.zero_threshold * sigma_max;

  DenseMatrix r = a;
  const std::size_t rows = r.rows(), cols = r.cols();
  const std::size_t steps = std::min(rows, cols);

  std::vector<double> colnorm2(cols, 0.0);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) colnorm2[j] += r(i, j) * r(i, j);

  std::size_t rank = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t p = k;
    for (std::size_t j = k + 1; j < cols; ++j)
      if (colnorm2[j] > colnorm2[p]) p = j;
    if (p != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(r(i, k), r(i, p));
      std::swap(colnorm2[k], colnorm2[p]);
    }

    double norm = 0.0;
    for (std::size_t i = k; i < rows; ++i) norm += r(i, k) * r(i, k);
    norm = std::sqrt(norm);
    if (norm <= thresh) break;
    ++rank;
    if (k + 1 == steps) break;

    const double alpha = r(k, k) >= 0.0 ? -norm : norm;
    std::vector<double> v(rows, 0.0);
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < rows; ++i) {
      v[i] = r(i, k);
      if (i == k) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 > 0.0) {
      const double beta = 2.0 / vnorm2;
      for (std::size_t j = k; j < cols; ++j) {
        double dot = 0.0;
        for (std::size_t i = k; i < rows; ++i) dot += v[i] * r(i, j);
        dot *= beta;
        for (std::size_t i = k; i < rows; ++i) r(i, j) -= dot * v[i];
      }
    }
    for (std::size_t i = k + 1; i < rows; ++i) r(i, k) = 0.0;
    // downdate remaining column norms; recompute exactly (cols are short)
    for (std::size_t j = k + 1; j < cols; ++j) {
      colnorm2[j] = 0.0;
      for (std::size_t i = k + 1; i < rows; ++i) colnorm2[j] += r(i, j) * r(i, j);
    }
  }
  return rank;
}

}  // namespace magicspectra
