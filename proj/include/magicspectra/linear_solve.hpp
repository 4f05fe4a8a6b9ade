// Partial-pivot LU factorization, linear solve and determinant.
#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "magicspectra/errors.hpp"
#include "magicspectra/matrix.hpp"

namespace magicspectra {

namespace detail {

struct LuFactors {
  DenseMatrix lu;           // L below the diagonal (unit), U on and above
  std::vector<std::size_t> perm;  // row permutation applied to the input
  int sign = 1;             // parity of the permutation
};

inline LuFactors lu_decompose(DenseMatrix a) {
  if (!a.square() || a.empty())
    throw InvalidDimensionError("lu_decompose: matrix must be square and non-empty");
  const std::size_t n = a.rows();
  const double pivot_floor = 1e-14 * max_abs(a);

  LuFactors f;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (std::abs(a(p, k)) <= pivot_floor)
      throw SingularMatrixError("lu_decompose: pivot below singularity threshold");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const double lik = a(i, k);
      if (lik == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

inline std::vector<double> lu_solve_vector(const LuFactors& f,
                                           const std::vector<double>& b) {
  const std::size_t n = f.lu.rows();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

}  // namespace detail

/// Solves A X = B column by column through a single LU factorization.
inline DenseMatrix solve_linear(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows())
    throw InvalidDimensionError("solve_linear: row counts of A and B differ");
  const auto f = detail::lu_decompose(a);
  const std::size_t n = a.rows();
  DenseMatrix x(n, b.cols());
  std::vector<double> col(n);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = b(i, j);
    const auto sol = detail::lu_solve_vector(f, col);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = sol[i];
  }
  return x;
}

inline double determinant(const DenseMatrix& a) {
  detail::LuFactors f;
  try {
    f = detail::lu_decompose(a);
  } catch (const SingularMatrixError&) {
    return 0.0;
  }
  double d = f.sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

}  // namespace magicspectra
