// Structural decompositions of the generated squares, one per parity class,
// each validated entrywise against the generator output on construction.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "magicspectra/circulant.hpp"
#include "magicspectra/errors.hpp"
#include "magicspectra/linear_solve.hpp"
#include "magicspectra/magic_gen.hpp"
#include "magicspectra/matrix.hpp"
#include "magicspectra/norms.hpp"

namespace magicspectra {

/// Odd split M_n = n J X + J Y = J (S + T) with X, S circulant and Y, T, G
/// (m+1)-row circulant. All first rows are exact small integers.
struct OddDecomposition {
  std::size_t n = 0;
  std::size_t m = 0;  // (n - 1) / 2
  CirculantMatrix X;  // first row (m, m+1, ..., 2m, 0, 1, ..., m-1)
  GRowCirculant Y;    // first row (1, 3, ..., 2m+1, 2, 4, ..., 2m), g = m+1
  CirculantMatrix S;  // n X + (m+1) folded into the first row
  GRowCirculant T;    // Y - (m+1) folded into the first row
  GRowCirculant G;    // permutation with S^{-1} T = (n G - ones) / n^2
};

/// Builds the odd decomposition and verifies n J X + J Y = M_n exactly over
/// the integers (doubles here hold small exact integers).
///
/// The first row of G is the unit vector e_{j*} where j* is the position of
/// the value m in the first row of Y - ones. That makes the Sherman-Morrison
/// identity hold for every odd n; the position works out to m/2 + 1 for even
/// m and 3(m+1)/2 for odd m.
inline OddDecomposition odd_decompose(std::size_t n) {
  if (n % 2 == 0) throw ParityError("odd_decompose: n must be odd");
  if (n < 3) throw UnsupportedOrderError("odd_decompose: n must be >= 3");
  const std::size_t m = (n - 1) / 2;

  OddDecomposition d;
  d.n = n;
  d.m = m;

  d.X.n = n;
  d.X.first_row = xn_first_row(n);

  std::vector<double> b(n);
  for (std::size_t k = 0; k <= m; ++k) b[k] = static_cast<double>(2 * k + 1);
  for (std::size_t k = 1; k <= m; ++k) b[m + k] = static_cast<double>(2 * k);
  d.Y = GRowCirculant{n, m + 1, b};

  std::vector<double> s_row(n), t_row(n);
  for (std::size_t k = 0; k < n; ++k) {
    s_row[k] = static_cast<double>(n) * d.X.first_row[k] + static_cast<double>(m + 1);
    t_row[k] = b[k] - static_cast<double>(m + 1);
  }
  d.S = CirculantMatrix{n, s_row};
  d.T = GRowCirculant{n, m + 1, t_row};

  std::vector<double> g_row(n, 0.0);
  std::size_t jstar = 0;
  while (b[jstar] - 1.0 != static_cast<double>(m)) ++jstar;
  g_row[jstar] = 1.0;
  d.G = GRowCirculant{n, m + 1, g_row};

  // exact reconstruction against the generator
  const MagicSquare sq = generate_odd(n);
  const DenseMatrix X = d.X.realize();
  const DenseMatrix Y = d.Y.realize();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t flip = n - 1 - i;  // row i of J X is row flip of X
    for (std::size_t j = 0; j < n; ++j) {
      const double v = static_cast<double>(n) * X(flip, j) + Y(flip, j);
      if (v != static_cast<double>(sq.at(i + 1, j + 1)))
        throw ConsistencyError("odd_decompose: n J X + J Y != M_n");
    }
  }
  // S + T = n X + Y entrywise
  const DenseMatrix lhs = d.S.realize() + d.T.realize();
  const DenseMatrix rhs = static_cast<double>(n) * X + Y;
  if (!(lhs == rhs)) throw ConsistencyError("odd_decompose: S + T != n X + Y");
  return d;
}

/// Checks S^{-1} T = (n G - ones) / n^2 entrywise to 1e-9 and returns
/// ||S^{-1} T||_2, which Lemma-2 style algebra pins at exactly 1/n.
inline double verify_perturbation_identity(const OddDecomposition& d,
                                           const ToleranceConfig& cfg = {}) {
  const std::size_t n = d.n;
  const DenseMatrix st = solve_linear(d.S.realize(), d.T.realize());
  const DenseMatrix g = d.G.realize();
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double expect = (static_cast<double>(n) * g(i, j) - 1.0) / n2;
      if (std::abs(st(i, j) - expect) > 1e-9)
        throw ConsistencyError(
            "verify_perturbation_identity: S^-1 T != (n G - ones)/n^2");
    }
  return spectral_norm(st, cfg);
}

/// Block reduction of a singly even square by the orthonormal rotation
/// Q = (1/sqrt(2)) [[I, -I], [I, I]]:
/// Q M Q^T = [[m^2 A_m, m^2 B_m], [0, 2 M_m + 3 m^2 ones]].
struct SinglyEvenBlockForm {
  std::size_t n = 0;
  std::size_t m = 0;  // n / 2
  std::size_t k = 0;  // (m - 1) / 2
  DenseMatrix Q;
  DenseMatrix A_m;
  DenseMatrix B_m;
  DenseMatrix reduced;  // lower-right block 2 M_m + 3 m^2 ones, exact integers
  std::vector<std::int64_t> u;        // length n: +1 at k+1, -1 at n-k
  std::vector<std::int64_t> v;        // length n: +1 at 1, -1 at k+1
  std::vector<std::int64_t> tilde_v;  // length n: +1 at 1, m+1; -1 at k+1, m+k+1
  std::vector<std::int64_t> w;        // length m: +1 at 1, -1 at k+1
  std::vector<std::int64_t> e_k1;     // length m: unit vector at k+1
};

inline SinglyEvenBlockForm singly_even_block_form(std::size_t n) {
  if (n % 4 != 2) throw ParityError("singly_even_block_form: n must be 2 mod 4");
  if (n < 6) throw UnsupportedOrderError("singly_even_block_form: n must be >= 6");
  const std::size_t m = n / 2;
  const std::size_t k = (m - 1) / 2;

  SinglyEvenBlockForm f;
  f.n = n;
  f.m = m;
  f.k = k;

  const double r = 1.0 / std::sqrt(2.0);
  f.Q = DenseMatrix(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    f.Q(i, i) = r;
    f.Q(i, i + m) = -r;
    f.Q(i + m, i) = r;
    f.Q(i + m, i + m) = r;
  }

  // A_m = ones * (1..1, -2, -2, -1..-1) - 3 e_{k+1} w^T, B_m likewise with
  // the complementary row pattern.
  std::vector<double> arow(m), brow(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (j < k) {
      arow[j] = 1.0;
      brow[j] = 2.0;
    } else if (j < k + 2) {
      arow[j] = -2.0;
      brow[j] = -1.0;
    } else {
      arow[j] = -1.0;
      brow[j] = -2.0;
    }
  }
  f.A_m = DenseMatrix(m, m);
  f.B_m = DenseMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      f.A_m(i, j) = arow[j];
      f.B_m(i, j) = brow[j];
    }
  // w has +1 at position 1 and -1 at position k+1 (1-based)
  f.A_m(k, 0) -= 3.0;
  f.A_m(k, k) += 3.0;
  f.B_m(k, 0) -= 3.0;
  f.B_m(k, k) += 3.0;

  f.u.assign(n, 0);
  f.u[k] = 1;
  f.u[n - k - 1] = -1;
  f.v.assign(n, 0);
  f.v[0] = 1;
  f.v[k] = -1;
  f.tilde_v.assign(n, 0);
  f.tilde_v[0] = 1;
  f.tilde_v[m] = 1;
  f.tilde_v[k] = -1;
  f.tilde_v[m + k] = -1;
  f.w.assign(m, 0);
  f.w[0] = 1;
  f.w[k] = -1;
  f.e_k1.assign(m, 0);
  f.e_k1[k] = 1;

  const MagicSquare inner = generate_odd(m);
  const auto m2 = static_cast<std::int64_t>(m * m);
  f.reduced = DenseMatrix(m, m);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      f.reduced(i - 1, j - 1) = static_cast<double>(2 * inner.at(i, j) + 3 * m2);

  // validate the boxed block identity against the generated square
  const MagicSquare sq = generate_singly_even(n);
  const DenseMatrix block = f.Q * sq.to_dense() * f.Q.transposed();
  const double tol = 1e-9 * static_cast<double>(magic_sum(n));
  const double mm = static_cast<double>(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (std::abs(block(i + m, j)) > tol)
        throw ConsistencyError("singly_even_block_form: lower-left block not zero");
      if (std::abs(block(i, j) - mm * f.A_m(i, j)) > tol ||
          std::abs(block(i, j + m) - mm * f.B_m(i, j)) > tol ||
          std::abs(block(i + m, j + m) - f.reduced(i, j)) > tol)
        throw ConsistencyError("singly_even_block_form: block identity violated");
    }
  return f;
}

/// Rank-3 factorization of a doubly even square:
/// M_n = ((n^2+1)/2) ones + (n/2) u v^T + v u^T / 2 = U S3 U^T.
struct DoublyEvenFactors {
  std::size_t n = 0;
  std::vector<std::int64_t> u;  // (w; -flip(w)) with |w_p| = n+1-2p
  std::vector<std::int64_t> v;  // repeating (1, -1, -1, 1) pattern
  std::vector<std::int64_t> w;  // first half of u
  DenseMatrix U;                // n x 3, columns (ones, u, v)
  DenseMatrix S3;               // (1/2) [[n^2+1,0,0],[0,0,n],[0,1,0]]
  DenseMatrix D3;               // U^T U = (n/3) diag(3, n^2-1, 3)
};

inline DoublyEvenFactors doubly_even_factorize(std::size_t n) {
  if (n % 4 != 0) throw ParityError("doubly_even_factorize: n must be 0 mod 4");
  if (n < 4) throw UnsupportedOrderError("doubly_even_factorize: n must be >= 4");
  const std::size_t half = n / 2;

  DoublyEvenFactors f;
  f.n = n;
  // signs follow the (+, -, -, +) cadence: + when p mod 4 is 1 or 0.
  // The trailing "... (-1)^m" elision in the usual statement is ambiguous;
  // exact reconstruction below is the ground truth for the pattern.
  f.w.resize(half);
  for (std::size_t p = 1; p <= half; ++p) {
    const std::int64_t mag = static_cast<std::int64_t>(n) + 1 - 2 * static_cast<std::int64_t>(p);
    const bool plus = (p % 4 == 1 || p % 4 == 0);
    f.w[p - 1] = plus ? mag : -mag;
  }
  f.u.resize(n);
  for (std::size_t p = 0; p < half; ++p) {
    f.u[p] = f.w[p];
    f.u[n - 1 - p] = -f.w[p];
  }
  f.v.resize(n);
  for (std::size_t p = 1; p <= n; ++p)
    f.v[p - 1] = (p % 4 == 1 || p % 4 == 0) ? 1 : -1;

  f.U = DenseMatrix(n, 3);
  for (std::size_t i = 0; i < n; ++i) {
    f.U(i, 0) = 1.0;
    f.U(i, 1) = static_cast<double>(f.u[i]);
    f.U(i, 2) = static_cast<double>(f.v[i]);
  }
  const double dn = static_cast<double>(n);
  f.S3 = DenseMatrix(3, 3);
  f.S3(0, 0) = (dn * dn + 1.0) / 2.0;
  f.S3(1, 2) = dn / 2.0;
  f.S3(2, 1) = 0.5;
  f.D3 = f.U.transposed() * f.U;

  // exact reconstruction: entries are (n^2+1)/2-ish half-integers that sum
  // to exact integers, so == on doubles is the honest check
  const MagicSquare sq = generate_doubly_even(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double ui = static_cast<double>(f.u[i]), uj = static_cast<double>(f.u[j]);
      const double vi = static_cast<double>(f.v[i]), vj = static_cast<double>(f.v[j]);
      const double val = (dn * dn + 1.0) / 2.0 + dn / 2.0 * ui * vj + vi * uj / 2.0;
      if (val != static_cast<double>(sq.at(i + 1, j + 1)))
        throw ConsistencyError("doubly_even_factorize: U S3 U^T != M_n");
    }
  // D3 = (n/3) diag(3, n^2-1, 3) exactly
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double expect =
          i != j ? 0.0 : (i == 1 ? dn * (dn * dn - 1.0) / 3.0 : dn);
      if (f.D3(i, j) != expect)
        throw ConsistencyError("doubly_even_factorize: D3 != (n/3) diag(3, n^2-1, 3)");
    }
  return f;
}

}  // namespace magicspectra
