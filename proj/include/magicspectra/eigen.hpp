// General real nonsymmetric eigensolver: balancing, Householder reduction to
// upper Hessenberg form, Francis double-shift QR with deflation, and inverse
// iteration on the Hessenberg form for eigenvectors.
//
// Magic squares are nonsymmetric, so the full real Schur machinery is needed;
// 2x2 trailing blocks are resolved by the quadratic formula and complex
// conjugate pairs come out as such.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "magicspectra/errors.hpp"
#include "magicspectra/matrix.hpp"
#include "magicspectra/tolerance.hpp"

namespace magicspectra {

enum class SpectrumSource { numeric, closed_form };

/// Eigenvalues (and optionally eigenvectors) of one n x n matrix.
///
/// Numeric spectra are sorted by (real part, imaginary part) ascending so
/// table output is deterministic; closed-form spectra keep mode order.
struct Spectrum {
  std::size_t order = 0;
  std::vector<Complex> values;
  std::optional<std::vector<std::vector<Complex>>> vectors;
  SpectrumSource source = SpectrumSource::numeric;
};

namespace detail {

// Parlett-Reinsch balancing: diagonal similarity with radix-2 powers so row
// and column norms roughly match. Returns the scale factors; eigenvectors of
// the balanced matrix must be multiplied back by them.
inline std::vector<double> balance(DenseMatrix& a) {
  const std::size_t n = a.rows();
  const double radix = 2.0;
  std::vector<double> scale(n, 1.0);
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double ginv = 1.0 / f;
        scale[i] *= f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= ginv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
  return scale;
}

// Householder reduction to upper Hessenberg form. When accumulate is set,
// q receives the orthogonal transform with a = q * h * q^T.
inline void hessenberg(DenseMatrix& a, bool accumulate, DenseMatrix& q) {
  const std::size_t n = a.rows();
  if (accumulate) q = DenseMatrix::identity(n);
  if (n < 3) return;

  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) >= 0.0 ? -norm : norm;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    // a <- P a with P = I - beta v v^T acting on rows k+1..n-1
    for (std::size_t j = k; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += v[i] * a(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= dot * v[i];
    }
    // a <- a P on columns k+1..n-1
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
      dot *= beta;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * v[j];
    }
    if (accumulate) {
      for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0;
        for (std::size_t j = k + 1; j < n; ++j) dot += q(i, j) * v[j];
        dot *= beta;
        for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= dot * v[j];
      }
    }
    // clean the annihilated part of the column
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix. Destroys h and
// returns all eigenvalues. Classic EISPACK HQR iteration with exceptional
// shifts every ten stalled sweeps and a per-eigenvalue iteration cap.
inline std::vector<Complex> hessenberg_qr_values(DenseMatrix& h,
                                                 const ToleranceConfig& cfg) {
  const int n = static_cast<int>(h.rows());
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<Complex> out(n);

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
  if (anorm == 0.0) return out;  // zero matrix

  auto partial = [&](int upto) {
    // eigenvalues with index > upto were already deflated
    return std::vector<Complex>(out.begin() + upto + 1, out.end());
  };

  int nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(h(l, l - 1)) <= eps * s) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      double x = h(nn, nn);
      if (l == nn) {
        out[nn--] = Complex(x + t, 0.0);
      } else {
        double y = h(nn - 1, nn - 1);
        double w = h(nn, nn - 1) * h(nn - 1, nn);
        if (l == nn - 1) {
          double p = 0.5 * (y - x);
          double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            out[nn - 1] = out[nn] = Complex(x + z, 0.0);
            if (z != 0.0) out[nn] = Complex(x - w / z, 0.0);
          } else {
            out[nn] = Complex(x + p, -z);
            out[nn - 1] = std::conj(out[nn]);
          }
          nn -= 2;
        } else {
          if (its == cfg.max_qr_iters)
            throw ConvergenceError(
                "eigen_decompose: QR failed to deflate within iteration cap",
                partial(nn));
          if (its != 0 && its % 10 == 0) {
            t += x;
            for (int i = 0; i <= nn; ++i) h(i, i) -= x;
            double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m;
          double p = 0.0, q = 0.0, r = 0.0;
          for (m = nn - 2; m >= l; --m) {
            double z = h(m, m);
            double rr = x - z;
            double ss = y - z;
            p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - rr - ss;
            r = h(m + 2, m + 1);
            double s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            double v = std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                                      std::abs(h(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            h(i, i - 2) = 0.0;
            if (i != m + 2) h(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = h(k, k - 1);
              q = h(k + 1, k - 1);
              r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) h(k, k - 1) = -h(k, k - 1);
            } else {
              h(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            double z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              double pp = h(k, j) + q * h(k + 1, j);
              if (k != nn - 1) {
                pp += r * h(k + 2, j);
                h(k + 2, j) -= pp * z;
              }
              h(k + 1, j) -= pp * y;
              h(k, j) -= pp * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              double pp = x * h(i, k) + y * h(i, k + 1);
              if (k != nn - 1) {
                pp += z * h(i, k + 2);
                h(i, k + 2) -= pp * r;
              }
              h(i, k + 1) -= pp * q;
              h(i, k) -= pp;
            }
          }
        }
      }
    } while (l + 1 < nn);
  }
  return out;
}

// One inverse-iteration eigenvector of the Hessenberg matrix h for the
// (possibly complex) eigenvalue lambda. Exact singularity of h - lambda*I is
// expected; zero pivots are replaced by a small multiple of the matrix norm.
inline std::vector<Complex> hessenberg_inverse_iteration(const DenseMatrix& h,
                                                         Complex lambda) {
  const std::size_t n = h.rows();
  const double eps = std::numeric_limits<double>::epsilon();
  double hnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = (i == 0 ? 0 : i - 1); j < n; ++j)
      hnorm += std::abs(h(i, j));
  const double pivot_fill = eps * std::max(hnorm, 1.0);

  // factor (h - lambda I) once; Hessenberg structure keeps this O(n^2)
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = Complex(h(i, j), 0.0) - (i == j ? lambda : Complex{});
  std::vector<std::size_t> swapped(n, 0);
  std::vector<Complex> mult(n, Complex{});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (std::abs(a(k + 1, k)) > std::abs(a(k, k))) {
      swapped[k] = 1;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(k + 1, j));
    }
    if (std::abs(a(k, k)) == 0.0) a(k, k) = pivot_fill;
    const Complex m = a(k + 1, k) / a(k, k);
    mult[k] = m;
    a(k + 1, k) = Complex{};
    for (std::size_t j = k + 1; j < n; ++j) a(k + 1, j) -= m * a(k, j);
  }
  if (std::abs(a(n - 1, n - 1)) == 0.0) a(n - 1, n - 1) = pivot_fill;

  auto solve = [&](std::vector<Complex> b) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (swapped[k]) std::swap(b[k], b[k + 1]);
      b[k + 1] -= mult[k] * b[k];
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) b[i] -= a(i, j) * b[j];
      b[i] /= a(i, i);
    }
    return b;
  };

  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = Complex(1.0 / static_cast<double>(i + 1), 0.0);
  for (int pass = 0; pass < 3; ++pass) {
    x = solve(std::move(x));
    const double nrm = norm2(x);
    if (nrm == 0.0) break;
    for (auto& v : x) v /= nrm;
  }
  return x;
}

}  // namespace detail

/// All eigenvalues of a square real matrix, sorted by (re, im) ascending.
/// With want_vectors, eigenvectors come from inverse iteration on the
/// Hessenberg form, back-transformed and normalized so the entry of largest
/// modulus is real and positive.
inline Spectrum eigen_decompose(const DenseMatrix& a,
                                const ToleranceConfig& cfg = {},
                                bool want_vectors = false) {
  if (!a.square() || a.empty())
    throw InvalidDimensionError("eigen_decompose: matrix must be square, n >= 1");
  const std::size_t n = a.rows();

  DenseMatrix work = a;
  std::vector<double> scale = detail::balance(work);
  DenseMatrix q;
  detail::hessenberg(work, want_vectors, q);
  DenseMatrix hess = work;  // keep the Hessenberg form for inverse iteration

  std::vector<Complex> values;
  if (n == 1) {
    values = {Complex(work(0, 0), 0.0)};
  } else {
    values = detail::hessenberg_qr_values(work, cfg);
  }
  std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });

  Spectrum s;
  s.order = n;
  s.values = values;
  s.source = SpectrumSource::numeric;
  if (want_vectors) {
    std::vector<std::vector<Complex>> vecs;
    vecs.reserve(n);
    for (const Complex& lambda : values) {
      std::vector<Complex> y =
          n == 1 ? std::vector<Complex>{Complex(1.0, 0.0)}
                 : detail::hessenberg_inverse_iteration(hess, lambda);
      // back-transform: x = D * (Q * y)
      std::vector<Complex> x(n, Complex{});
      if (n == 1 || q.empty()) {
        x = y;
      } else {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) x[i] += q(i, j) * y[j];
      }
      for (std::size_t i = 0; i < n; ++i) x[i] *= scale[i];
      const double nrm = norm2(x);
      if (nrm > 0.0)
        for (auto& v : x) v /= nrm;
      std::size_t imax = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
      if (std::abs(x[imax]) > 0.0) {
        const Complex phase = x[imax] / std::abs(x[imax]);
        for (auto& v : x) v /= phase;
      }
      vecs.push_back(std::move(x));
    }
    s.vectors = std::move(vecs);
  }
  return s;
}

/// Frobenius norm stands in for ||A||_2 when classifying zeros; it is within
/// a sqrt(n) factor and scale-invariant, which is all the classifier needs.
inline double zero_classification_scale(const DenseMatrix& a) {
  return frobenius_norm(a);
}

inline bool is_zero_eigenvalue(Complex value, double matrix_scale,
                               const ToleranceConfig& cfg = {}) {
  return std::abs(value) <= cfg.zero_threshold * matrix_scale;
}

}  // namespace magicspectra
