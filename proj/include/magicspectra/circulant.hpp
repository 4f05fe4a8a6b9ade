// Circulant, g-row circulant and reverse circulant matrices with their
// closed-form spectra through the Fourier modes.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <vector>

#include "magicspectra/dft.hpp"
#include "magicspectra/eigen.hpp"
#include "magicspectra/errors.hpp"
#include "magicspectra/matrix.hpp"

namespace magicspectra {

/// First-row-defined circulant: row i is the first row cyclically shifted
/// right by i positions, D(i,j) = first_row[(j - i) mod n].
struct CirculantMatrix {
  std::size_t n = 0;
  std::vector<double> first_row;

  DenseMatrix realize() const {
    DenseMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d(i, j) = first_row[(j + n - i) % n];
    return d;
  }
};

/// g-row circulant: row i is the first row shifted right by g*i. Requires
/// gcd(g, n) = 1; g = 1 degenerates to the plain circulant.
struct GRowCirculant {
  std::size_t n = 0;
  std::size_t g = 1;
  std::vector<double> first_row;

  DenseMatrix realize() const {
    if (std::gcd(g, n) != 1)
      throw InvalidStrideError("GRowCirculant: gcd(g, n) must be 1");
    DenseMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t shift = (g * i) % n;
      for (std::size_t j = 0; j < n; ++j)
        d(i, j) = first_row[(j + n - shift) % n];
    }
    return d;
  }
};

/// Equals P_g * C where P_g is the stride-g row permutation and C the plain
/// circulant with the same first row.
inline DenseMatrix g_circulant_realize(const GRowCirculant& r) {
  return r.realize();
}

/// lambda_j = sum_k first_row[k] w^{kj}; eigenvector for lambda_j is the
/// Fourier mode v_j. Values are kept in mode order j = 0..n-1.
inline Spectrum circulant_spectrum(const CirculantMatrix& c,
                                   bool want_vectors = false) {
  const std::size_t n = c.n;
  Spectrum s;
  s.order = n;
  s.source = SpectrumSource::closed_form;
  s.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex sum{};
    for (std::size_t k = 0; k < n; ++k)
      sum += c.first_row[k] * unity_root_power(n, k * j);
    s.values[j] = sum;
  }
  if (want_vectors) {
    std::vector<std::vector<Complex>> vecs(n);
    for (std::size_t j = 0; j < n; ++j) vecs[j] = fourier_mode(n, j).entries;
    s.vectors = std::move(vecs);
  }
  return s;
}

/// Closed-form spectrum of the circulant with first row
/// (m, m+1, ..., 2m, 0, 1, ..., m-1):
/// lambda_0 = n(n-1)/2, lambda_j = (-1)^j (i n / 2) csc(pi j / n).
/// Computed from csc directly; the DFT sum above is the cross-check.
inline Spectrum xn_closed_form_spectrum(std::size_t n) {
  if (n % 2 == 0) throw ParityError("xn_closed_form_spectrum: n must be odd");
  if (n < 3) throw UnsupportedOrderError("xn_closed_form_spectrum: n must be >= 3");
  Spectrum s;
  s.order = n;
  s.source = SpectrumSource::closed_form;
  s.values.resize(n);
  const double dn = static_cast<double>(n);
  s.values[0] = Complex(dn * (dn - 1.0) / 2.0, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double csc = 1.0 / std::sin(std::numbers::pi * static_cast<double>(j) / dn);
    s.values[j] = Complex(0.0, sign * dn / 2.0 * csc);
  }
  return s;
}

/// First row of the paper's X_n: (m, m+1, ..., 2m, 0, 1, ..., m-1).
inline std::vector<double> xn_first_row(std::size_t n) {
  const std::size_t m = (n - 1) / 2;
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k)
    a[k] = static_cast<double>((m + k) % n);
  return a;
}

/// One eigenpair of the reverse circulant J*C.
struct ReverseCirculantEigenpair {
  std::size_t j = 0;     // mode index the pair is built from
  double value = 0.0;    // +|lambda_j| or -|lambda_j| (lambda_0 for j = 0)
  std::vector<Complex> vector;  // unit 2-norm
};

/// Eigenpairs of J*C from the circulant eigenpairs of C. Mode j pairs with
/// mode n-j and yields the two combinations v_j +- phase * v_{n-j} with
/// eigenvalues +-|lambda_j|, phase = w^{-j} lambda_j / |lambda_j|; the mode 0
/// pair (lambda_0, v_0) is kept separate. Vectors are unit-normalized and
/// mutually orthogonal.
inline std::vector<ReverseCirculantEigenpair> reverse_circulant_eigenpairs(
    const CirculantMatrix& c) {
  const std::size_t n = c.n;
  const Spectrum spec = circulant_spectrum(c);

  std::vector<ReverseCirculantEigenpair> out;
  out.reserve(n);

  {
    ReverseCirculantEigenpair p0;
    p0.j = 0;
    p0.value = spec.values[0].real();
    p0.vector = fourier_mode(n, 0).entries;
    const double nrm = norm2(p0.vector);
    for (auto& v : p0.vector) v /= nrm;
    out.push_back(std::move(p0));
  }

  for (std::size_t j = 1; 2 * j < n; ++j) {
    const Complex lambda = spec.values[j];
    const double mod = std::abs(lambda);
    if (mod == 0.0)
      throw DegenerateSpectrumError(
          "reverse_circulant_eigenpairs: lambda_j = 0, phase undefined", j);
    const Complex phase = unity_root_power(n, n - j) * lambda / mod;
    const auto vj = fourier_mode(n, j).entries;
    const auto vnj = fourier_mode(n, n - j).entries;
    for (int sign : {+1, -1}) {
      ReverseCirculantEigenpair p;
      p.j = sign > 0 ? j : n - j;
      p.value = sign * mod;
      p.vector.resize(n);
      for (std::size_t t = 0; t < n; ++t)
        p.vector[t] = vj[t] + static_cast<double>(sign) * phase * vnj[t];
      const double nrm = norm2(p.vector);
      for (auto& v : p.vector) v /= nrm;
      out.push_back(std::move(p));
    }
  }

  if (n % 2 == 0) {
    // self-paired mode n/2: J C v = w^{-n/2} lambda v with w^{-n/2} = -1
    const std::size_t j = n / 2;
    const Complex lambda = spec.values[j];
    ReverseCirculantEigenpair p;
    p.j = j;
    p.value = -lambda.real();
    p.vector = fourier_mode(n, j).entries;
    const double nrm = norm2(p.vector);
    for (auto& v : p.vector) v /= nrm;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace magicspectra
