// Discrete Fourier matrix and Fourier modes. The DFT is materialized as a
// dense matrix and applied by plain products; no FFT at these sizes.
#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "magicspectra/errors.hpp"
#include "magicspectra/matrix.hpp"

namespace magicspectra {

/// omega^k for omega = e^{-2*pi*i/n}, with the exponent reduced mod n so the
/// trig argument stays in [0, 2*pi).
inline Complex unity_root_power(std::size_t n, std::size_t k) {
  const std::size_t r = k % n;
  return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(n));
}

/// j-th Fourier mode v_j = (1, w^j, w^{2j}, ..., w^{(n-1)j})^T.
struct FourierMode {
  std::size_t n = 0;
  std::size_t j = 0;
  std::vector<Complex> entries;
};

inline FourierMode fourier_mode(std::size_t n, std::size_t j) {
  if (n == 0) throw InvalidDimensionError("fourier_mode: n must be >= 1");
  FourierMode v{n, j, std::vector<Complex>(n)};
  for (std::size_t p = 0; p < n; ++p)
    v.entries[p] = unity_root_power(n, p * j);
  return v;
}

/// F_n(p,q) = w^{(p-1)(q-1)}; column q is the Fourier mode v_{q-1}.
inline ComplexMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw InvalidDimensionError("dft_matrix: n must be >= 1");
  ComplexMatrix f(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      f(p, q) = unity_root_power(n, p * q);
  return f;
}

}  // namespace magicspectra
