// Error types shared across the library.
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace magicspectra {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimensions do not fit the operation (non-square, empty, mismatched).
class InvalidDimensionError : public Error {
 public:
  using Error::Error;
};

/// LU pivot fell below the singularity threshold.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// An iteration failed to converge within its cap. Carries whatever
/// eigenvalues were already deflated when QR gave up.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what,
                   std::vector<std::complex<double>> partial = {})
      : Error(what), partial_values(std::move(partial)) {}

  std::vector<std::complex<double>> partial_values;
};

/// Order has the wrong residue for the requested generator.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Order outside the supported range (n < 3).
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// g-row circulant stride not coprime with the order.
class InvalidStrideError : public Error {
 public:
  using Error::Error;
};

/// A circulant eigenvalue vanished where a phase was required.
class DegenerateSpectrumError : public Error {
 public:
  DegenerateSpectrumError(const std::string& what, std::size_t mode)
      : Error(what), mode_index(mode) {}

  std::size_t mode_index;
};

/// A structural identity that must hold by construction failed its check.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Zero/nonzero classification disagrees with the expected cardinalities.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace magicspectra
