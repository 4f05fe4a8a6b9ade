#pragma once

#include "magicspectra/errors.hpp"

namespace magicspectra {

/// Numeric thresholds used throughout the library. All values are strictly
/// positive; zero_threshold is relative to the matrix scale (see eigen.hpp).
struct ToleranceConfig {
  double eig_tol = 1e-12;        // relative eigenpair residual
  int max_qr_iters = 100;        // QR iterations allowed per eigenvalue
  double zero_threshold = 1e-9;  // |lambda| below this times scale is zero
  int norm_iters = 10'000;       // power-iteration cap
  double norm_tol = 1e-13;       // relative change stopping rule

  void validate() const {
    if (eig_tol <= 0 || max_qr_iters <= 0 || zero_threshold <= 0 ||
        norm_iters <= 0 || norm_tol <= 0) {
      throw Error("ToleranceConfig: all thresholds must be strictly positive");
    }
  }
};

}  // namespace magicspectra
