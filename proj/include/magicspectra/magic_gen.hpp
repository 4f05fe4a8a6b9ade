// Magic-square generators reproducing MATLAB's magic(n) bit-exactly for all
// three parity classes: Siamese (odd), Strachey (singly even) and criss-cross
// (doubly even).
//
// All index arithmetic below is deliberately 1-based, mirroring the original
// listings; conversion to 0-based storage happens only at the array boundary.
#pragma once

#include <cstdint>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "magicspectra/errors.hpp"
#include "magicspectra/matrix.hpp"

namespace magicspectra {

enum class Parity { Odd, SinglyEven, DoublyEven };

inline Parity parity_of(std::size_t n) {
  if (n % 2 == 1) return Parity::Odd;
  return n % 4 == 0 ? Parity::DoublyEven : Parity::SinglyEven;
}

inline std::string parity_name(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::SinglyEven: return "singly-even";
    default: return "doubly-even";
  }
}

/// n x n grid holding a permutation of 1..n^2 whose rows, columns and both
/// diagonals sum to the magic sum n(n^2+1)/2.
struct MagicSquare {
  std::size_t n = 0;
  Parity parity = Parity::Odd;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t& at(std::size_t i, std::size_t j) {  // 1-based
    return entries[(i - 1) * n + (j - 1)];
  }
  std::int64_t at(std::size_t i, std::size_t j) const {
    return entries[(i - 1) * n + (j - 1)];
  }

  DenseMatrix to_dense() const {
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < entries.size(); ++k)
      m.data()[k] = static_cast<double>(entries[k]);
    return m;
  }
};

inline std::int64_t magic_sum(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return nn * (nn * nn + 1) / 2;
}

/// Siamese method: start at (1, (n+1)/2), walk up-right, drop one row on
/// collision.
inline MagicSquare generate_odd(std::size_t n) {
  if (n % 2 == 0) throw ParityError("generate_odd: n must be odd");
  if (n < 3) throw UnsupportedOrderError("generate_odd: n must be >= 3");

  MagicSquare sq{n, Parity::Odd, std::vector<std::int64_t>(n * n, 0)};
  std::size_t i = 1;
  std::size_t j = (n + 1) / 2;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n * n); ++k) {
    const std::size_t is = i;
    const std::size_t js = j;
    sq.at(i, j) = k;
    i = n - (n + 1 - i) % n;
    j = (j % n) + 1;
    if (sq.at(i, j) != 0) {
      i = (is % n) + 1;
      j = js;
    }
  }
  return sq;
}

/// Criss-cross method: fill 1..n^2 row-wise, then reflect entries through the
/// center wherever fix(mod(i,4)/2) == fix(mod(j,4)/2).
inline MagicSquare generate_doubly_even(std::size_t n) {
  if (n % 4 != 0) throw ParityError("generate_doubly_even: n must be divisible by 4");
  if (n < 4) throw UnsupportedOrderError("generate_doubly_even: n must be >= 4");

  MagicSquare sq{n, Parity::DoublyEven, std::vector<std::int64_t>(n * n)};
  const auto n2 = static_cast<std::int64_t>(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      std::int64_t v = static_cast<std::int64_t>(j) +
                       static_cast<std::int64_t>(i - 1) * static_cast<std::int64_t>(n);
      if ((i % 4) / 2 == (j % 4) / 2) v = n2 + 1 - v;
      sq.at(i, j) = v;
    }
  }
  return sq;
}

/// Strachey method: four shifted copies of the half-order odd square plus the
/// three column-swap passes. The J-column block is guarded by k > 1 exactly
/// as in the reference listing; for n = 6 that block is a no-op either way.
inline MagicSquare generate_singly_even(std::size_t n) {
  if (n % 4 != 2) throw ParityError("generate_singly_even: n must be 2 mod 4");
  if (n < 6) throw UnsupportedOrderError("generate_singly_even: n must be >= 6");

  const std::size_t m = n / 2;
  const MagicSquare base = generate_odd(m);
  const auto mm = static_cast<std::int64_t>(m * m);

  MagicSquare sq{n, Parity::SinglyEven, std::vector<std::int64_t>(n * n)};
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int64_t v = base.at(i, j);
      sq.at(i, j) = v;
      sq.at(i, j + m) = v + 2 * mm;
      sq.at(i + m, j) = v + 3 * mm;
      sq.at(i + m, j + m) = v + mm;
    }
  }

  const std::size_t k = (m - 1) / 2;
  auto swap_halves = [&](std::size_t i, std::size_t j) {
    std::swap(sq.at(i, j), sq.at(i + m, j));
  };
  if (k > 1) {
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 2; j <= k; ++j) swap_halves(i, j);
      for (std::size_t j = n - k + 2; j <= n; ++j) swap_halves(i, j);
    }
  }
  for (std::size_t i = 1; i <= m; ++i)
    if (i != k + 1) swap_halves(i, 1);
  swap_halves(k + 1, k + 1);
  return sq;
}

/// Dispatches on n mod 4. MATLAB's magic(2) is not a magic square and the
/// theory below needs n >= 3, so smaller orders are rejected outright.
inline MagicSquare magic(std::size_t n) {
  if (n < 3) throw UnsupportedOrderError("magic: n must be >= 3");
  switch (parity_of(n)) {
    case Parity::Odd: return generate_odd(n);
    case Parity::DoublyEven: return generate_doubly_even(n);
    default: return generate_singly_even(n);
  }
}

/// Full invariant check: permutation of 1..n^2 and all four sum families.
inline bool is_magic(const MagicSquare& sq) {
  const std::size_t n = sq.n;
  if (sq.entries.size() != n * n) return false;
  std::vector<bool> seen(n * n + 1, false);
  for (std::int64_t v : sq.entries) {
    if (v < 1 || v > static_cast<std::int64_t>(n * n) || seen[v]) return false;
    seen[v] = true;
  }
  const std::int64_t mu0 = magic_sum(n);
  std::int64_t diag = 0, anti = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::int64_t row = 0, col = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      row += sq.at(i, j);
      col += sq.at(j, i);
    }
    if (row != mu0 || col != mu0) return false;
    diag += sq.at(i, i);
    anti += sq.at(i, n + 1 - i);
  }
  return diag == mu0 && anti == mu0;
}

}  // namespace magicspectra
