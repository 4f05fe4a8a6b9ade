#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "magicspectra/circulant.hpp"
#include "magicspectra/decompose.hpp"
#include "magicspectra/dft.hpp"
#include "magicspectra/eigen.hpp"

using namespace magicspectra;

namespace {

std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

// independent oracle: eigenvalue j of a circulant straight from the DFT sum
Complex dft_sum(const std::vector<double>& row, std::size_t j) {
  const std::size_t n = row.size();
  Complex s{};
  for (std::size_t k = 0; k < n; ++k)
    s += row[k] * std::polar(1.0, -2.0 * std::numbers::pi *
                                      static_cast<double>((k * j) % n) /
                                      static_cast<double>(n));
  return s;
}

}  // namespace

TEST(Circulant, IdentityCirculant) {
  CirculantMatrix c{4, {1, 0, 0, 0}};
  EXPECT_EQ(c.realize(), DenseMatrix::identity(4));
  const Spectrum s = circulant_spectrum(c);
  for (const auto& v : s.values)
    EXPECT_NEAR(std::abs(v - Complex(1, 0)), 0.0, 1e-14);
}

TEST(Circulant, CycleSpectrumIsRootsOfUnity) {
  CirculantMatrix c{4, {0, 1, 0, 0}};
  const Spectrum s = circulant_spectrum(c);
  // mode order: 1, -i, -1, i
  EXPECT_NEAR(std::abs(s.values[0] - Complex(1, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.values[1] - Complex(0, -1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.values[2] - Complex(-1, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.values[3] - Complex(0, 1)), 0.0, 1e-14);
}

TEST(Circulant, XnFirstRowSpectrumAgainstDftOracle) {
  // n = 5, first row (2, 3, 4, 0, 1): lambda_0 = 10,
  // lambda_1 = -i (5/2) csc(pi/5), lambda_2 = +i (5/2) csc(2 pi/5)
  const std::vector<double> a = xn_first_row(5);
  EXPECT_EQ(a, (std::vector<double>{2, 3, 4, 0, 1}));
  const Spectrum s = circulant_spectrum(CirculantMatrix{5, a});
  EXPECT_NEAR(std::abs(s.values[0] - Complex(10, 0)), 0.0, 1e-12);
  const double csc1 = 1.0 / std::sin(std::numbers::pi / 5.0);
  const double csc2 = 1.0 / std::sin(2.0 * std::numbers::pi / 5.0);
  EXPECT_NEAR(std::abs(s.values[1] - Complex(0, -2.5 * csc1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.values[2] - Complex(0, 2.5 * csc2)), 0.0, 1e-12);
  for (std::size_t j = 0; j < 5; ++j)
    EXPECT_NEAR(std::abs(s.values[j] - dft_sum(a, j)), 0.0, 1e-12);
}

TEST(Circulant, ClosedFormMatchesDftSumForOddOrders) {
  for (std::size_t n = 3; n <= 31; n += 2) {
    const Spectrum closed = xn_closed_form_spectrum(n);
    const Spectrum direct = circulant_spectrum(CirculantMatrix{n, xn_first_row(n)});
    for (std::size_t j = 0; j < n; ++j)
      EXPECT_NEAR(std::abs(closed.values[j] - direct.values[j]), 0.0,
                  1e-12 * std::max(1.0, std::abs(closed.values[j])))
          << "n=" << n << " j=" << j;
  }
}

TEST(Circulant, ClosedFormRejectsEvenOrders) {
  EXPECT_THROW(xn_closed_form_spectrum(4), ParityError);
}

TEST(Circulant, DiagonalizationIdentity) {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (std::size_t n : {3, 5, 8, 12, 16}) {
    std::vector<double> row(n);
    for (auto& v : row) v = dist(rng);
    const CirculantMatrix c{n, row};
    const Spectrum s = circulant_spectrum(c);
    const ComplexMatrix f = dft_matrix(n);
    ComplexMatrix lambda(n, n);
    for (std::size_t j = 0; j < n; ++j) lambda(j, j) = s.values[j];
    const ComplexMatrix rebuilt = f * lambda * conjugate_transpose(f);
    const DenseMatrix dense = c.realize();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_NEAR(std::abs(rebuilt(i, j) / static_cast<double>(n) -
                             Complex(dense(i, j), 0)),
                    0.0, 1e-10)
            << "n=" << n;
  }
}

TEST(Circulant, SpectrumMatchesDenseEigensolver) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (std::size_t n : {3, 5, 7, 12}) {
    std::vector<double> row(n);
    for (auto& v : row) v = dist(rng);
    const CirculantMatrix c{n, row};
    const auto closed = sorted(circulant_spectrum(c).values);
    const auto numeric = sorted(eigen_decompose(c.realize()).values);
    const double scale = 1.0 + std::abs(closed.back());
    for (std::size_t j = 0; j < n; ++j)
      EXPECT_NEAR(std::abs(closed[j] - numeric[j]), 0.0, 1e-9 * scale) << "n=" << n;
  }
}

TEST(GRowCirculant, StrideOneIsPlainCirculant) {
  const std::vector<double> row = {1, 2, 3, 4, 5};
  EXPECT_EQ((GRowCirculant{5, 1, row}.realize()), (CirculantMatrix{5, row}.realize()));
}

TEST(GRowCirculant, PaperY5Realization) {
  // second summand of the reconstructed 5x5 square
  const GRowCirculant y{5, 3, {1, 3, 5, 2, 4}};
  const std::vector<std::vector<double>> expect = {{1, 3, 5, 2, 4},
                                                   {5, 2, 4, 1, 3},
                                                   {4, 1, 3, 5, 2},
                                                   {3, 5, 2, 4, 1},
                                                   {2, 4, 1, 3, 5}};
  const DenseMatrix d = y.realize();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(d(i, j), expect[i][j]);
}

TEST(GRowCirculant, ShiftRelationOnRandomRows) {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> dist(-1, 1);
  const std::size_t n = 7, g = 4;
  std::vector<double> row(n);
  for (auto& v : row) v = dist(rng);
  const DenseMatrix d = GRowCirculant{n, g, row}.realize();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        EXPECT_EQ(d(i, j), d((i + k) % n, (j + g * k) % n));
}

TEST(GRowCirculant, NonCoprimeStrideRejected) {
  EXPECT_THROW((GRowCirculant{6, 3, {1, 2, 3, 4, 5, 6}}.realize()),
               InvalidStrideError);
}

TEST(GRowCirculant, EqualsPermutationTimesCirculant) {
  const std::size_t n = 7, g = 3;
  std::vector<double> row = {2, -1, 4, 0, 3, 5, -2};
  std::vector<double> e1(n, 0.0);
  e1[0] = 1.0;
  const DenseMatrix pg = GRowCirculant{n, g, e1}.realize();
  const DenseMatrix c = CirculantMatrix{n, row}.realize();
  EXPECT_EQ((GRowCirculant{n, g, row}.realize()), pg * c);
}

TEST(ReverseCirculant, IdentityCirculantGivesReflectionSpectrum) {
  const auto pairs = reverse_circulant_eigenpairs(CirculantMatrix{3, {1, 0, 0}});
  ASSERT_EQ(pairs.size(), 3u);
  std::vector<double> values;
  for (const auto& p : pairs) values.push_back(p.value);
  std::sort(values.begin(), values.end());
  EXPECT_NEAR(values[0], -1.0, 1e-14);
  EXPECT_NEAR(values[1], 1.0, 1e-14);
  EXPECT_NEAR(values[2], 1.0, 1e-14);
}

TEST(ReverseCirculant, S5ValuesMatchClosedForm) {
  const OddDecomposition d = odd_decompose(5);
  const auto pairs = reverse_circulant_eigenpairs(d.S);
  std::vector<double> values;
  for (const auto& p : pairs) values.push_back(p.value);
  std::sort(values.begin(), values.end());
  const double l1 = 25.0 / (2.0 * std::sin(std::numbers::pi / 5.0));
  const double l2 = 25.0 / (2.0 * std::sin(2.0 * std::numbers::pi / 5.0));
  const std::vector<double> expect = {-l1, -l2, l2, l1, 65.0};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(values[i], expect[i], 1e-10);
}

TEST(ReverseCirculant, ResidualsAndOrthonormality) {
  for (std::size_t n : {3, 5, 9, 13}) {
    const OddDecomposition d = odd_decompose(n);
    const DenseMatrix js = DenseMatrix::reverse_identity(n) * d.S.realize();
    const auto pairs = reverse_circulant_eigenpairs(d.S);
    ASSERT_EQ(pairs.size(), n);
    for (const auto& p : pairs) {
      std::vector<Complex> r(n, Complex{});
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r[i] += js(i, j) * p.vector[j];
        r[i] -= p.value * p.vector[i];
      }
      EXPECT_LE(norm2(r), 1e-10 * std::abs(p.value)) << "n=" << n << " j=" << p.j;
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        EXPECT_LE(std::abs(inner(pairs[a].vector, pairs[b].vector)), 1e-10)
            << "n=" << n;
  }
}

TEST(ReverseCirculant, ValuesMatchDenseEigensolver) {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> dist(1, 9);
  for (std::size_t n : {3, 5, 7, 11}) {
    std::vector<double> row(n);
    for (auto& v : row) v = dist(rng);
    const CirculantMatrix c{n, row};
    std::vector<Complex> closed;
    try {
      for (const auto& p : reverse_circulant_eigenpairs(c))
        closed.push_back(Complex(p.value, 0));
    } catch (const DegenerateSpectrumError&) {
      continue;  // random row produced a vanishing mode
    }
    const DenseMatrix jc = DenseMatrix::reverse_identity(n) * c.realize();
    const auto numeric = sorted(eigen_decompose(jc).values);
    const auto expect = sorted(std::move(closed));
    const double scale = 1.0 + std::abs(expect.back());
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_NEAR(std::abs(expect[i] - numeric[i]), 0.0, 1e-9 * scale);
  }
}

TEST(ReverseCirculant, VanishingModeRaisesDegenerateError) {
  // n = 4, first row (1, 0, 1, 0): lambda_1 = 1 + w^2 = 0
  try {
    reverse_circulant_eigenpairs(CirculantMatrix{4, {1, 0, 1, 0}});
    FAIL() << "expected DegenerateSpectrumError";
  } catch (const DegenerateSpectrumError& e) {
    EXPECT_EQ(e.mode_index, 1u);
  }
}
