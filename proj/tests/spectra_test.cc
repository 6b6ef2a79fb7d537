#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "momsym/errors.h"
#include "momsym/grids.h"
#include "momsym/matrices.h"
#include "momsym/spectra.h"
#include "test_util.h"

namespace momsym {
namespace {

using std::numbers::pi;
using testing::laplacian;

TEST(EigHermitian, Examples) {
  const Spectrum s = eig_hermitian(DenseMatrix{{2, -1}, {-1, 2}});
  EXPECT_EQ(s.kind, SpectrumKind::kHermitianEig);
  EXPECT_NEAR(s.values[0], 1.0, 1e-15);
  EXPECT_NEAR(s.values[1], 3.0, 1e-15);
  for (double v : eig_hermitian(DenseMatrix::Identity(6)).values) EXPECT_EQ(v, 1.0);
}

TEST(EigHermitian, TauMatrixMatchesCharpolyRoots) {
  // numpy oracle: roots of the characteristic polynomial of T_4(2 - 2cos)
  const std::vector<double> oracle{0.3819660112501055, 1.3819660112501015, 2.6180339887499016, 3.6180339887498905};
  const Spectrum s = eig_hermitian(tau_matrix(laplacian(), 0, 0, 4));
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(s.values[j], oracle[j], 1e-13);
    EXPECT_NEAR(s.values[j], 2 - 2 * std::cos((j + 1) * pi / 5), 1e-14);
  }
}

TEST(EigHermitian, RejectsNonHermitian) {
  EXPECT_THROW(eig_hermitian(DenseMatrix{{1, 2}, {0, 1}}), ArgumentError);
  EXPECT_THROW(eig_hermitian(DenseMatrix(2, 3)), ArgumentError);
}

TEST(EigHermitian, TraceAndResidualProperties) {
  std::mt19937 rng(51);
  for (int n : {1, 2, 5, 17, 40}) {
    for (bool complex : {false, true}) {
      const DenseMatrix a = testing::random_hermitian(rng, n, complex);
      const auto dec = eig_hermitian_vectors(a);
      double sum = 0;
      for (int j = 0; j < n; ++j) {
        sum += dec.spectrum.values[j];
        if (j) {
          EXPECT_LE(dec.spectrum.values[j - 1], dec.spectrum.values[j]);
        }
      }
      EXPECT_NEAR(sum, trace(a).real(), 1e-10 * frobenius_norm(a));
      const auto& v = dec.vectors;
      DenseMatrix lam = diagonal_matrix(std::span<const double>(dec.spectrum.values));
      EXPECT_LE(max_abs_diff(a * v, v * lam), 1e-9 * frobenius_norm(a));
      EXPECT_LE(max_abs_diff(adjoint(v) * v, DenseMatrix::Identity(n)), 1e-12);
    }
  }
}

TEST(EigGeneral, Examples) {
  const Spectrum s = eig_general_small(DenseMatrix{{2, 0}, {1, 2}});
  EXPECT_EQ(s.kind, SpectrumKind::kGeneralEig);
  for (const auto& z : s.complex_values) EXPECT_NEAR(std::abs(z - 2.0), 0.0, 1e-15);
  const Spectrum d = eig_general_small(DenseMatrix{{3, 0, 0}, {0, -1, 0}, {0, 0, Complex(0, 2)}});
  EXPECT_EQ(d.complex_values, (std::vector<Complex>{-1.0, Complex(0, 2), 3.0}));
  EXPECT_THROW(eig_general_small(DenseMatrix(65, 65)), ArgumentError);
}

TEST(EigGeneral, TwoByTwoSymbolSample) {
  const int N = 2, n = 4;
  const double c = N / (12.0 * n * n) * (2 + std::cos(pi));
  const Complex r27(0, std::sqrt(27.0));
  const DenseMatrix a{{3 * (1 - std::cos(pi)) + 9 * c, r27 * c}, {r27 * c, 1 - std::cos(pi) + 5 * c}};
  const Spectrum s = eig_general_small(a);
  const Complex tr = a(0, 0) + a(1, 1), det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  std::vector<Complex> want{(tr - disc) / 2.0, (tr + disc) / 2.0};
  std::sort(want.begin(), want.end(), [](Complex x, Complex y) { return x.real() < y.real(); });
  for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(s.complex_values[j] - want[j]), 0.0, 1e-14);
}

TEST(EigGeneral, RandomMatricesSatisfyTraceAndDeterminantClosure) {
  std::mt19937 rng(52);
  for (int n : {3, 6, 12, 30, 64}) {
    const DenseMatrix a = testing::random_matrix(rng, n, n);
    const Spectrum s = eig_general_small(a);
    Complex sum = 0;
    for (const auto& z : s.complex_values) sum += z;
    EXPECT_NEAR(std::abs(sum - trace(a)), 0.0, 1e-10 * n);
    // each eigenvalue makes a - z I singular: the Gram matrix has a
    // near-zero eigenvalue (squared singular value, so rounding is ~eps ||a||^2)
    const double scale = frobenius_norm(a) * frobenius_norm(a);
    for (const auto& z : s.complex_values) {
      const DenseMatrix b = a - z * DenseMatrix::Identity(n);
      EXPECT_LE(eig_hermitian(adjoint(b) * b).values.front(), 1e-13 * n * scale);
    }
  }
}

TEST(EigGeneral, DefectiveBlockTriangular) {
  // Jordan block: handled exactly by the component reduction.
  const DenseMatrix j{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  for (const auto& z : eig_general_small(j).complex_values) EXPECT_EQ(z, Complex(1));
}

TEST(SingularValues, Examples) {
  for (double v : singular_values(identity_rect(3, 2)).values) EXPECT_NEAR(v, 1.0, 1e-15);
  for (double v : singular_values(DenseMatrix(3, 4)).values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(singular_values(identity_rect(3, 2)).values.size(), 2u);

  // numpy oracle: svd of X_4 from the bidiagonal example
  const std::vector<double> oracle{1.4969495777871527, 2.0699651004954713, 2.6703618294693974, 3.0973463067610782};
  const double h = 0.25;
  const DenseMatrix x = toeplitz(LaurentSymbol::Scalar({{0, 2 + h}, {1, 1.0}}), 4);
  const Spectrum s = singular_values(x);
  const LaurentSymbol gm = LaurentSymbol::Scalar({{-1, 2 + h}, {0, 1 + (2 + h) * (2 + h)}, {1, 2 + h}});
  const Spectrum g = eig_hermitian(tau_matrix(gm, 0, -1 / (2 + h), 4));
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(s.values[j], oracle[j], 1e-13);
    EXPECT_NEAR(s.values[j], std::sqrt(g.values[j]), 1e-13);
  }
}

TEST(SingularValues, SquaresMatchGramEigenvalues) {
  std::mt19937 rng(53);
  for (auto [m, n] : {std::pair{4, 7}, {9, 3}, {6, 6}}) {
    const DenseMatrix a = testing::random_matrix(rng, m, n);
    const Spectrum s = singular_values(a);
    const Spectrum g = eig_hermitian(adjoint(a) * a);
    const int k = std::min(m, n);
    ASSERT_EQ(static_cast<int>(s.values.size()), k);
    for (int j = 0; j < k; ++j)
      EXPECT_NEAR(s.values[j] * s.values[j], g.values[n - k + j], 1e-10 * std::max(1.0, g.values.back()));
  }
}

TEST(FourierSum, Examples) {
  EXPECT_NEAR(std::abs(fourier_sum(laplacian(), 3, pi) - 4.0), 0.0, 1e-15);
  const LaurentSymbol f = LaurentSymbol::Scalar({{-3, 5.0}, {0, 1.0}, {3, 5.0}});
  EXPECT_NEAR(std::abs(fourier_sum(f, 3, 0.7) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fourier_sum(f, 4, 0.7) - f.evaluate_scalar(0.7)), 0.0, 1e-14);
}

TEST(FourierSum, CirculantEigenvalues) {
  // numpy oracle: eigvalsh(circulant(2 - 2cos, 5))
  const std::vector<double> oracle{8.326672684688532e-17, 1.381966011250105, 1.381966011250105, 3.6180339887498936,
                                   3.618033988749894};
  const Spectrum s = eig_hermitian(circulant(laplacian(), 5));
  for (int j = 0; j < 5; ++j) EXPECT_NEAR(s.values[j], oracle[j], 1e-13);

  std::mt19937 rng(54);
  for (int n = 4; n <= 12; ++n) {
    const LaurentSymbol f = testing::random_symmetric_symbol(rng, 3);
    const Spectrum e = eig_hermitian(circulant(f, n));
    std::vector<double> samples;
    for (double t : circulant_grid(n)) samples.push_back(fourier_sum(f, n, t).real());
    std::sort(samples.begin(), samples.end());
    for (int j = 0; j < n; ++j) EXPECT_NEAR(e.values[j], samples[j], 1e-11);
  }
}

TEST(TestFunctions, ParseAndEvaluate) {
  EXPECT_EQ(parse_test_function("abs_power_2")(-3.0), 9.0);
  EXPECT_EQ(parse_test_function("chebyshev_2")(0.5), -0.5);
  EXPECT_EQ(parse_test_function("chebyshev_3").id(), "chebyshev_3");
  EXPECT_THROW(parse_test_function("exp"), ParseError);
  EXPECT_THROW(parse_test_function("abs_power_x"), ParseError);
}

TEST(Distribution, TraceIdentityAndDecay) {
  const TestFunction id{TestFunction::Kind::kAbsPower, 1}, sq{TestFunction::Kind::kAbsPower, 2};
  double prev = 1e300;
  for (int n : {8, 16, 32, 64}) {
    const Spectrum s = eig_hermitian(toeplitz(laplacian(), n));
    const auto r1 = distribution_test(s, laplacian(), {}, id);
    EXPECT_NEAR(r1.discrete_mean, 2.0, 1e-12);
    EXPECT_NEAR(r1.gap, 0.0, 1e-12);
    const auto r2 = distribution_test(s, laplacian(), {}, sq);
    EXPECT_LT(r2.gap, prev);
    EXPECT_NEAR(r2.integral_mean, 6.0, 1e-12);
    prev = r2.gap;
  }
}

TEST(Distribution, SingularAndBoxDomains) {
  const Spectrum s = singular_values(toeplitz(LaurentSymbol::Scalar({{0, 2.0}, {1, 1.0}}), 32));
  const auto r = distribution_test(s, LaurentSymbol::Scalar({{0, 2.0}, {1, 1.0}}), {},
                                   TestFunction{TestFunction::Kind::kAbsPower, 2});
  EXPECT_NEAR(r.integral_mean, 5.0, 1e-12);
  EXPECT_NEAR(r.domain_measure, 2 * pi, 1e-14);
  const AngleBox box{{0.0}, {pi}};
  const auto b = distribution_test(eig_hermitian(toeplitz(laplacian(), 8)), laplacian(), box,
                                   TestFunction{TestFunction::Kind::kAbsPower, 1});
  EXPECT_NEAR(b.integral_mean, 2.0, 1e-10);
  EXPECT_NEAR(b.domain_measure, pi, 1e-14);
  EXPECT_THROW(distribution_test(eig_general_small(DenseMatrix{{1}}), laplacian(), {},
                                 TestFunction{TestFunction::Kind::kAbsPower, 1}),
               ArgumentError);
}

TEST(Distribution, ZeroDistributedCorner) {
  for (int n : {8, 16, 32}) {
    DenseMatrix r(n, n);
    r(0, n - 1) = 1;
    const auto rep = distribution_test(singular_values(r), LaurentSymbol(1, 1, 1), {},
                                       TestFunction{TestFunction::Kind::kAbsPower, 1});
    EXPECT_NEAR(rep.discrete_mean, 1.0 / n, 1e-15);
    EXPECT_EQ(rep.integral_mean, 0.0);
  }
}

}  // namespace
}  // namespace momsym
