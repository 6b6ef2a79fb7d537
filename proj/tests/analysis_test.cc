#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "momsym/analysis.h"
#include "momsym/errors.h"
#include "momsym/matrices.h"
#include "momsym/worked_examples.h"
#include "test_util.h"

namespace momsym {
namespace {

using std::numbers::pi;
using testing::laplacian;

std::vector<GridSpec> one_grid(GridSpec g) { return {g}; }

TEST(Sampling, GltOnTau00) {
  const Samples s = sample_spectrum_approx(laplacian(), one_grid(GridSpec::Tau(0, 0, 3)));
  ASSERT_TRUE(s.real);
  const auto v = s.real_values();
  EXPECT_NEAR(v[0], 2 - std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v[1], 2.0, 1e-15);
  EXPECT_NEAR(v[2], 2 + std::sqrt(2.0), 1e-15);
  const Spectrum e = eig_hermitian(toeplitz(laplacian(), 3));
  EXPECT_LE(compare(e, s).max_error, 1e-14);
}

TEST(Sampling, MomentaryExample1OnTau01) {
  const std::vector<int> size{3};
  const Samples s = sample_spectrum_approx(examples::example1_momentary_symbol(), one_grid(GridSpec::Tau(0, 1, 3)), size);
  const Spectrum e = eig_hermitian(examples::example1_matrix(3, examples::BoundaryCondition::kDirichletNeumann));
  EXPECT_LE(compare(e, s).max_error, 1e-14);
}

TEST(Sampling, ConstantMomentarySymbol) {
  const MomentarySymbol m({{CoefficientScaling::One(), LaurentSymbol::Scalar({{0, 2.0}})},
                           {CoefficientScaling::InversePower(1, SizeBase::kN), LaurentSymbol::Scalar({{0, 1.0}})}});
  const std::vector<int> size{10};
  for (auto g : {GridSpec::Tau(1, -1, 10), GridSpec::Circulant(10), GridSpec::UniformOpen(10)}) {
    const auto v = sample_spectrum_approx(m, one_grid(g), size).real_values();
    ASSERT_EQ(v.size(), 10u);
    for (double x : v) EXPECT_NEAR(x, 2.1, 1e-15);
  }
}

TEST(Sampling, ComplexSamplesReportedAsComplex) {
  const Samples s = sample_spectrum_approx(LaurentSymbol::Scalar({{1, 1.0}}), one_grid(GridSpec::UniformOpen(3)));
  EXPECT_FALSE(s.real);
  EXPECT_THROW(s.real_values(), ArgumentError);
  EXPECT_THROW(sample_spectrum_approx(laplacian(), std::vector<GridSpec>{}), ArgumentError);
}

TEST(Sampling, TensorMultiplicity) {
  LaurentSymbol f(2, 1, 1);
  f.accumulate({0, 1}, DenseMatrix{{1}});
  f.accumulate({0, -1}, DenseMatrix{{1}});
  const std::vector<GridSpec> g{GridSpec::UniformOpen(3), GridSpec::UniformOpen(2)};
  const auto v = sample_spectrum_approx(f, g).real_values();
  ASSERT_EQ(v.size(), 6u);
  EXPECT_NEAR(v[0], -1.0, 1e-15);
  EXPECT_NEAR(v[2], -1.0, 1e-15);
  EXPECT_NEAR(v[3], 1.0, 1e-15);
}

TEST(Compare, ExamplesAndErrors) {
  Spectrum e;
  e.values = {1, 2, 3};
  Samples s;
  s.values = {3.0, 1.0, 2.0};
  EXPECT_EQ(compare(e, s).max_error, 0.0);
  s.values = {3.0, 1.0};
  EXPECT_THROW(compare(e, s), ArgumentError);
}

TEST(Compare, Example1GltErrors) {
  for (int n : {7, 15}) {
    const double h = 1.0 / (n + 1);
    const Spectrum e = eig_hermitian(examples::example1_matrix(n, examples::BoundaryCondition::kDirichletNeumann));
    const SpectrumReport matched = compare(e, sample_spectrum_approx(laplacian(), one_grid(GridSpec::Tau(0, 1, n))));
    for (double err : matched.per_index_error) EXPECT_NEAR(err, h * h, 1e-12);
    const SpectrumReport mismatched =
        compare(e, sample_spectrum_approx(laplacian(), one_grid(GridSpec::Tau(0, 0, n))));
    EXPECT_GT(mismatched.max_error, h * h * 1.5);
    EXPECT_LE(mismatched.max_error, pi * h + h * h);
  }
}

TEST(Compare, ConvergenceOnTau00) {
  std::mt19937 rng(61);
  const LaurentSymbol f = testing::random_symmetric_symbol(rng, 3);
  double prev = 1e300;
  for (int n : {8, 16, 32, 64}) {
    const double err =
        compare(eig_hermitian(toeplitz(f, n)), sample_spectrum_approx(f, one_grid(GridSpec::Tau(0, 0, n)))).max_error;
    EXPECT_LT(err, prev);
    prev = err;
  }
}

TEST(TauDecomposition, Examples) {
  for (int n : {3, 5, 9}) {
    const double h = 1.0 / n;
    const DenseMatrix x = examples::example2_matrix(n);
    const LaurentSymbol gm = LaurentSymbol::Scalar({{-1, 2 + h}, {0, 1 + (2 + h) * (2 + h)}, {1, 2 + h}});
    EXPECT_TRUE(verify_tau_decomposition(adjoint(x) * x, gm, 0, -1 / (2 + h)).ok);
    EXPECT_FALSE(verify_tau_decomposition(adjoint(x) * x, gm, 0, 0).ok);
    EXPECT_TRUE(verify_tau_decomposition(toeplitz(laplacian(), n), laplacian(), 0, 0).ok);
  }
  std::mt19937 rng(62);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentSymbol f = LaurentSymbol::Scalar({{-1, u(rng)}, {0, 4 * u(rng)}});
    const LaurentSymbol sym = symbol_add(f, symbol_hermitian(f));
    const double e = u(rng), p = u(rng);
    EXPECT_TRUE(verify_tau_decomposition(tau_matrix(sym, e, p, 7), sym, e, p).ok);
  }
  EXPECT_THROW(verify_tau_decomposition(DenseMatrix(2, 3), laplacian(), 0, 0), ArgumentError);
}

TEST(Interlacing, TwoCosN6MatchesOracle) {
  // numpy oracle: descending eigvalsh of T_6(2cos) with phi in {-1, -1/2, 0}
  const std::vector<double> lower{1.7709120513064198,  1.136129493462312,   0.24107336051064593,
                                  -0.7092097740850712, -1.4970214963422022, -1.9418836348521047};
  const std::vector<double> middle{1.7821920561967062,  1.1782616134779769,  0.32504796803167596,
                                   -0.5859526016964179, -1.356939805534493,  -1.8426092304754476};
  const std::vector<double> upper{1.8019377358048396,  1.2469796037174667,  0.4450418679126283,
                                  -0.4450418679126287, -1.2469796037174672, -1.8019377358048383};
  const InterlacingReport r = interlacing_check(LaurentSymbol::Scalar({{-1, 1.0}, {1, 1.0}}), 6);
  for (int j = 0; j < 6; ++j) {
    EXPECT_NEAR(r.lower[j], lower[j], 1e-13);
    EXPECT_NEAR(r.middle[j], middle[j], 1e-13);
    EXPECT_NEAR(r.upper[j], upper[j], 1e-13);
  }
  EXPECT_TRUE(r.stated_holds);
  EXPECT_EQ(r.stated_bound.size(), 4u);
}

TEST(Interlacing, SmallestSizeAndPreconditions) {
  const InterlacingReport r = interlacing_check(LaurentSymbol::Scalar({{-1, 1.0}, {1, 1.0}}), 4);
  EXPECT_TRUE(r.stated_holds);
  EXPECT_EQ(r.stated_bound.size(), 2u);
  EXPECT_THROW(interlacing_check(LaurentSymbol::Scalar({{-1, -1.0}, {0, 4.0}, {1, -1.0}}), 6), ArgumentError);
  EXPECT_THROW(interlacing_check(LaurentSymbol::Scalar({{-1, 1.0}, {1, 1.0}}), 3), ArgumentError);
  EXPECT_THROW(interlacing_check(LaurentSymbol::Scalar({{-2, 1.0}, {2, 1.0}}), 6), ArgumentError);
}

TEST(Interlacing, ProofBoundIsStrongerAndFails) {
  // lambda_j(T_{0,-1/2}) <= lambda_{j+1}(T_{0,0}) contradicts the descending
  // order; it is reported, never assumed.
  const InterlacingReport r = interlacing_check(LaurentSymbol::Scalar({{-1, 1.0}, {1, 1.0}}), 8);
  EXPECT_FALSE(r.proof_holds);
}

TEST(ZeroDistribution, Examples) {
  const std::vector<int> sizes{4, 8, 16};
  const auto corner = zero_distribution_stats(
      [](int n) {
        DenseMatrix r(n, n);
        r(n - 1, n - 1) = -1;
        return r;
      },
      sizes);
  for (const auto& s : corner) EXPECT_DOUBLE_EQ(s.rank_ratio, 1.0 / s.size);
  const auto small = zero_distribution_stats(
      [](int n) {
        const double h = 1.0 / (n + 1);
        return Complex(h * h) * DenseMatrix::Identity(n);
      },
      sizes);
  for (const auto& s : small) EXPECT_NEAR(s.trace_norm_ratio, 1.0 / ((s.size + 1.0) * (s.size + 1.0)), 1e-15);
  const auto zero = zero_distribution_stats([](int n) { return DenseMatrix(n, n); }, sizes);
  for (const auto& s : zero) {
    EXPECT_EQ(s.rank_ratio, 0.0);
    EXPECT_EQ(s.trace_norm_ratio, 0.0);
  }
}

}  // namespace
}  // namespace momsym
