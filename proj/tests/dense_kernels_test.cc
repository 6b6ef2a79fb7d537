#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "momsym/dense_matrix.h"
#include "momsym/errors.h"
#include "momsym/kernels.h"
#include "momsym/laurent_symbol.h"
#include "momsym/matrices.h"
#include "test_util.h"

namespace momsym {
namespace {

using testing::random_matrix;

TEST(DenseMatrix, LiteralAndIdentity) {
  const DenseMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a(1, 0), Complex(3));
  EXPECT_EQ(DenseMatrix::Identity(3)(2, 2), Complex(1));
  EXPECT_EQ(DenseMatrix::Identity(3)(0, 2), Complex(0));
  EXPECT_THROW((DenseMatrix{{1, 2}, {3}}), ArgumentError);
}

TEST(DenseMatrix, ArithmeticAndNorms) {
  const DenseMatrix a{{1, Complex(0, 2)}, {3, 4}};
  const DenseMatrix ah = adjoint(a);
  EXPECT_EQ(ah(1, 0), Complex(0, -2));
  EXPECT_EQ(transpose(a)(1, 0), Complex(0, 2));
  EXPECT_EQ(trace(a), Complex(5));
  EXPECT_DOUBLE_EQ(max_abs(a), 4.0);
  EXPECT_DOUBLE_EQ(frobenius_norm(a), std::sqrt(30.0));
  EXPECT_DOUBLE_EQ(max_abs_offdiag(a), 3.0);
  EXPECT_TRUE(is_hermitian(a * ah, 1e-14));
  EXPECT_FALSE(is_real(a));
  EXPECT_TRUE(is_real(DenseMatrix{{1, 2}}));
  EXPECT_EQ((a - a), DenseMatrix(2, 2));
  EXPECT_EQ(max_abs_diff(2.0 * a, a + a), 0.0);
}

TEST(DenseMatrix, ShapeErrors) {
  const DenseMatrix a(2, 3), b(2, 2);
  EXPECT_THROW(a * a, ArgumentError);
  EXPECT_THROW(a + b, ArgumentError);
}

TEST(DenseMatrix, FiniteCheck) {
  DenseMatrix a(1, 1);
  EXPECT_TRUE(all_finite(a));
  a(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(all_finite(a));
}

TEST(Kernels, MatmulMatchesSerialBitwise) {
  std::mt19937 rng(11);
  for (auto [m, k, n] : {std::tuple{1, 1, 1}, {7, 5, 3}, {33, 17, 65}, {128, 64, 96}}) {
    const auto a = random_matrix(rng, m, k), b = random_matrix(rng, k, n);
    EXPECT_EQ(kernels::matmul(a, b), kernels::serial::matmul(a, b));
  }
}

TEST(Kernels, KronMatchesSerialBitwise) {
  std::mt19937 rng(12);
  const auto a = random_matrix(rng, 5, 3), b = random_matrix(rng, 4, 7);
  EXPECT_EQ(kernels::kron(a, b), kernels::serial::kron(a, b));
}

TEST(Kernels, AssemblyMatchesKroneckerDefinition) {
  std::mt19937 rng(13);
  LaurentSymbol f(2, 2, 3);
  for (int k1 = -1; k1 <= 1; ++k1)
    for (int k2 = -2; k2 <= 1; ++k2) f.accumulate({k1, k2}, random_matrix(rng, 2, 3));
  const std::vector<int> n{3, 4}, m{2, 5};
  EXPECT_EQ(kernels::assemble_multilevel_toeplitz(f, n, m), kernels::serial::assemble_multilevel_toeplitz(f, n, m));
  EXPECT_EQ(kernels::assemble_multilevel_toeplitz(f, n, n), kernels::serial::assemble_multilevel_toeplitz(f, n, n));
}

TEST(Kernels, SampleSymbolMatchesSerialBitwise) {
  std::mt19937 rng(14);
  LaurentSymbol f(2, 2, 2);
  for (int k = -2; k <= 2; ++k) f.accumulate({k, -k}, random_matrix(rng, 2, 2));
  std::vector<double> pts;
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < 2 * 300; ++i) pts.push_back(u(rng));
  const auto a = kernels::sample_symbol(f, pts), b = kernels::serial::sample_symbol(f, pts);
  ASSERT_EQ(a.size(), 300u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Kernels, QuadratureMeanMatchesSerialBitwise) {
  std::vector<std::vector<double>> axes(2), weights(2);
  for (int d = 0; d < 2; ++d)
    for (int i = 0; i < 64; ++i) {
      axes[d].push_back(-std::numbers::pi + 2 * std::numbers::pi * i / 64);
      weights[d].push_back(1.0 / 64);
    }
  auto g = [](std::span<const double> t) { return std::cos(t[0]) * std::cos(t[0]) + std::sin(3 * t[1]); };
  const double a = kernels::tensor_quadrature_mean(g, axes, weights);
  EXPECT_EQ(a, kernels::serial::tensor_quadrature_mean(g, axes, weights));
  EXPECT_NEAR(a, 0.5, 1e-14);
}

TEST(Kernels, KronMixedProduct) {
  std::mt19937 rng(15);
  const auto a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
  const auto c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 4);
  EXPECT_LE(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-13);
}

}  // namespace
}  // namespace momsym
