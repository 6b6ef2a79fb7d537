#ifndef MOMSYM_SPECTRA_H_
#define MOMSYM_SPECTRA_H_

#include <string>
#include <vector>

#include "momsym/dense_matrix.h"
#include "momsym/laurent_symbol.h"

namespace momsym {

enum class SpectrumKind { kHermitianEig, kSingular, kGeneralEig };

std::string to_string(SpectrumKind kind);

// Hermitian eigenvalues and singular values live in `values` (ascending);
// general eigenvalues in `complex_values`, sorted by (real, imag).
struct Spectrum {
  SpectrumKind kind = SpectrumKind::kHermitianEig;
  std::vector<double> values;
  std::vector<Complex> complex_values;

  std::size_t size() const {
    return kind == SpectrumKind::kGeneralEig ? complex_values.size() : values.size();
  }
  // Values as complex numbers regardless of kind.
  std::vector<Complex> as_complex() const;
};

struct HermitianEigenDecomposition {
  Spectrum spectrum;
  DenseMatrix vectors;  // columns match spectrum.values
};

inline constexpr double kHermitianInputTol = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi. Real symmetric input runs on real arithmetic.
Spectrum eig_hermitian(const DenseMatrix& a);
HermitianEigenDecomposition eig_hermitian_vectors(const DenseMatrix& a);

inline constexpr std::size_t kGeneralEigMaxOrder = 64;

// Complex eigenvalues of a small square matrix. The sparsity pattern is first
// split into strongly connected components (an exact block-triangular
// reduction), then each irreducible block goes through Hessenberg reduction
// and shifted QR; order-2 blocks use the quadratic formula.
Spectrum eig_general_small(const DenseMatrix& a);

// Ascending singular values through the smaller Gram matrix.
Spectrum singular_values(const DenseMatrix& a);

// s_n(f)(theta) = sum_{|k| < n} f_k e^{ik theta}.
Complex fourier_sum(const LaurentSymbol& f, int n, double theta);

// Test functions F for the distribution limit.
struct TestFunction {
  enum class Kind { kAbsPower, kChebyshev };
  Kind kind = Kind::kAbsPower;
  int order = 1;  // p for |x|^p, k for T_k(x)

  double operator()(double x) const;
  std::string id() const;  // "abs_power_2", "chebyshev_1"
};

// Parses "abs_power_<p>" or "chebyshev_<k>".
TestFunction parse_test_function(const std::string& id);

struct DistributionReport {
  std::string test_function_id;
  double discrete_mean = 0.0;
  double integral_mean = 0.0;
  double gap = 0.0;
  double domain_measure = 0.0;
};

// Box [lo_i, hi_i] subset of [-pi, pi]^d; empty means the full torus.
struct AngleBox {
  std::vector<double> lo;
  std::vector<double> hi;
};

inline constexpr int kDefaultQuadPoints = 512;

// Compares (1/d_n) sum F(value_j) with (1/mu(G)) int_G F(|f|) (singular) or
// F(f) (Hermitian). Matrix-valued symbols contribute the mean of F over their
// s pointwise singular values or eigenvalues.
DistributionReport distribution_test(const Spectrum& spectrum, const LaurentSymbol& f,
                                     const AngleBox& domain, const TestFunction& test,
                                     int quad_points_per_dim = kDefaultQuadPoints);

}  // namespace momsym

#endif  // MOMSYM_SPECTRA_H_
