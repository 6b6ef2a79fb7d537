#ifndef MOMSYM_LAURENT_SYMBOL_H_
#define MOMSYM_LAURENT_SYMBOL_H_

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "momsym/dense_matrix.h"

namespace momsym {

// Multi-index k = (k_1, ..., k_d); ordered lexicographically.
using MultiIndex = std::vector<int>;

// A d-variate, s x r matrix-valued trigonometric polynomial
//
//   f(theta) = sum_k f_k exp(i <k, theta>),
//
// stored by its finitely many nonzero Fourier coefficients. Exact zero
// coefficients are never stored, so two symbols compare equal iff they have
// the same coefficients.
class LaurentSymbol {
 public:
  using CoefficientMap = std::map<MultiIndex, DenseMatrix>;

  LaurentSymbol(int d, int s, int r);
  LaurentSymbol(int d, int s, int r, CoefficientMap coeffs);

  // Univariate scalar symbol from {k: f_k}.
  static LaurentSymbol Scalar(const std::map<int, Complex>& coeffs);
  // Constant (k = 0 only) symbol of the given matrix.
  static LaurentSymbol Constant(int d, const DenseMatrix& value);
  // Univariate symbol from {k: f_k} with matrix coefficients of equal shape.
  static LaurentSymbol Univariate(const std::map<int, DenseMatrix>& coeffs);

  int d() const noexcept { return d_; }
  int s() const noexcept { return s_; }
  int r() const noexcept { return r_; }
  bool is_scalar() const noexcept { return s_ == 1 && r_ == 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  const CoefficientMap& coefficients() const noexcept { return coeffs_; }
  // Zero matrix for indices outside the support.
  DenseMatrix coefficient(const MultiIndex& k) const;
  Complex scalar_coefficient(int k) const;

  // Adds `value` to the coefficient at k; the entry is removed if it becomes zero.
  void accumulate(const MultiIndex& k, const DenseMatrix& value);

  // Largest |k_i| over the support (0 for the zero symbol).
  int max_degree() const;

  DenseMatrix evaluate(std::span<const double> theta) const;
  Complex evaluate_scalar(double theta) const;

  // Copy with coefficients whose max entry modulus is <= tol removed.
  LaurentSymbol pruned(double tol) const;

  friend bool operator==(const LaurentSymbol&, const LaurentSymbol&) = default;

 private:
  void check_shape(const DenseMatrix& m) const;

  int d_;
  int s_;
  int r_;
  CoefficientMap coeffs_;
};

// Inclusive box lo <= k <= hi of multi-indices.
struct IndexBox {
  MultiIndex lo;
  MultiIndex hi;
};

using SymbolFunction = std::function<DenseMatrix(std::span<const double>)>;

inline constexpr double kCoefficientPruneTol = 1e-13;

// Trapezoid-rule Fourier coefficients of `f` (s x r valued) over `range`.
// Exact for trigonometric polynomials resolved by the grid.
LaurentSymbol fourier_coefficients(const SymbolFunction& f, int d, int s, int r,
                                   const IndexBox& range, int quad_points_per_dim);

LaurentSymbol symbol_add(const LaurentSymbol& a, const LaurentSymbol& b);
LaurentSymbol symbol_sub(const LaurentSymbol& a, const LaurentSymbol& b);
LaurentSymbol symbol_scale(Complex c, const LaurentSymbol& a);
// Coefficient convolution: (ab)_m = sum_k a_k b_{m-k}.
LaurentSymbol symbol_mul(const LaurentSymbol& a, const LaurentSymbol& b);
// f_k -> (f_{-k})^H, i.e. evaluation becomes the conjugate transpose.
LaurentSymbol symbol_hermitian(const LaurentSymbol& a);

// Eigenvalue symbol of a scalar tridiagonal symbol:
// f_0 + 2 sqrt(f_1) sqrt(f_{-1}) cos(theta), principal branches.
LaurentSymbol symmetrize_tridiagonal(const LaurentSymbol& f);

// s x s block version f^[s] of a univariate symbol, with
// (f^[s]_l)_{a,b} = f_{l s + a - b}, so that T_{ns}(f) = T_n(f^[s]).
// Matrix-valued input of shape p x q becomes (p s) x (q s).
LaurentSymbol block_reinterpret(const LaurentSymbol& f, int s_block);

}  // namespace momsym

#endif  // MOMSYM_LAURENT_SYMBOL_H_
