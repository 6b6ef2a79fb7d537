#ifndef MOMSYM_KERNELS_H_
#define MOMSYM_KERNELS_H_

// Data-parallel inner loops used across the library. Every kernel has an
// OpenMP version (namespace kernels) and a plain serial reference
// (namespace kernels::serial) kept for testing and benchmarking. Both produce
// bitwise-identical results: parallel loops only partition independent output
// rows, and reductions are summed serially over a per-point buffer.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "momsym/dense_matrix.h"

namespace momsym {

class LaurentSymbol;

namespace kernels {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

// Direct block assembly of sum_k T_{n_1 x m_1}(e^{ik_1t}) (x) ... (x) f_k.
DenseMatrix assemble_multilevel_toeplitz(const LaurentSymbol& f, std::span<const int> n,
                                         std::span<const int> m);

// Evaluates f at every point; points are stored point-major (d angles each).
std::vector<DenseMatrix> sample_symbol(const LaurentSymbol& f, std::span<const double> points);

// Mean of g over a tensor grid: axes[i] holds the nodes of variable i and
// weights[i] their (normalized) quadrature weights.
double tensor_quadrature_mean(const std::function<double(std::span<const double>)>& g,
                              const std::vector<std::vector<double>>& axes,
                              const std::vector<std::vector<double>>& weights);

namespace serial {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
// Literal Kronecker-sum definition; slow, used as the oracle for the direct assembly.
DenseMatrix assemble_multilevel_toeplitz(const LaurentSymbol& f, std::span<const int> n,
                                         std::span<const int> m);
std::vector<DenseMatrix> sample_symbol(const LaurentSymbol& f, std::span<const double> points);
double tensor_quadrature_mean(const std::function<double(std::span<const double>)>& g,
                              const std::vector<std::vector<double>>& axes,
                              const std::vector<std::vector<double>>& weights);

}  // namespace serial
}  // namespace kernels
}  // namespace momsym

#endif  // MOMSYM_KERNELS_H_
