#include "momsym/matrices.h"

#include <cmath>
#include <string>
#include <vector>

#include "momsym/errors.h"
#include "momsym/kernels.h"

namespace momsym {

namespace {

void require_univariate(const LaurentSymbol& f, const char* op) {
  if (f.d() != 1) throw ArgumentError(std::string(op) + ": symbol must be univariate");
}

void require_scalar(const LaurentSymbol& f, const char* op) {
  require_univariate(f, op);
  if (!f.is_scalar()) throw ArgumentError(std::string(op) + ": symbol must be scalar-valued");
}

void require_positive(int n, const char* op) {
  if (n <= 0) throw ArgumentError(std::string(op) + ": size must be positive, got " + std::to_string(n));
}

}  // namespace

DenseMatrix toeplitz(const LaurentSymbol& f, int n) {
  require_univariate(f, "toeplitz");
  require_positive(n, "toeplitz");
  if (f.s() != f.r()) throw ArgumentError("toeplitz: symbol must be square-matrix valued");
  const int sizes[1] = {n};
  return kernels::assemble_multilevel_toeplitz(f, sizes, sizes);
}

DenseMatrix multilevel_toeplitz(const LaurentSymbol& f, std::span<const int> n) {
  if (f.s() != f.r()) throw ArgumentError("multilevel_toeplitz: symbol must be square-matrix valued");
  return kernels::assemble_multilevel_toeplitz(f, n, n);
}

DenseMatrix circulant(const LaurentSymbol& f, int n) {
  require_scalar(f, "circulant");
  require_positive(n, "circulant");
  if (f.max_degree() > n - 1)
    throw ArgumentError("circulant: support degree " + std::to_string(f.max_degree()) +
                        " exceeds n - 1 = " + std::to_string(n - 1));
  DenseMatrix c(n, n);
  for (const auto& [k, m] : f.coefficients()) {
    for (int i = 0; i < n; ++i) {
      const int j = ((i - k[0]) % n + n) % n;
      c(i, j) += m(0, 0);
    }
  }
  return c;
}

DenseMatrix shift_matrix(int n) {
  require_positive(n, "shift_matrix");
  DenseMatrix z(n, n);
  for (int i = 0; i < n; ++i) z(i, ((i - 1) % n + n) % n) = 1.0;
  return z;
}

DenseMatrix tau_matrix(const LaurentSymbol& f, double eps, double phi, int n) {
  require_scalar(f, "tau_matrix");
  require_positive(n, "tau_matrix");
  if (!(std::abs(eps) <= 1.0) || !(std::abs(phi) <= 1.0))
    throw ArgumentError("tau_matrix: |eps| and |phi| must not exceed 1");
  if (f.max_degree() > 1) throw ArgumentError("tau_matrix: support must lie in {-1, 0, 1}");
  const Complex f1 = f.scalar_coefficient(1);
  const Complex fm1 = f.scalar_coefficient(-1);
  const double scale = 1.0 + std::abs(f1);
  if (std::abs(f1 - fm1) > 1e-14 * scale || std::abs(f1.imag()) > 1e-14 * scale)
    throw ArgumentError("tau_matrix: requires real f_1 = f_{-1}");
  DenseMatrix t = toeplitz(f, n);
  t(0, 0) += eps * f1.real();
  t(n - 1, n - 1) += phi * f1.real();
  return t;
}

DenseMatrix identity_rect(int n, int m) {
  require_positive(n, "identity_rect");
  require_positive(m, "identity_rect");
  DenseMatrix id(n, m);
  for (int i = 0; i < std::min(n, m); ++i) id(i, i) = 1.0;
  return id;
}

DenseMatrix toeplitz_rect(const LaurentSymbol& f, int n, int m) {
  require_scalar(f, "toeplitz_rect");
  const int ns[1] = {n}, ms[1] = {m};
  return multilevel_toeplitz_rect(f, ns, ms);
}

DenseMatrix multilevel_toeplitz_rect(const LaurentSymbol& f, std::span<const int> n,
                                     std::span<const int> m) {
  return kernels::assemble_multilevel_toeplitz(f, n, m);
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) { return kernels::kron(a, b); }

}  // namespace momsym
