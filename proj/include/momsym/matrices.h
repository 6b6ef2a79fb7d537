#ifndef MOMSYM_MATRICES_H_
#define MOMSYM_MATRICES_H_

#include <span>

#include "momsym/dense_matrix.h"
#include "momsym/laurent_symbol.h"

namespace momsym {

// Multi-index linearization used by every multilevel builder: lexicographic,
// theta_1 slowest, block index fastest.

// T_n(f) for a univariate s x s symbol; block (i, j) = f_{i-j}.
DenseMatrix toeplitz(const LaurentSymbol& f, int n);

// T_n(f) = sum_k T_{n_1}(e^{ik_1t}) (x) ... (x) T_{n_d}(e^{ik_dt}) (x) f_k.
DenseMatrix multilevel_toeplitz(const LaurentSymbol& f, std::span<const int> n);

// C_n(f) = sum_{|j| < n} f_j Z_n^j; support wider than n - 1 is rejected.
DenseMatrix circulant(const LaurentSymbol& f, int n);

// Cyclic shift Z_n: (Z)_{ij} = 1 iff i - j = 1 (mod n).
DenseMatrix shift_matrix(int n);

// T_{n,eps,phi}(f) = T_n(f) + eps f_1 e_1 e_1^T + phi f_1 e_n e_n^T for
// f = f_0 + 2 f_1 cos(theta), |eps|, |phi| <= 1.
DenseMatrix tau_matrix(const LaurentSymbol& f, double eps, double phi, int n);

// The n x m identity: leading columns of I_n (n > m), or rows (n < m).
DenseMatrix identity_rect(int n, int m);

// T_{n x m}(f): entry (i, j) = f_{i-j}; scalar univariate f.
DenseMatrix toeplitz_rect(const LaurentSymbol& f, int n, int m);

// (s prod n_i) x (r prod m_i) multilevel Toeplitz of an s x r symbol.
DenseMatrix multilevel_toeplitz_rect(const LaurentSymbol& f, std::span<const int> n,
                                     std::span<const int> m);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace momsym

#endif  // MOMSYM_MATRICES_H_
