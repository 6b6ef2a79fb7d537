#ifndef MOMSYM_WORKED_EXAMPLES_H_
#define MOMSYM_WORKED_EXAMPLES_H_

#include <map>
#include <string>
#include <vector>

#include "momsym/analysis.h"
#include "momsym/dense_matrix.h"
#include "momsym/laurent_symbol.h"
#include "momsym/momentary_symbol.h"

namespace momsym::examples {

struct Flag {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExampleReport {
  int example_id = 0;
  std::map<std::string, double> params;
  std::vector<SpectrumReport> reports;
  std::vector<Flag> flags;

  bool all_passed() const;
  std::vector<std::string> failed_flags() const;
  const Flag& flag(const std::string& name) const;
  const SpectrumReport& report(const std::string& label) const;
};

// --- Example 1: -u'' + u type finite differences, three boundary conditions.

enum class BoundaryCondition { kDirichletNeumann, kDirichlet, kPeriodic };
BoundaryCondition parse_boundary_condition(const std::string& name);
std::string to_string(BoundaryCondition bc);

// h^2 X_n with h = 1/(n+1).
DenseMatrix example1_matrix(int n, BoundaryCondition bc);
// 1 * (2 - 2cos) + h^2 * 1.
MomentarySymbol example1_momentary_symbol();
ExampleReport example1(int n, BoundaryCondition bc);

// --- Example 2: bidiagonal non-Hermitian X_n = T_n(2 + e^{it}) + h I, h = 1/n.

DenseMatrix example2_matrix(int n);
// f_M = 1 * (2 + e^{it}) + h * 1 with h = 1/n.
MomentarySymbol example2_momentary_symbol();
ExampleReport example2(int n);

// --- Example 3: space-time DG matrix, size parameters (N, n).

// 2 N n^{-1} C^{[1,1,0]}_{N,n}(1) in (time, dof, space) ordering.
DenseMatrix example3_dg_matrix(int N, int n);
// Permutation (t, p, x) -> (t, x, p).
DenseMatrix example3_permutation(int N, int n);
LaurentSymbol example3_f1();
LaurentSymbol example3_f2();
// f^(1) + (N/n^2) f^(2)
MomentarySymbol example3_singular_symbol();
// f^(1) + (N/(12 n^2)) [[9, i sqrt27], [i sqrt27, 5]] (2 + cos t_2)
MomentarySymbol example3_eigen_symbol();
ExampleReport example3(int N, int n);

// --- Example 4: linear interpolation prolongation, n odd.

DenseMatrix example4_prolongation_stencil(int n);
DenseMatrix example4_prolongation_from_symbol(int n);
DenseMatrix example4_prolongation_from_cutting(int n);
LaurentSymbol example4_p_symbol();
LaurentSymbol example4_fz_symbol();
// y_M(theta; n) = 4 + 6h^2 + 2(h^2 - 2) cos(theta), h = 1/(n+1).
MomentarySymbol example4_y_symbol();
ExampleReport example4(int n);

}  // namespace momsym::examples

#endif  // MOMSYM_WORKED_EXAMPLES_H_
