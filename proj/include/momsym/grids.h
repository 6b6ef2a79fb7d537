#ifndef MOMSYM_GRIDS_H_
#define MOMSYM_GRIDS_H_

#include <string>
#include <string_view>
#include <vector>

#include "momsym/dense_matrix.h"

namespace momsym {

enum class GridFamily { kTau, kCirculant, kUniformOpen, kCustom };

// A named sampling grid of n angles.
struct GridSpec {
  GridFamily family = GridFamily::kUniformOpen;
  int eps = 0;  // tau family only, in {-1, 0, 1}
  int phi = 0;
  int n = 1;
  std::vector<double> custom;  // kCustom only; n == custom.size()

  static GridSpec Tau(int eps, int phi, int n) { return {GridFamily::kTau, eps, phi, n, {}}; }
  static GridSpec Circulant(int n) { return {GridFamily::kCirculant, 0, 0, n, {}}; }
  static GridSpec UniformOpen(int n) { return {GridFamily::kUniformOpen, 0, 0, n, {}}; }
  static GridSpec Custom(std::vector<double> angles);

  std::vector<double> angles() const;
  // "tau:-1,0", "circulant", "uniform-open", "custom".
  std::string name() const;
};

// Parses a CLI grid name ("tau:0,1", "circulant", "uniform-open",
// "custom:0.1,0.2") for n points. Custom lists fix n themselves.
GridSpec parse_grid(std::string_view name, int n);

// theta^{(eps,phi)}_{j,n}, j = 1..n, for eps, phi in {-1, 0, 1}.
std::vector<double> tau_eigen_grid(int eps, int phi, int n);

// Denominator constant h of the tau grid (e.g. 1/(n+1/2)).
double tau_grid_h(int eps, int phi, int n);

// Real orthogonal Q_n with T_{n,eps,phi}(f) = Q_n diag(f(theta_j)) Q_n^T.
DenseMatrix tau_eigvec_matrix(int eps, int phi, int n);

// theta^c_j = (j - 1) 2 pi / n.
std::vector<double> circulant_grid(int n);

// (F)_{ij} = exp(i (i-1) theta^c_j) / sqrt(n).
DenseMatrix fourier_matrix(int n);

// Real orthogonal sine/cosine basis diagonalizing real symmetric circulants.
DenseMatrix circulant_real_transform(int n);

// One link of the chain of inequalities between the nine tau grids.
struct GridOrderingLink {
  std::string lhs;  // e.g. "(1,1)"
  std::string rhs;
  bool equality;    // "=" link rather than "<"
  bool holds;       // for every j
  int first_violation_j;  // 1-based; 0 when the link holds
};

struct GridOrderingReport {
  int n;
  std::vector<GridOrderingLink> links;
  bool all_hold() const;
};

GridOrderingReport grid_ordering_report(int n);
// Checks
// t(1,1) < t(0,1) = t(1,0) < t(-1,1) = t(1,-1) < t(0,0) < t(-1,0) = t(0,-1) < t(-1,-1)
// for all j = 1..n.
bool grid_ordering_check(int n);

}  // namespace momsym

#endif  // MOMSYM_GRIDS_H_
