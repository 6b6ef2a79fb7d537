#include "momsym/worked_examples.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "momsym/errors.h"
#include "momsym/grids.h"
#include "momsym/kernels.h"
#include "momsym/matrices.h"
#include "momsym/spectra.h"

namespace momsym::examples {

namespace {

// Rounding slack for identities that hold exactly in exact arithmetic.
constexpr double kExactTol = 1e-13;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Flag make_flag(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

LaurentSymbol laplacian() { return LaurentSymbol::Scalar({{-1, -1.0}, {0, 2.0}, {1, -1.0}}); }
LaurentSymbol one() { return LaurentSymbol::Scalar({{0, 1.0}}); }

SpectrumReport labelled(SpectrumReport r, std::string label, SymbolKind kind,
                        std::vector<GridSpec> grid, std::vector<int> size) {
  r.label = std::move(label);
  r.symbol_kind = kind;
  r.grid = std::move(grid);
  r.size = std::move(size);
  return r;
}

SpectrumReport sample_and_compare(const Spectrum& exact, const MomentarySymbol& sym,
                                  std::vector<GridSpec> grids, std::vector<int> size,
                                  SymbolKind kind, const std::string& label) {
  Samples s = kind == SymbolKind::kGlt ? sample_spectrum_approx(sym.glt_symbol(), grids)
                                       : sample_spectrum_approx(sym, grids, size);
  return labelled(compare(exact, s), label, kind, std::move(grids), std::move(size));
}

std::string grid_label(const GridSpec& g) { return g.name(); }

void require_odd(int n) {
  if (n < 5 || n % 2 == 0) throw ArgumentError("example 4: n must be odd and at least 5, got " + std::to_string(n));
}

double coefficient_diff(const LaurentSymbol& a, const LaurentSymbol& b) {
  double worst = 0.0;
  const LaurentSymbol diff = symbol_sub(a, b);
  for (const auto& [k, m] : diff.coefficients()) worst = std::max(worst, max_abs(m));
  return worst;
}

}  // namespace

bool ExampleReport::all_passed() const {
  return std::all_of(flags.begin(), flags.end(), [](const Flag& f) { return f.passed; });
}

std::vector<std::string> ExampleReport::failed_flags() const {
  std::vector<std::string> out;
  for (const auto& f : flags)
    if (!f.passed) out.push_back(f.name);
  return out;
}

const Flag& ExampleReport::flag(const std::string& name) const {
  for (const auto& f : flags)
    if (f.name == name) return f;
  throw ArgumentError("example report: no flag named '" + name + "'");
}

const SpectrumReport& ExampleReport::report(const std::string& label) const {
  for (const auto& r : reports)
    if (r.label == label) return r;
  throw ArgumentError("example report: no report labelled '" + label + "'");
}

// --- Example 1

BoundaryCondition parse_boundary_condition(const std::string& name) {
  if (name == "dirichlet_neumann") return BoundaryCondition::kDirichletNeumann;
  if (name == "dirichlet") return BoundaryCondition::kDirichlet;
  if (name == "periodic") return BoundaryCondition::kPeriodic;
  throw ParseError("unknown boundary condition '" + name +
                   "' (expected dirichlet_neumann, dirichlet or periodic)");
}

std::string to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::kDirichletNeumann:
      return "dirichlet_neumann";
    case BoundaryCondition::kDirichlet:
      return "dirichlet";
    case BoundaryCondition::kPeriodic:
      return "periodic";
  }
  return "";
}

DenseMatrix example1_matrix(int n, BoundaryCondition bc) {
  if (n < 2) throw ArgumentError("example 1: n must be at least 2");
  const double h = 1.0 / (n + 1);
  DenseMatrix base = bc == BoundaryCondition::kPeriodic
                         ? circulant(laplacian(), n)
                         : tau_matrix(laplacian(), 0.0, bc == BoundaryCondition::kDirichletNeumann ? 1.0 : 0.0, n);
  return base + (h * h) * DenseMatrix::Identity(n);
}

MomentarySymbol example1_momentary_symbol() {
  return MomentarySymbol({{CoefficientScaling::One(), laplacian()},
                          {CoefficientScaling::InversePower(2, SizeBase::kNPlusOne), one()}});
}

ExampleReport example1(int n, BoundaryCondition bc) {
  const DenseMatrix a = example1_matrix(n, bc);
  const double h = 1.0 / (n + 1);
  const Spectrum exact = eig_hermitian(a);
  const auto sym = example1_momentary_symbol();
  GridSpec matched = bc == BoundaryCondition::kDirichletNeumann ? GridSpec::Tau(0, 1, n)
                     : bc == BoundaryCondition::kDirichlet      ? GridSpec::Tau(0, 0, n)
                                                                : GridSpec::Circulant(n);
  ExampleReport rep;
  rep.example_id = 1;
  rep.params = {{"n", n}, {"h", h}};
  const std::string mname = grid_label(matched);
  rep.reports.push_back(sample_and_compare(exact, sym, {matched}, {n}, SymbolKind::kMomentary, "momentary@" + mname));
  rep.reports.push_back(sample_and_compare(exact, sym, {matched}, {n}, SymbolKind::kGlt, "glt@" + mname));
  const auto& mom = rep.reports[0];
  const auto& glt = rep.reports[1];
  rep.flags.push_back(make_flag("momentary_exact_on_matched_grid", mom.max_error <= 1e-12,
                                "max error " + sci(mom.max_error) + " on " + mname));
  double worst = 0.0;
  for (double e : glt.per_index_error) worst = std::max(worst, std::abs(e - h * h));
  rep.flags.push_back(make_flag("glt_error_equals_h2_on_matched_grid", worst <= 1e-12,
                                "max |error - h^2| " + sci(worst) + ", h^2 = " + sci(h * h)));
  if (bc == BoundaryCondition::kDirichletNeumann) {
    const GridSpec g00 = GridSpec::Tau(0, 0, n);
    rep.reports.push_back(sample_and_compare(exact, sym, {g00}, {n}, SymbolKind::kGlt, "glt@tau:0,0"));
    const double err = rep.reports.back().max_error;
    // |theta^(0,1)_j - theta^(0,0)_j| <= pi h / 2 and |f_1'| <= 2.
    const double bound = std::numbers::pi * h + h * h;
    rep.flags.push_back(make_flag("glt_mismatched_grid_error_order_h", err <= bound,
                                  "max error " + sci(err) + " vs bound pi h + h^2 = " + sci(bound)));
  }
  return rep;
}

// --- Example 2

DenseMatrix example2_matrix(int n) {
  if (n < 1) throw ArgumentError("example 2: n must be positive");
  const double h = 1.0 / n;
  return toeplitz(LaurentSymbol::Scalar({{0, 2.0}, {1, 1.0}}), n) + h * DenseMatrix::Identity(n);
}

MomentarySymbol example2_momentary_symbol() {
  return MomentarySymbol({{CoefficientScaling::One(), LaurentSymbol::Scalar({{0, 2.0}, {1, 1.0}})},
                          {CoefficientScaling::InversePower(1, SizeBase::kN), one()}});
}

ExampleReport example2(int n) {
  if (n < 3) throw ArgumentError("example 2: n must be at least 3");
  const double h = 1.0 / n;
  const int size[1] = {n};
  const DenseMatrix x = example2_matrix(n);
  const auto fm = example2_momentary_symbol();
  ExampleReport rep;
  rep.example_id = 2;
  rep.params = {{"n", n}, {"h", h}};

  // Eigenvalues of the non-Hermitian X_n.
  const Spectrum eig_x = eig_general_small(x);
  double dev = 0.0;
  for (const auto& z : eig_x.complex_values) dev = std::max(dev, std::abs(z - (2.0 + h)));
  rep.flags.push_back(make_flag("eigenvalues_equal_2_plus_h", dev <= 1e-14, "max |lambda - (2+h)| " + sci(dev)));

  const LaurentSymbol fm_n = fm.at(size);
  const MomentarySymbol eig_m(symmetrize_tridiagonal(fm_n));
  const LaurentSymbol eig_glt = symmetrize_tridiagonal(fm.glt_symbol());
  const GridSpec any = GridSpec::UniformOpen(n);
  rep.reports.push_back(labelled(compare(eig_x, sample_spectrum_approx(eig_m, std::vector{any}, size)),
                                 "eig_momentary@" + any.name(), SymbolKind::kMomentary, {any}, {n}));
  rep.reports.push_back(labelled(compare(eig_x, sample_spectrum_approx(eig_glt, std::vector{any})),
                                 "eig_glt@" + any.name(), SymbolKind::kGlt, {any}, {n}));
  rep.flags.push_back(make_flag("momentary_eigenvalue_symbol_exact", rep.reports[0].max_error <= 1e-14,
                                "max error " + sci(rep.reports[0].max_error)));
  double werr = 0.0;
  for (double e : rep.reports[1].per_index_error) werr = std::max(werr, std::abs(e - h));
  rep.flags.push_back(make_flag("glt_eigenvalue_symbol_error_h", werr <= 1e-14, "max |error - h| " + sci(werr)));

  // X^T X and its tau decomposition.
  const MomentarySymbol gm = momentary_mul(momentary_hermitian(fm), fm);
  const LaurentSymbol gm_n = gm.at(size);
  const LaurentSymbol gm_closed =
      LaurentSymbol::Scalar({{-1, 2.0 + h}, {0, 1.0 + (2.0 + h) * (2.0 + h)}, {1, 2.0 + h}});
  const double gdiff = coefficient_diff(gm_n, gm_closed);
  rep.flags.push_back(make_flag("gram_symbol_matches_closed_form", gdiff <= kExactTol, "max coefficient diff " + sci(gdiff)));
  const DenseMatrix xtx = adjoint(x) * x;
  const double phi = -1.0 / (2.0 + h);
  const TauCheck tc = verify_tau_decomposition(xtx, gm_n, 0.0, phi);
  rep.flags.push_back(make_flag("xtx_in_tau_0_minus_1_over_2_plus_h", tc.ok, "residual " + sci(tc.residual)));

  const Spectrum eig_xtx = eig_hermitian(xtx);
  const GridSpec g00 = GridSpec::Tau(0, 0, n), g0m = GridSpec::Tau(0, -1, n);
  const MomentarySymbol gm_sym(gm_n);
  rep.reports.push_back(sample_and_compare(eig_xtx, gm_sym, {g00}, {n}, SymbolKind::kMomentary, "xtx_momentary@tau:0,0"));
  rep.reports.push_back(sample_and_compare(eig_xtx, gm_sym, {g0m}, {n}, SymbolKind::kMomentary, "xtx_momentary@tau:0,-1"));
  const MomentarySymbol g_glt(gm.glt_symbol());
  rep.reports.push_back(sample_and_compare(eig_xtx, g_glt, {g00}, {n}, SymbolKind::kGlt, "xtx_glt@tau:0,0"));

  // T_{n,0,phi} = T_{n,0,0} + phi g_1 e e^T = T_{n,0,-1} + (1 + phi) g_1 e e^T, so
  // index-wise g_M(theta^(0,-1)) <= lambda <= g_M(theta^(0,0)) in ascending order.
  const auto up = rep.report("xtx_momentary@tau:0,0").approx.real_values();
  const auto lo = rep.report("xtx_momentary@tau:0,-1").approx.real_values();
  bool bracketed = true;
  for (int j = 1; j + 1 < n; ++j) {
    const double l = eig_xtx.values[j];
    const double tol = 1e-12 * (1.0 + std::abs(l));
    bracketed = bracketed && lo[j] <= l + tol && l <= up[j] + tol;
  }
  rep.flags.push_back(make_flag("xtx_eigenvalues_bracketed_by_tau00_tau0m1", bracketed, "j = 2..n-1"));

  const double top = eig_xtx.values.back();
  const double max_g = 9.0;
  const double max_gm = 1.0 + (2.0 + h) * (2.0 + h) + 2.0 * (2.0 + h);
  rep.params["xtx_top_eigenvalue"] = top;
  rep.flags.push_back(make_flag("top_eigenvalue_outlier_for_glt_symbol", top > max_g && top < max_gm,
                                "lambda_max " + sci(top) + ", max g = 9, max g_M = " + sci(max_gm)));

  const Spectrum sv = singular_values(x);
  Samples abs_fm;
  {
    const auto pts = g00.angles();
    for (double t : pts) abs_fm.values.push_back(std::abs(fm_n.evaluate_scalar(t)));
    std::sort(abs_fm.values.begin(), abs_fm.values.end(),
              [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
  }
  rep.reports.push_back(labelled(compare(sv, abs_fm), "sigma_momentary@tau:0,0", SymbolKind::kMomentary, {g00}, {n}));
  return rep;
}

// --- Example 3

DenseMatrix example3_dg_matrix(int N, int n) {
  if (N < 1 || n < 2) throw ArgumentError("example 3: need N >= 1 and n >= 2");
  const double c = static_cast<double>(N) / (12.0 * n * n);
  const auto t_plus = toeplitz(LaurentSymbol::Scalar({{-1, 0.5}, {0, 2.0}, {1, 0.5}}), n - 1);
  const auto t_minus = toeplitz(LaurentSymbol::Scalar({{-1, -0.5}, {0, 1.0}, {1, -0.5}}), n - 1);
  const DenseMatrix a = c * kron(DenseMatrix{{9, -9}, {3, 5}}, t_plus) + kron(DenseMatrix{{3, 0}, {0, 1}}, t_minus);
  const DenseMatrix b = c * kron(DenseMatrix{{0, -12}, {0, 4}}, t_plus);
  return kron(DenseMatrix::Identity(N), a) + kron(toeplitz(LaurentSymbol::Scalar({{1, 1.0}}), N), b);
}

DenseMatrix example3_permutation(int N, int n) {
  if (N < 1 || n < 2) throw ArgumentError("example 3: need N >= 1 and n >= 2");
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::size_t total = 2 * N * m;
  DenseMatrix p(total, total);
  for (std::size_t t = 0; t < static_cast<std::size_t>(N); ++t)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t q = 0; q < 2; ++q) p(t * 2 * m + x * 2 + q, t * 2 * m + q * m + x) = 1.0;
  return p;
}

LaurentSymbol example3_f1() {
  LaurentSymbol f(2, 2, 2);
  f.accumulate({0, 0}, DenseMatrix{{3, 0}, {0, 1}});
  f.accumulate({0, 1}, DenseMatrix{{-1.5, 0}, {0, -0.5}});
  f.accumulate({0, -1}, DenseMatrix{{-1.5, 0}, {0, -0.5}});
  return f;
}

LaurentSymbol example3_f2() {
  LaurentSymbol f(2, 2, 2);
  f.accumulate({0, 0}, DenseMatrix{{1.5, -1.5}, {0.5, 5.0 / 6.0}});
  f.accumulate({0, 1}, DenseMatrix{{3.0 / 8.0, -3.0 / 8.0}, {1.0 / 8.0, 5.0 / 24.0}});
  f.accumulate({0, -1}, DenseMatrix{{3.0 / 8.0, -3.0 / 8.0}, {1.0 / 8.0, 5.0 / 24.0}});
  f.accumulate({1, 0}, DenseMatrix{{0, -2}, {0, 2.0 / 3.0}});
  f.accumulate({1, 1}, DenseMatrix{{0, -0.5}, {0, 1.0 / 6.0}});
  f.accumulate({1, -1}, DenseMatrix{{0, -0.5}, {0, 1.0 / 6.0}});
  return f;
}

MomentarySymbol example3_singular_symbol() {
  return MomentarySymbol({{CoefficientScaling::One(), example3_f1()},
                          {CoefficientScaling::RatioNOverNSquared(), example3_f2()}});
}

MomentarySymbol example3_eigen_symbol() {
  const Complex off(0.0, std::sqrt(27.0));
  const DenseMatrix m{{9, off}, {off, 5}};
  LaurentSymbol g(2, 2, 2);
  g.accumulate({0, 0}, (2.0 / 12.0) * m);
  g.accumulate({0, 1}, (0.5 / 12.0) * m);
  g.accumulate({0, -1}, (0.5 / 12.0) * m);
  return MomentarySymbol({{CoefficientScaling::One(), example3_f1()},
                          {CoefficientScaling::RatioNOverNSquared(), g}});
}

ExampleReport example3(int N, int n) {
  if (N < 2 || n < 3) throw ArgumentError("example 3: need N >= 2 and n >= 3");
  const DenseMatrix c = example3_dg_matrix(N, n);
  const DenseMatrix p = example3_permutation(N, n);
  const DenseMatrix x = p * c * transpose(p);
  const int size[2] = {N, n};
  const int levels[2] = {N, n - 1};
  const auto fs = example3_singular_symbol();
  const DenseMatrix built = multilevel_toeplitz(fs.at(size), levels);
  ExampleReport rep;
  rep.example_id = 3;
  rep.params = {{"N", N}, {"n", n}, {"order", static_cast<double>(x.rows())}};
  const double sdiff = max_abs_diff(x, built);
  rep.flags.push_back(make_flag("permuted_matrix_is_two_level_toeplitz", sdiff <= kExactTol * (1.0 + max_abs(x)),
                                "max |P C P^T - T(f1) - (N/n^2) T(f2)| " + sci(sdiff)));

  const Spectrum exact = eig_general_small(x);
  const std::vector<GridSpec> grids{GridSpec::UniformOpen(N), GridSpec::UniformOpen(n - 1)};
  const auto fe = example3_eigen_symbol();
  rep.reports.push_back(labelled(compare(exact, sample_spectrum_approx(fe, grids, size)),
                                 "momentary@uniform-open x uniform-open", SymbolKind::kMomentary, grids, {N, n}));
  rep.reports.push_back(labelled(compare(exact, sample_spectrum_approx(fs.glt_symbol(), grids)),
                                 "glt@uniform-open x uniform-open", SymbolKind::kGlt, grids, {N, n}));
  const double err = rep.reports[0].max_error;
  rep.flags.push_back(make_flag("momentary_eigenvalue_samples_exact", err <= 1e-8, "max error " + sci(err)));

  // Every sampled value appears N times (the symbol does not depend on theta_1).
  const auto& s = rep.reports[0].approx.values;
  bool mult = s.size() % N == 0;
  for (std::size_t i = 0; mult && i < s.size(); i += N)
    for (int k = 1; k < N; ++k) mult = mult && std::abs(s[i + k] - s[i]) <= 1e-12 * (1.0 + std::abs(s[i]));
  rep.flags.push_back(make_flag("eigenvalue_multiplicity_N", mult, "samples grouped in runs of N"));
  return rep;
}

// --- Example 4

DenseMatrix example4_prolongation_stencil(int n) {
  require_odd(n);
  const int m = (n - 1) / 2;
  DenseMatrix p(n, m);
  for (int c = 0; c < m; ++c) {
    p(2 * c, c) = 1.0;
    p(2 * c + 1, c) = 2.0;
    p(2 * c + 2, c) = 1.0;
  }
  return p;
}

LaurentSymbol example4_p_symbol() {
  return LaurentSymbol::Univariate({{0, DenseMatrix{{1}, {2}}}, {1, DenseMatrix{{1}, {0}}}});
}

LaurentSymbol example4_fz_symbol() { return LaurentSymbol::Univariate({{0, DenseMatrix{{0}, {1}}}}); }

DenseMatrix example4_prolongation_from_symbol(int n) {
  require_odd(n);
  const int k = (n + 1) / 2;
  const int sz[1] = {k};
  return identity_rect(n, n + 1) * multilevel_toeplitz_rect(example4_p_symbol(), sz, sz) *
         identity_rect(k, k - 1);
}

DenseMatrix example4_prolongation_from_cutting(int n) {
  require_odd(n);
  const int k = (n + 1) / 2;
  const int sz[1] = {k};
  const DenseMatrix z =
      identity_rect(n, n + 1) * multilevel_toeplitz_rect(example4_fz_symbol(), sz, sz) * identity_rect(k, k - 1);
  return toeplitz(LaurentSymbol::Scalar({{-1, 1.0}, {0, 2.0}, {1, 1.0}}), n) * z;
}

MomentarySymbol example4_y_symbol() {
  return MomentarySymbol({{CoefficientScaling::One(), LaurentSymbol::Scalar({{-1, -2.0}, {0, 4.0}, {1, -2.0}})},
                          {CoefficientScaling::InversePower(2, SizeBase::kNPlusOne),
                           LaurentSymbol::Scalar({{-1, 1.0}, {0, 6.0}, {1, 1.0}})}});
}

ExampleReport example4(int n) {
  require_odd(n);
  const double h = 1.0 / (n + 1);
  const int m = (n - 1) / 2;
  const int size[1] = {n};
  ExampleReport rep;
  rep.example_id = 4;
  rep.params = {{"n", n}, {"h", h}, {"coarse_order", m}};

  const DenseMatrix pa = example4_prolongation_stencil(n);
  const DenseMatrix pb = example4_prolongation_from_symbol(n);
  const DenseMatrix pc = example4_prolongation_from_cutting(n);
  rep.flags.push_back(make_flag("prolongation_constructions_agree", pa == pb && pa == pc,
                                "stencil / symbol / cutting matrix"));

  const LaurentSymbol g2 = block_reinterpret(LaurentSymbol::Scalar({{-1, 1.0}, {0, 2.0}, {1, 1.0}}), 2);
  rep.flags.push_back(make_flag("block_symbol_times_cutting_symbol_is_p",
                                symbol_mul(g2, example4_fz_symbol()) == example4_p_symbol(),
                                "g^[2] f_z = p coefficientwise"));

  // y_M through the symbol algebra: p^H f_M^[2] p.
  const auto fm = example1_momentary_symbol();
  std::vector<MomentaryTerm> blocked;
  for (const auto& t : fm.terms()) blocked.push_back({t.scaling, block_reinterpret(t.symbol, 2)});
  const MomentarySymbol p(example4_p_symbol());
  const MomentarySymbol y_alg = momentary_mul(momentary_mul(momentary_hermitian(p), MomentarySymbol(blocked)), p);
  const MomentarySymbol y_closed = example4_y_symbol();
  const double ydiff = coefficient_diff(y_alg.at(size), y_closed.at(size));
  rep.flags.push_back(make_flag("y_symbol_from_algebra_matches_closed_form", ydiff <= kExactTol,
                                "max coefficient diff " + sci(ydiff)));

  const DenseMatrix y = adjoint(pa) * example1_matrix(n, BoundaryCondition::kDirichletNeumann) * pa;
  DenseMatrix ty = toeplitz(y_closed.at(size), m);
  ty(m - 1, m - 1) -= 1.0;
  const double cdiff = max_abs_diff(y, ty);
  rep.flags.push_back(make_flag("y_is_toeplitz_plus_corner", cdiff <= kExactTol, "max |Y - T(y_M) - R| " + sci(cdiff)));

  const double phi = 1.0 / (2.0 - h * h);
  const TauCheck tc = verify_tau_decomposition(y, y_closed.at(size), 0.0, phi);
  rep.flags.push_back(make_flag("y_in_tau_0_1_over_2_minus_h2", tc.ok, "residual " + sci(tc.residual)));

  const Spectrum ey = eig_hermitian(y);
  const GridSpec g00 = GridSpec::Tau(0, 0, m), g01 = GridSpec::Tau(0, 1, m);
  const int msize[1] = {n};
  rep.reports.push_back(labelled(compare(ey, sample_spectrum_approx(y_closed, std::vector{g00}, msize)),
                                 "y_momentary@tau:0,0", SymbolKind::kMomentary, {g00}, {n}));
  rep.reports.push_back(labelled(compare(ey, sample_spectrum_approx(y_closed, std::vector{g01}, msize)),
                                 "y_momentary@tau:0,1", SymbolKind::kMomentary, {g01}, {n}));
  // y_1 = h^2 - 2 < 0 and 0 < phi < 1: T_{0,1} <= Y <= T_{0,0} in the Loewner order.
  const auto up = rep.reports[0].approx.real_values();
  const auto lo = rep.reports[1].approx.real_values();
  bool bracketed = true;
  for (int j = 0; j < m; ++j) {
    const double l = ey.values[j];
    const double tol = 1e-12 * (1.0 + std::abs(l));
    bracketed = bracketed && lo[j] <= l + tol && l <= up[j] + tol;
  }
  rep.flags.push_back(make_flag("y_eigenvalues_bracketed_by_tau01_tau00", bracketed, "all j"));
  return rep;
}

}  // namespace momsym::examples
