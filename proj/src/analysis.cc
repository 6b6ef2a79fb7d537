#include "momsym/analysis.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "momsym/errors.h"
#include "momsym/kernels.h"
#include "momsym/matrices.h"

namespace momsym {

std::string to_string(SymbolKind kind) { return kind == SymbolKind::kGlt ? "glt" : "momentary"; }

std::vector<double> Samples::real_values() const {
  if (!real) throw ArgumentError("samples are complex; real values requested");
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& z : values) out.push_back(z.real());
  return out;
}

namespace {

constexpr double kRealSampleTol = 1e-10;

bool is_real_value(Complex z) { return std::abs(z.imag()) <= kRealSampleTol * (1.0 + std::abs(z)); }

bool complex_less(const Complex& x, const Complex& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

// Tensor grid, point-major, theta_1 slowest.
std::vector<double> tensor_points(std::span<const GridSpec> grids) {
  std::vector<std::vector<double>> axes;
  std::size_t total = 1;
  for (const auto& g : grids) {
    axes.push_back(g.angles());
    total *= axes.back().size();
  }
  const std::size_t d = axes.size();
  std::vector<double> pts;
  pts.reserve(total * d);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t p = 0; p < total; ++p) {
    for (std::size_t i = 0; i < d; ++i) pts.push_back(axes[i][idx[i]]);
    for (std::size_t i = d; i-- > 0;) {
      if (++idx[i] < axes[i].size()) break;
      idx[i] = 0;
    }
  }
  return pts;
}

Samples sample_laurent(const LaurentSymbol& f, std::span<const GridSpec> grids) {
  if (static_cast<int>(grids.size()) != f.d())
    throw ArgumentError("sample_spectrum_approx: need one grid per variable (" +
                        std::to_string(f.d()) + "), got " + std::to_string(grids.size()));
  if (f.s() != f.r()) throw ArgumentError("sample_spectrum_approx: symbol must be square-matrix valued");
  const auto pts = tensor_points(grids);
  const auto evals = kernels::sample_symbol(f, pts);
  Samples out;
  for (const auto& m : evals) {
    if (m.rows() == 1) {
      out.values.push_back(m(0, 0));
    } else if (is_hermitian(m, kHermitianInputTol)) {
      for (double v : eig_hermitian(m).values) out.values.push_back(v);
    } else {
      for (const auto& z : eig_general_small(m).complex_values) out.values.push_back(z);
    }
  }
  out.real = std::all_of(out.values.begin(), out.values.end(), is_real_value);
  if (out.real) {
    for (auto& z : out.values) z = z.real();
    std::sort(out.values.begin(), out.values.end(),
              [](const Complex& x, const Complex& y) { return x.real() < y.real(); });
  } else {
    std::sort(out.values.begin(), out.values.end(), complex_less);
  }
  return out;
}

}  // namespace

Samples sample_spectrum_approx(const MomentarySymbol& sym, std::span<const GridSpec> grids,
                               std::span<const int> size) {
  return sample_laurent(sym.at(size), grids);
}

Samples sample_spectrum_approx(const LaurentSymbol& sym, std::span<const GridSpec> grids) {
  return sample_laurent(sym, grids);
}

SpectrumReport compare(const Spectrum& exact, const Samples& approx) {
  if (exact.size() != approx.values.size())
    throw ArgumentError("compare: exact spectrum has " + std::to_string(exact.size()) +
                        " values, samples have " + std::to_string(approx.values.size()));
  SpectrumReport rep;
  rep.exact = exact;
  rep.approx = approx;
  auto ex = exact.as_complex();
  auto ap = approx.values;
  std::sort(ex.begin(), ex.end(), complex_less);
  std::sort(ap.begin(), ap.end(), complex_less);
  rep.per_index_error.resize(ex.size());
  for (std::size_t j = 0; j < ex.size(); ++j) {
    rep.per_index_error[j] = std::abs(ex[j] - ap[j]);
    rep.max_error = std::max(rep.max_error, rep.per_index_error[j]);
  }
  return rep;
}

TauCheck verify_tau_decomposition(const DenseMatrix& a, const LaurentSymbol& f, double eps,
                                  double phi) {
  if (!a.is_square() || a.empty()) throw ArgumentError("verify_tau_decomposition: matrix must be square");
  const DenseMatrix t = tau_matrix(f, eps, phi, static_cast<int>(a.rows()));
  TauCheck c;
  c.residual = max_abs_diff(a, t);
  c.ok = c.residual <= 1e-12 * (1.0 + max_abs(a));
  return c;
}

InterlacingReport interlacing_check(const LaurentSymbol& f, int n) {
  if (f.d() != 1 || !f.is_scalar()) throw ArgumentError("interlacing_check: scalar univariate symbol required");
  if (n < 4) throw ArgumentError("interlacing_check: n must be at least 4");
  if (f.max_degree() > 1) throw ArgumentError("interlacing_check: support must lie in {-1, 0, 1}");
  const Complex f1 = f.scalar_coefficient(1);
  if (f1 != f.scalar_coefficient(-1) || f1.imag() != 0.0)
    throw ArgumentError("interlacing_check: requires real f_1 = f_{-1}");
  if (!(f1.real() > 0.0)) throw ArgumentError("interlacing_check: f must be monotone decreasing on [0, pi]");

  auto descending = [&](double phi) {
    auto v = eig_hermitian(tau_matrix(f, 0.0, phi, n)).values;
    std::reverse(v.begin(), v.end());
    return v;
  };
  InterlacingReport rep;
  rep.n = n;
  rep.lower = descending(-1.0);
  rep.middle = descending(-0.5);
  rep.upper = descending(0.0);
  double scale = 1.0;
  for (double v : rep.upper) scale = std::max(scale, std::abs(v));
  for (double v : rep.lower) scale = std::max(scale, std::abs(v));
  const double tol = kInterlacingTol * scale;
  rep.stated_holds = rep.proof_holds = true;
  for (int j = 2; j <= n - 1; ++j) {
    const std::size_t i = j - 1;
    const bool low_ok = rep.lower[i] <= rep.middle[i] + tol;
    const bool stated = low_ok && rep.middle[i] <= rep.upper[i] + tol;
    const bool proof = low_ok && rep.middle[i] <= rep.upper[i + 1] + tol;
    rep.stated_bound.push_back(stated);
    rep.proof_bound.push_back(proof);
    rep.stated_holds = rep.stated_holds && stated;
    rep.proof_holds = rep.proof_holds && proof;
  }
  return rep;
}

std::vector<ZeroDistributionStat> zero_distribution_stats(
    const std::function<DenseMatrix(int)>& builder, std::span<const int> sizes) {
  std::vector<ZeroDistributionStat> out;
  for (int size : sizes) {
    const DenseMatrix m = builder(size);
    if (!m.is_square() || m.empty()) throw ArgumentError("zero_distribution_stats: builder must return square matrices");
    const auto sv = singular_values(m).values;
    const double smax = sv.empty() ? 0.0 : sv.back();
    int rank = 0;
    double nuclear = 0.0;
    for (double s : sv) {
      if (smax > 0.0 && s > 1e-10 * smax) ++rank;
      nuclear += s;
    }
    const double order = static_cast<double>(m.rows());
    out.push_back({size, rank / order, nuclear / order});
  }
  return out;
}

}  // namespace momsym
