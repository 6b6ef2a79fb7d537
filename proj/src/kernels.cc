#include "momsym/kernels.h"

#include <cstdint>
#include <string>

#include "momsym/errors.h"
#include "momsym/laurent_symbol.h"

namespace momsym::kernels {

namespace {

void check_matmul_shapes(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ArgumentError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + ")");
  }
}

// Row i of a*b; shared by both variants so the summation order is identical.
inline void matmul_row(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c, std::size_t i) {
  auto out = c.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Complex aik = a(i, k);
    if (aik == Complex(0.0)) continue;
    const auto brow = b.row(k);
    for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
  }
}

inline void kron_row(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c, std::size_t ia) {
  for (std::size_t ib = 0; ib < b.rows(); ++ib) {
    auto out = c.row(ia * b.rows() + ib);
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex x = a(ia, ja);
      for (std::size_t jb = 0; jb < b.cols(); ++jb) out[ja * b.cols() + jb] = x * b(ib, jb);
    }
  }
}

struct ToeplitzLayout {
  int d;
  std::size_t s, r;
  std::size_t row_blocks = 1, col_blocks = 1;
};

ToeplitzLayout layout_for(const LaurentSymbol& f, std::span<const int> n, std::span<const int> m) {
  if (static_cast<int>(n.size()) != f.d() || static_cast<int>(m.size()) != f.d()) {
    throw ArgumentError("multilevel Toeplitz: size arity " + std::to_string(n.size()) + "/" +
                        std::to_string(m.size()) + " does not match d = " + std::to_string(f.d()));
  }
  ToeplitzLayout l{f.d(), static_cast<std::size_t>(f.s()), static_cast<std::size_t>(f.r())};
  for (int i = 0; i < f.d(); ++i) {
    if (n[i] <= 0 || m[i] <= 0) throw ArgumentError("multilevel Toeplitz: sizes must be positive");
    l.row_blocks *= static_cast<std::size_t>(n[i]);
    l.col_blocks *= static_cast<std::size_t>(m[i]);
  }
  return l;
}

inline void toeplitz_block_row(const LaurentSymbol& f, std::span<const int> n,
                               std::span<const int> m, const ToeplitzLayout& l, std::size_t row,
                               DenseMatrix& out) {
  // Decode the row multi-index (theta_1 slowest).
  std::vector<int> idx(l.d);
  std::size_t rem = row;
  for (int i = l.d - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(rem % n[i]);
    rem /= n[i];
  }
  for (const auto& [k, coeff] : f.coefficients()) {
    std::size_t col = 0;
    bool inside = true;
    for (int i = 0; i < l.d; ++i) {
      const int j = idx[i] - k[i];
      if (j < 0 || j >= m[i]) {
        inside = false;
        break;
      }
      col = col * m[i] + j;
    }
    if (!inside) continue;
    for (std::size_t a = 0; a < l.s; ++a)
      for (std::size_t b = 0; b < l.r; ++b) out(row * l.s + a, col * l.r + b) += coeff(a, b);
  }
}

DenseMatrix rect_shift(int n, int m, int k) {
  DenseMatrix t(n, m);
  for (int i = 0; i < n; ++i) {
    const int j = i - k;
    if (j >= 0 && j < m) t(i, j) = 1.0;
  }
  return t;
}

std::vector<std::vector<double>> weights_or_throw(const std::vector<std::vector<double>>& axes,
                                                  const std::vector<std::vector<double>>& weights) {
  if (axes.size() != weights.size()) throw ArgumentError("quadrature: axes/weights arity mismatch");
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (axes[i].size() != weights[i].size() || axes[i].empty())
      throw ArgumentError("quadrature: axis " + std::to_string(i) + " malformed");
  return weights;
}

inline double quadrature_point(const std::function<double(std::span<const double>)>& g,
                               const std::vector<std::vector<double>>& axes,
                               const std::vector<std::vector<double>>& weights, std::size_t lin,
                               std::vector<double>& point) {
  double w = 1.0;
  for (int i = static_cast<int>(axes.size()) - 1; i >= 0; --i) {
    const std::size_t len = axes[i].size();
    const std::size_t j = lin % len;
    lin /= len;
    point[i] = axes[i][j];
    w *= weights[i][j];
  }
  return w * g(point);
}

std::size_t total_points(const std::vector<std::vector<double>>& axes) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  return total;
}

}  // namespace

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  check_matmul_shapes(a, b);
  DenseMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) matmul_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) kron_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

DenseMatrix assemble_multilevel_toeplitz(const LaurentSymbol& f, std::span<const int> n,
                                         std::span<const int> m) {
  const ToeplitzLayout l = layout_for(f, n, m);
  DenseMatrix out(l.row_blocks * l.s, l.col_blocks * l.r);
  const auto rows = static_cast<std::int64_t>(l.row_blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < rows; ++row)
    toeplitz_block_row(f, n, m, l, static_cast<std::size_t>(row), out);
  return out;
}

std::vector<DenseMatrix> sample_symbol(const LaurentSymbol& f, std::span<const double> points) {
  const auto d = static_cast<std::size_t>(f.d());
  if (points.size() % d != 0) throw ArgumentError("sample_symbol: point buffer not a multiple of d");
  const auto count = static_cast<std::int64_t>(points.size() / d);
  std::vector<DenseMatrix> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < count; ++p) out[p] = f.evaluate(points.subspan(p * d, d));
  return out;
}

double tensor_quadrature_mean(const std::function<double(std::span<const double>)>& g,
                              const std::vector<std::vector<double>>& axes,
                              const std::vector<std::vector<double>>& weights) {
  weights_or_throw(axes, weights);
  const std::size_t total = total_points(axes);
  std::vector<double> contrib(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<double> point(axes.size());
#pragma omp for schedule(static)
    for (std::int64_t lin = 0; lin < count; ++lin)
      contrib[lin] = quadrature_point(g, axes, weights, static_cast<std::size_t>(lin), point);
  }
  double sum = 0.0;
  for (double c : contrib) sum += c;
  return sum;
}

namespace serial {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  check_matmul_shapes(a, b);
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
  return c;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) kron_row(a, b, c, i);
  return c;
}

DenseMatrix assemble_multilevel_toeplitz(const LaurentSymbol& f, std::span<const int> n,
                                         std::span<const int> m) {
  const ToeplitzLayout l = layout_for(f, n, m);
  DenseMatrix out(l.row_blocks * l.s, l.col_blocks * l.r);
  for (const auto& [k, coeff] : f.coefficients()) {
    DenseMatrix term = DenseMatrix::Identity(1);
    for (int i = 0; i < l.d; ++i) term = kron(term, rect_shift(n[i], m[i], k[i]));
    out += kron(term, coeff);
  }
  return out;
}

std::vector<DenseMatrix> sample_symbol(const LaurentSymbol& f, std::span<const double> points) {
  const auto d = static_cast<std::size_t>(f.d());
  if (points.size() % d != 0) throw ArgumentError("sample_symbol: point buffer not a multiple of d");
  std::vector<DenseMatrix> out;
  out.reserve(points.size() / d);
  for (std::size_t p = 0; p < points.size(); p += d) out.push_back(f.evaluate(points.subspan(p, d)));
  return out;
}

double tensor_quadrature_mean(const std::function<double(std::span<const double>)>& g,
                              const std::vector<std::vector<double>>& axes,
                              const std::vector<std::vector<double>>& weights) {
  weights_or_throw(axes, weights);
  const std::size_t total = total_points(axes);
  std::vector<double> point(axes.size());
  double sum = 0.0;
  for (std::size_t lin = 0; lin < total; ++lin) sum += quadrature_point(g, axes, weights, lin, point);
  return sum;
}

}  // namespace serial
}  // namespace momsym::kernels
