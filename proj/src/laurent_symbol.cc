#include "momsym/laurent_symbol.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "momsym/errors.h"

namespace momsym {

namespace {

std::string shape_string(int d, int s, int r) {
  return "(d=" + std::to_string(d) + ", " + std::to_string(s) + "x" + std::to_string(r) + ")";
}

bool is_zero_matrix(const DenseMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](const Complex& z) { return z == Complex(0.0); });
}

MultiIndex negate(const MultiIndex& k) {
  MultiIndex out(k.size());
  std::transform(k.begin(), k.end(), out.begin(), [](int x) { return -x; });
  return out;
}

}  // namespace

LaurentSymbol::LaurentSymbol(int d, int s, int r) : d_(d), s_(s), r_(r) {
  if (d <= 0 || s <= 0 || r <= 0)
    throw ArgumentError("LaurentSymbol: dimensions must be positive " + shape_string(d, s, r));
}

LaurentSymbol::LaurentSymbol(int d, int s, int r, CoefficientMap coeffs) : LaurentSymbol(d, s, r) {
  for (auto& [k, m] : coeffs) accumulate(k, m);
}

LaurentSymbol LaurentSymbol::Scalar(const std::map<int, Complex>& coeffs) {
  LaurentSymbol f(1, 1, 1);
  for (const auto& [k, c] : coeffs) f.accumulate({k}, DenseMatrix(1, 1, c));
  return f;
}

LaurentSymbol LaurentSymbol::Constant(int d, const DenseMatrix& value) {
  LaurentSymbol f(d, static_cast<int>(value.rows()), static_cast<int>(value.cols()));
  f.accumulate(MultiIndex(d, 0), value);
  return f;
}

LaurentSymbol LaurentSymbol::Univariate(const std::map<int, DenseMatrix>& coeffs) {
  if (coeffs.empty()) throw ArgumentError("LaurentSymbol::Univariate: empty coefficient map");
  const auto& first = coeffs.begin()->second;
  LaurentSymbol f(1, static_cast<int>(first.rows()), static_cast<int>(first.cols()));
  for (const auto& [k, m] : coeffs) f.accumulate({k}, m);
  return f;
}

void LaurentSymbol::check_shape(const DenseMatrix& m) const {
  if (static_cast<int>(m.rows()) != s_ || static_cast<int>(m.cols()) != r_) {
    throw ArgumentError("LaurentSymbol: coefficient of shape " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " in symbol " + shape_string(d_, s_, r_));
  }
}

DenseMatrix LaurentSymbol::coefficient(const MultiIndex& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? DenseMatrix(s_, r_) : it->second;
}

Complex LaurentSymbol::scalar_coefficient(int k) const {
  if (d_ != 1 || !is_scalar()) throw ArgumentError("scalar_coefficient: symbol is not univariate scalar");
  auto it = coeffs_.find({k});
  return it == coeffs_.end() ? Complex(0.0) : it->second(0, 0);
}

void LaurentSymbol::accumulate(const MultiIndex& k, const DenseMatrix& value) {
  if (static_cast<int>(k.size()) != d_)
    throw ArgumentError("LaurentSymbol: multi-index of arity " + std::to_string(k.size()) +
                        " for d = " + std::to_string(d_));
  check_shape(value);
  if (!all_finite(value)) throw NumericError("LaurentSymbol: non-finite coefficient");
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    if (!is_zero_matrix(value)) coeffs_.emplace(k, value);
    return;
  }
  it->second += value;
  if (is_zero_matrix(it->second)) coeffs_.erase(it);
}

int LaurentSymbol::max_degree() const {
  int deg = 0;
  for (const auto& [k, m] : coeffs_)
    for (int ki : k) deg = std::max(deg, std::abs(ki));
  return deg;
}

DenseMatrix LaurentSymbol::evaluate(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != d_)
    throw ArgumentError("evaluate_symbol: theta has " + std::to_string(theta.size()) +
                        " components, symbol has d = " + std::to_string(d_));
  DenseMatrix out(s_, r_);
  for (const auto& [k, m] : coeffs_) {
    double phase = 0.0;
    for (int i = 0; i < d_; ++i) phase += k[i] * theta[i];
    const Complex e = std::polar(1.0, phase);
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += m.data()[i] * e;
  }
  return out;
}

Complex LaurentSymbol::evaluate_scalar(double theta) const {
  if (d_ != 1 || !is_scalar()) throw ArgumentError("evaluate_scalar: symbol is not univariate scalar");
  const double t[1] = {theta};
  return evaluate(t)(0, 0);
}

LaurentSymbol LaurentSymbol::pruned(double tol) const {
  LaurentSymbol out(d_, s_, r_);
  for (const auto& [k, m] : coeffs_)
    if (max_abs(m) > tol) out.coeffs_.emplace(k, m);
  return out;
}

LaurentSymbol fourier_coefficients(const SymbolFunction& f, int d, int s, int r,
                                   const IndexBox& range, int quad_points_per_dim) {
  if (static_cast<int>(range.lo.size()) != d || static_cast<int>(range.hi.size()) != d)
    throw ArgumentError("fourier_coefficients: index box arity does not match d");
  int max_k = 0;
  for (int i = 0; i < d; ++i) {
    if (range.lo[i] > range.hi[i]) throw ArgumentError("fourier_coefficients: empty index box");
    max_k = std::max({max_k, std::abs(range.lo[i]), std::abs(range.hi[i])});
  }
  if (quad_points_per_dim < 2 * max_k + 2)
    throw ArgumentError("fourier_coefficients: " + std::to_string(quad_points_per_dim) +
                        " points per dimension cannot resolve |k| <= " + std::to_string(max_k));

  const int m = quad_points_per_dim;
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(m);

  // Sample once on the periodic grid theta_j = -pi + 2 pi j / m.
  std::vector<std::vector<double>> points;
  std::vector<DenseMatrix> values;
  points.reserve(total);
  values.reserve(total);
  std::vector<double> theta(d);
  for (std::size_t lin = 0; lin < total; ++lin) {
    std::size_t rem = lin;
    for (int i = d - 1; i >= 0; --i) {
      theta[i] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(rem % m) / m;
      rem /= m;
    }
    DenseMatrix v = f(theta);
    if (static_cast<int>(v.rows()) != s || static_cast<int>(v.cols()) != r)
      throw ArgumentError("fourier_coefficients: callable returned wrong shape");
    if (!all_finite(v)) throw NumericError("fourier_coefficients: callable returned non-finite value");
    points.push_back(theta);
    values.push_back(std::move(v));
  }

  LaurentSymbol out(d, s, r);
  MultiIndex k = range.lo;
  const double norm = 1.0 / static_cast<double>(total);
  while (true) {
    DenseMatrix acc(s, r);
    for (std::size_t p = 0; p < total; ++p) {
      double phase = 0.0;
      for (int i = 0; i < d; ++i) phase -= k[i] * points[p][i];
      const Complex e = std::polar(norm, phase);
      for (std::size_t q = 0; q < acc.size(); ++q) acc.data()[q] += values[p].data()[q] * e;
    }
    for (auto& z : acc.data()) {
      // Zero components below tolerance individually so exact coefficients stay clean.
      if (std::abs(z.real()) <= kCoefficientPruneTol) z.real(0.0);
      if (std::abs(z.imag()) <= kCoefficientPruneTol) z.imag(0.0);
    }
    out.accumulate(k, acc);

    int i = d - 1;
    while (i >= 0 && k[i] == range.hi[i]) {
      k[i] = range.lo[i];
      --i;
    }
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

LaurentSymbol symbol_add(const LaurentSymbol& a, const LaurentSymbol& b) {
  if (a.d() != b.d() || a.s() != b.s() || a.r() != b.r())
    throw ArgumentError("symbol_add: shape mismatch " + shape_string(a.d(), a.s(), a.r()) + " vs " +
                        shape_string(b.d(), b.s(), b.r()));
  LaurentSymbol out = a;
  for (const auto& [k, m] : b.coefficients()) out.accumulate(k, m);
  return out;
}

LaurentSymbol symbol_scale(Complex c, const LaurentSymbol& a) {
  LaurentSymbol out(a.d(), a.s(), a.r());
  if (c == Complex(0.0)) return out;
  for (const auto& [k, m] : a.coefficients()) out.accumulate(k, c * m);
  return out;
}

LaurentSymbol symbol_sub(const LaurentSymbol& a, const LaurentSymbol& b) {
  return symbol_add(a, symbol_scale(-1.0, b));
}

LaurentSymbol symbol_mul(const LaurentSymbol& a, const LaurentSymbol& b) {
  if (a.d() != b.d() || a.r() != b.s())
    throw ArgumentError("symbol_mul: incompatible shapes " + shape_string(a.d(), a.s(), a.r()) +
                        " * " + shape_string(b.d(), b.s(), b.r()));
  LaurentSymbol out(a.d(), a.s(), b.r());
  for (const auto& [ka, ma] : a.coefficients()) {
    for (const auto& [kb, mb] : b.coefficients()) {
      MultiIndex k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out.accumulate(k, ma * mb);
    }
  }
  return out;
}

LaurentSymbol symbol_hermitian(const LaurentSymbol& a) {
  LaurentSymbol out(a.d(), a.r(), a.s());
  for (const auto& [k, m] : a.coefficients()) out.accumulate(negate(k), adjoint(m));
  return out;
}

LaurentSymbol symmetrize_tridiagonal(const LaurentSymbol& f) {
  if (f.d() != 1 || !f.is_scalar())
    throw ArgumentError("symmetrize_tridiagonal: requires a univariate scalar symbol");
  for (const auto& [k, m] : f.coefficients())
    if (std::abs(k[0]) > 1)
      throw ArgumentError("symmetrize_tridiagonal: support outside {-1, 0, 1}");
  const Complex off = std::sqrt(f.scalar_coefficient(1)) * std::sqrt(f.scalar_coefficient(-1));
  return LaurentSymbol::Scalar({{-1, off}, {0, f.scalar_coefficient(0)}, {1, off}});
}

LaurentSymbol block_reinterpret(const LaurentSymbol& f, int s_block) {
  if (f.d() != 1) throw UnsupportedError("block_reinterpret: only univariate symbols are supported");
  if (s_block <= 0) throw ArgumentError("block_reinterpret: block size must be positive");
  const int p = f.s(), q = f.r();
  LaurentSymbol out(1, p * s_block, q * s_block);
  // Coefficient f_k lands in block (a, b) of f^[s]_l whenever k = l s + a - b.
  for (const auto& [k, m] : f.coefficients()) {
    for (int a = 0; a < s_block; ++a) {
      const int shifted = k[0] - a;  // = l s - b
      for (int b = 0; b < s_block; ++b) {
        const int num = shifted + b;
        if (num % s_block != 0) continue;
        DenseMatrix block(p * s_block, q * s_block);
        for (int i = 0; i < p; ++i)
          for (int j = 0; j < q; ++j) block(a * p + i, b * q + j) = m(i, j);
        out.accumulate({num / s_block}, block);
      }
    }
  }
  return out;
}

}  // namespace momsym
