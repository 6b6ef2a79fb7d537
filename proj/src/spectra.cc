#include "momsym/spectra.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "momsym/errors.h"
#include "momsym/kernels.h"

namespace momsym {

std::string to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::kHermitianEig:
      return "hermitian_eig";
    case SpectrumKind::kSingular:
      return "singular";
    case SpectrumKind::kGeneralEig:
      return "general_eig";
  }
  return "";
}

std::vector<Complex> Spectrum::as_complex() const {
  if (kind == SpectrumKind::kGeneralEig) return complex_values;
  return {values.begin(), values.end()};
}

namespace {

inline double conj_of(double x) { return x; }
inline Complex conj_of(Complex x) { return std::conj(x); }
inline double real_of(double x) { return x; }
inline double real_of(Complex x) { return x.real(); }

// Cyclic Jacobi on a full Hermitian matrix stored row-major. Each rotation
// first rotates the phase of a_pq away and then applies a real Givens
// rotation, so the same code serves real and complex input.
template <typename T>
class Jacobi {
 public:
  Jacobi(std::vector<T> a, std::size_t n, bool want_vectors)
      : a_(std::move(a)), n_(n), want_vectors_(want_vectors) {
    if (want_vectors_) {
      v_.assign(n * n, T(0));
      for (std::size_t i = 0; i < n; ++i) v_[i * n + i] = T(1);
    }
  }

  void run() {
    double frob2 = 0.0;
    for (const T& x : a_) frob2 += std::norm(Complex(x));
    const double target2 = 1e-24 * frob2;
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
      const double off = off2();
      if (off <= target2) return;
      // Early sweeps skip rotations well below the mean off-diagonal size.
      thresh_ = sweep < 3 ? 0.2 * std::sqrt(off) / static_cast<double>(n_ * n_) : 0.0;
      for (std::size_t p = 0; p + 1 < n_; ++p)
        for (std::size_t q = p + 1; q < n_; ++q) rotate(p, q, sweep);
    }
    if (off2() <= target2) return;
    throw NumericError("eig_hermitian: Jacobi did not converge in " +
                       std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<double> diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = real_of(a_[i * n_ + i]);
    return d;
  }
  const std::vector<T>& vectors() const { return v_; }

 private:
  double off2() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) s += 2.0 * std::norm(Complex(a_[i * n_ + j]));
    return s;
  }

  void rotate(std::size_t p, std::size_t q, int sweep) {
    const std::size_t n = n_;
    T* rp = &a_[p * n];
    T* rq = &a_[q * n];
    const T apq = rp[q];
    const double mag = std::abs(apq);
    if (mag == 0.0 || mag < thresh_) return;
    const double app = real_of(rp[p]);
    const double aqq = real_of(rq[q]);
    // Negligible entries are dropped outright once the sweep is under way.
    const double g = 100.0 * mag;
    if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
      rp[q] = T(0);
      rq[p] = T(0);
      return;
    }
    const T u = apq / mag;  // phase
    const double theta = (aqq - app) / (2.0 * mag);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // Rows p and q in place (contiguous), then mirror into the columns.
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p || k == q) continue;
      const T x = rp[k];
      const T y = rq[k] * u;
      rp[k] = c * x - s * y;
      rq[k] = s * x + c * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p || k == q) continue;
      a_[k * n + p] = conj_of(rp[k]);
      a_[k * n + q] = conj_of(rq[k]);
    }
    rp[p] = T(app - t * mag);
    rq[q] = T(aqq + t * mag);
    rp[q] = T(0);
    rq[p] = T(0);
    if (want_vectors_) {
      const T cu = conj_of(u);
      for (std::size_t k = 0; k < n; ++k) {
        T* vk = &v_[k * n];
        const T x = vk[p];
        const T y = vk[q] * cu;
        vk[p] = c * x - s * y;
        vk[q] = s * x + c * y;
      }
    }
  }

  std::vector<T> a_;
  std::size_t n_;
  double thresh_ = 0.0;
  bool want_vectors_;
  std::vector<T> v_;
};

void check_hermitian(const DenseMatrix& a) {
  if (!a.is_square()) throw ArgumentError("eig_hermitian: matrix must be square");
  if (!all_finite(a)) throw ArgumentError("eig_hermitian: matrix has non-finite entries");
  if (!is_hermitian(a, kHermitianInputTol))
    throw ArgumentError("eig_hermitian: matrix is not Hermitian within 1e-10");
}

HermitianEigenDecomposition hermitian_impl(const DenseMatrix& a, bool want_vectors) {
  check_hermitian(a);
  const std::size_t n = a.rows();
  std::vector<double> diag;
  std::vector<Complex> vecs;
  if (is_real(a)) {
    std::vector<double> buf(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) buf[i * n + j] = 0.5 * (a(i, j).real() + a(j, i).real());
    Jacobi<double> jac(std::move(buf), n, want_vectors);
    jac.run();
    diag = jac.diagonal();
    vecs.assign(jac.vectors().begin(), jac.vectors().end());
  } else {
    std::vector<Complex> buf(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) buf[i * n + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
    Jacobi<Complex> jac(std::move(buf), n, want_vectors);
    jac.run();
    diag = jac.diagonal();
    vecs = jac.vectors();
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
  HermitianEigenDecomposition out;
  out.spectrum.kind = SpectrumKind::kHermitianEig;
  out.spectrum.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.spectrum.values[j] = diag[order[j]];
  if (want_vectors) {
    out.vectors = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.vectors(i, j) = vecs[i * n + order[j]];
  }
  return out;
}

// Tarjan's strongly connected components of the graph i -> j for a_ij != 0.
std::vector<std::vector<std::size_t>> strong_components(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  // Iterative DFS: frames of (node, next neighbour).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      bool descended = false;
      while (next < n) {
        const std::size_t w = next++;
        if (w == v || a(v, w) == Complex(0.0)) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      const std::size_t node = v;
      if (low[node] == index[node]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != node);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[node]);
      }
    }
  }
  return comps;
}

void eig_2x2(Complex a, Complex b, Complex c, Complex d, std::vector<Complex>& out) {
  const Complex half_tr = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  out.push_back(half_tr + disc);
  out.push_back(half_tr - disc);
}

// Householder reduction to upper Hessenberg form followed by single-shift
// complex QR with Wilkinson shifts.
void eig_hessenberg_qr(std::vector<Complex> h, std::size_t n, std::vector<Complex>& out) {
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return h[i * n + j]; };
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha2 += std::norm(at(i, k));
    const double alpha = std::sqrt(alpha2);
    if (alpha == 0.0) continue;
    std::vector<Complex> v(n - k - 1);
    for (std::size_t i = k + 1; i < n; ++i) v[i - k - 1] = at(i, k);
    const Complex x0 = v[0];
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    v[0] += phase * alpha;
    double vnorm2 = 0.0;
    for (const auto& x : v) vnorm2 += std::norm(x);
    if (vnorm2 == 0.0) continue;
    // H <- (I - 2 v v^H / |v|^2) H (I - 2 v v^H / |v|^2)
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i - k - 1]) * at(i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) at(i, j) -= v[i - k - 1] * dot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += at(i, j) * v[j - k - 1];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= dot * std::conj(v[j - k - 1]);
    }
    for (std::size_t i = k + 2; i < n; ++i) at(i, k) = 0.0;
  }

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::size_t hi = n - 1;
  int iter = 0;
  const int max_iter = 60 * static_cast<int>(n);
  int total = 0;
  while (true) {
    if (hi == 0) {
      out.push_back(at(0, 0));
      return;
    }
    std::size_t l = hi;
    while (l > 0) {
      const double scale = std::abs(at(l, l)) + std::abs(at(l - 1, l - 1));
      if (std::abs(at(l, l - 1)) <= kEps * (scale == 0.0 ? 1.0 : scale)) {
        at(l, l - 1) = 0.0;
        break;
      }
      --l;
    }
    if (l == hi) {
      out.push_back(at(hi, hi));
      --hi;
      iter = 0;
      continue;
    }
    if (l + 1 == hi) {
      eig_2x2(at(l, l), at(l, hi), at(hi, l), at(hi, hi), out);
      if (l == 0) return;
      hi = l - 1;
      iter = 0;
      continue;
    }
    if (++total > max_iter) throw NumericError("eig_general_small: QR iteration did not converge");
    ++iter;
    Complex mu;
    if (iter % 11 == 10) {
      mu = at(hi, hi) + std::abs(at(hi, hi - 1)) * 0.75;
    } else {
      std::vector<Complex> two;
      eig_2x2(at(hi - 1, hi - 1), at(hi - 1, hi), at(hi, hi - 1), at(hi, hi), two);
      mu = std::abs(two[0] - at(hi, hi)) < std::abs(two[1] - at(hi, hi)) ? two[0] : two[1];
    }
    for (std::size_t i = l; i <= hi; ++i) at(i, i) -= mu;
    std::vector<Complex> cs(hi - l), ss(hi - l);
    for (std::size_t k = l; k < hi; ++k) {
      const Complex a = at(k, k), b = at(k + 1, k);
      const double r = std::hypot(std::abs(a), std::abs(b));
      Complex c = 1.0, s = 0.0;
      if (r != 0.0) {
        c = a / r;
        s = b / r;
      }
      cs[k - l] = c;
      ss[k - l] = s;
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex x = at(k, j), y = at(k + 1, j);
        at(k, j) = std::conj(c) * x + std::conj(s) * y;
        at(k + 1, j) = -s * x + c * y;
      }
    }
    for (std::size_t k = l; k < hi; ++k) {
      const Complex c = cs[k - l], s = ss[k - l];
      for (std::size_t i = l; i <= std::min(k + 2, hi); ++i) {
        const Complex x = at(i, k), y = at(i, k + 1);
        at(i, k) = x * c + y * s;
        at(i, k + 1) = -x * std::conj(s) + y * std::conj(c);
      }
    }
    for (std::size_t i = l; i <= hi; ++i) at(i, i) += mu;
  }
}

bool complex_less(const Complex& x, const Complex& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

}  // namespace

Spectrum eig_hermitian(const DenseMatrix& a) { return hermitian_impl(a, false).spectrum; }

HermitianEigenDecomposition eig_hermitian_vectors(const DenseMatrix& a) {
  return hermitian_impl(a, true);
}

Spectrum eig_general_small(const DenseMatrix& a) {
  if (!a.is_square()) throw ArgumentError("eig_general_small: matrix must be square");
  if (a.rows() > kGeneralEigMaxOrder)
    throw ArgumentError("eig_general_small: order " + std::to_string(a.rows()) + " exceeds " +
                        std::to_string(kGeneralEigMaxOrder));
  if (!all_finite(a)) throw ArgumentError("eig_general_small: matrix has non-finite entries");
  Spectrum out;
  out.kind = SpectrumKind::kGeneralEig;
  for (const auto& comp : strong_components(a)) {
    const std::size_t m = comp.size();
    if (m == 1) {
      out.complex_values.push_back(a(comp[0], comp[0]));
    } else if (m == 2) {
      eig_2x2(a(comp[0], comp[0]), a(comp[0], comp[1]), a(comp[1], comp[0]),
              a(comp[1], comp[1]), out.complex_values);
    } else {
      std::vector<Complex> block(m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) block[i * m + j] = a(comp[i], comp[j]);
      eig_hessenberg_qr(std::move(block), m, out.complex_values);
    }
  }
  std::sort(out.complex_values.begin(), out.complex_values.end(), complex_less);
  return out;
}

Spectrum singular_values(const DenseMatrix& a) {
  const DenseMatrix ah = adjoint(a);
  const DenseMatrix gram = a.rows() >= a.cols() ? kernels::matmul(ah, a) : kernels::matmul(a, ah);
  Spectrum s = eig_hermitian(gram);
  s.kind = SpectrumKind::kSingular;
  for (double& v : s.values) v = std::sqrt(std::max(v, 0.0));
  return s;
}

Complex fourier_sum(const LaurentSymbol& f, int n, double theta) {
  if (f.d() != 1 || !f.is_scalar())
    throw ArgumentError("fourier_sum: symbol must be univariate and scalar");
  Complex sum = 0.0;
  for (const auto& [k, m] : f.coefficients())
    if (std::abs(k[0]) < n) sum += m(0, 0) * std::polar(1.0, k[0] * theta);
  return sum;
}

double TestFunction::operator()(double x) const {
  if (kind == Kind::kAbsPower) return std::pow(std::abs(x), order);
  // Three-term recurrence, valid for all real x.
  if (order == 0) return 1.0;
  double t0 = 1.0, t1 = x;
  for (int k = 1; k < order; ++k) {
    const double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

std::string TestFunction::id() const {
  return (kind == Kind::kAbsPower ? "abs_power_" : "chebyshev_") + std::to_string(order);
}

TestFunction parse_test_function(const std::string& id) {
  auto parse_order = [&](std::size_t prefix) {
    const std::string digits = id.substr(prefix);
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("test function: bad order in '" + id + "'");
    return std::stoi(digits);
  };
  if (id.starts_with("abs_power_")) return {TestFunction::Kind::kAbsPower, parse_order(10)};
  if (id.starts_with("chebyshev_")) return {TestFunction::Kind::kChebyshev, parse_order(10)};
  throw ParseError("test function: expected abs_power_<p> or chebyshev_<k>, got '" + id + "'");
}

DistributionReport distribution_test(const Spectrum& spectrum, const LaurentSymbol& f,
                                     const AngleBox& domain, const TestFunction& test,
                                     int quad_points_per_dim) {
  if (spectrum.kind == SpectrumKind::kGeneralEig)
    throw ArgumentError("distribution_test: needs Hermitian eigenvalues or singular values");
  if (spectrum.values.empty()) throw ArgumentError("distribution_test: empty spectrum");
  if (quad_points_per_dim < 2) throw ArgumentError("distribution_test: need at least 2 points");
  const bool singular = spectrum.kind == SpectrumKind::kSingular;
  if (!singular && f.s() != f.r())
    throw ArgumentError("distribution_test: eigenvalue test needs a square symbol");
  const int d = f.d();
  const bool full = domain.lo.empty() && domain.hi.empty();
  if (!full && (static_cast<int>(domain.lo.size()) != d || static_cast<int>(domain.hi.size()) != d))
    throw ArgumentError("distribution_test: domain arity does not match the symbol");

  DistributionReport rep;
  rep.test_function_id = test.id();
  double sum = 0.0;
  for (double v : spectrum.values) sum += test(v);
  rep.discrete_mean = sum / static_cast<double>(spectrum.values.size());

  const int m = quad_points_per_dim;
  std::vector<std::vector<double>> axes(d), weights(d);
  rep.domain_measure = 1.0;
  for (int i = 0; i < d; ++i) {
    if (full) {
      // Periodic trapezoid.
      for (int j = 0; j < m; ++j) {
        axes[i].push_back(-std::numbers::pi + 2.0 * std::numbers::pi * j / m);
        weights[i].push_back(1.0 / m);
      }
      rep.domain_measure *= 2.0 * std::numbers::pi;
    } else {
      const double lo = domain.lo[i], hi = domain.hi[i];
      if (!(lo >= -std::numbers::pi && hi <= std::numbers::pi && lo < hi))
        throw ArgumentError("distribution_test: domain must be a nonempty box in [-pi, pi]^d");
      for (int j = 0; j < m; ++j) {
        axes[i].push_back(lo + (hi - lo) * j / (m - 1));
        weights[i].push_back((j == 0 || j == m - 1 ? 0.5 : 1.0) / (m - 1));
      }
      rep.domain_measure *= hi - lo;
    }
  }
  const auto integrand = [&](std::span<const double> theta) {
    const DenseMatrix fx = f.evaluate(theta);
    if (fx.rows() == 1 && fx.cols() == 1) {
      const Complex z = fx(0, 0);
      return test(singular ? std::abs(z) : z.real());
    }
    const Spectrum local = singular ? singular_values(fx) : eig_hermitian(fx);
    double acc = 0.0;
    for (double v : local.values) acc += test(v);
    return acc / static_cast<double>(local.values.size());
  };
  rep.integral_mean = kernels::tensor_quadrature_mean(integrand, axes, weights);
  if (!std::isfinite(rep.integral_mean)) throw NumericError("distribution_test: quadrature is not finite");
  rep.gap = std::abs(rep.discrete_mean - rep.integral_mean);
  return rep;
}

}  // namespace momsym
