#include "momsym/grids.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "momsym/errors.h"

namespace momsym {

namespace {

constexpr double kPi = std::numbers::pi;

void check_pair(int eps, int phi) {
  if (eps < -1 || eps > 1 || phi < -1 || phi > 1) {
    throw ArgumentError("tau grid: (eps, phi) must lie in {-1, 0, 1}, got (" +
                        std::to_string(eps) + ", " + std::to_string(phi) + ")");
  }
}

void check_n(int n, const char* op) {
  if (n <= 0) throw ArgumentError(std::string(op) + ": n must be positive, got " + std::to_string(n));
}

// theta_j = (j - offset) pi / (n + shift).
struct GridFormula {
  double offset;
  double shift;
};

GridFormula formula(int eps, int phi) {
  check_pair(eps, phi);
  // Rows eps = -1, 0, 1; columns phi = -1, 0, 1.
  static constexpr GridFormula table[3][3] = {
      {{0.0, 0.0}, {0.0, 0.5}, {0.5, 0.0}},
      {{0.0, 0.5}, {0.0, 1.0}, {0.5, 0.5}},
      {{0.5, 0.0}, {0.5, 0.5}, {1.0, 0.0}},
  };
  return table[eps + 1][phi + 1];
}

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ParseError("grid: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string pair_name(int eps, int phi) {
  return "(" + std::to_string(eps) + "," + std::to_string(phi) + ")";
}

}  // namespace

GridSpec GridSpec::Custom(std::vector<double> angles) {
  if (angles.empty()) throw ArgumentError("custom grid: needs at least one angle");
  for (double a : angles)
    if (!std::isfinite(a)) throw ArgumentError("custom grid: angles must be finite");
  const int n = static_cast<int>(angles.size());
  return {GridFamily::kCustom, 0, 0, n, std::move(angles)};
}

std::vector<double> GridSpec::angles() const {
  switch (family) {
    case GridFamily::kTau:
      return tau_eigen_grid(eps, phi, n);
    case GridFamily::kCirculant:
      return circulant_grid(n);
    case GridFamily::kUniformOpen:
      return tau_eigen_grid(0, 0, n);
    case GridFamily::kCustom:
      return custom;
  }
  return {};
}

std::string GridSpec::name() const {
  switch (family) {
    case GridFamily::kTau:
      return "tau:" + std::to_string(eps) + "," + std::to_string(phi);
    case GridFamily::kCirculant:
      return "circulant";
    case GridFamily::kUniformOpen:
      return "uniform-open";
    case GridFamily::kCustom:
      return "custom";
  }
  return "";
}

GridSpec parse_grid(std::string_view name, int n) {
  if (name == "circulant") return (check_n(n, "circulant grid"), GridSpec::Circulant(n));
  if (name == "uniform-open") return (check_n(n, "uniform-open grid"), GridSpec::UniformOpen(n));
  if (name.starts_with("tau:")) {
    const auto body = name.substr(4);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("grid: expected tau:<eps>,<phi>");
    const double e = parse_double(body.substr(0, comma), "eps");
    const double p = parse_double(body.substr(comma + 1), "phi");
    if (e != std::round(e) || p != std::round(p))
      throw ArgumentError("grid: tau grids exist only for eps, phi in {-1, 0, 1}");
    check_pair(static_cast<int>(e), static_cast<int>(p));
    check_n(n, "tau grid");
    return GridSpec::Tau(static_cast<int>(e), static_cast<int>(p), n);
  }
  if (name.starts_with("custom:")) {
    std::vector<double> angles;
    auto body = name.substr(7);
    while (true) {
      const auto comma = body.find(',');
      angles.push_back(parse_double(body.substr(0, comma), "angle"));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return GridSpec::Custom(std::move(angles));
  }
  throw ParseError("grid: unknown grid name '" + std::string(name) + "'");
}

std::vector<double> tau_eigen_grid(int eps, int phi, int n) {
  check_n(n, "tau_eigen_grid");
  const auto [offset, shift] = formula(eps, phi);
  std::vector<double> out(n);
  for (int j = 1; j <= n; ++j) out[j - 1] = (j - offset) * kPi / (n + shift);
  return out;
}

double tau_grid_h(int eps, int phi, int n) {
  check_n(n, "tau_grid_h");
  return 1.0 / (n + formula(eps, phi).shift);
}

DenseMatrix tau_eigvec_matrix(int eps, int phi, int n) {
  const auto theta = tau_eigen_grid(eps, phi, n);
  const double scale = std::sqrt(2.0 * tau_grid_h(eps, phi, n));
  DenseMatrix q(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      double arg = 0.0;
      if (eps == -1) arg = (i - 0.5) * theta[j - 1];
      else if (eps == 0) arg = i * theta[j - 1];
      else arg = (i - 0.5) * theta[j - 1] + kPi / 2;
      q(i - 1, j - 1) = scale * std::sin(arg);
    }
  }
  int half_col = -1;
  if (eps == -1 && phi == -1) half_col = n - 1;
  if (eps == 1 && phi == 1) half_col = 0;
  if (half_col >= 0)
    for (int i = 0; i < n; ++i) q(i, half_col) *= (1.0 / std::numbers::sqrt2);
  return q;
}

std::vector<double> circulant_grid(int n) {
  check_n(n, "circulant_grid");
  std::vector<double> out(n);
  for (int j = 1; j <= n; ++j) out[j - 1] = (j - 1) * 2.0 * kPi / n;
  return out;
}

DenseMatrix fourier_matrix(int n) {
  const auto theta = circulant_grid(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  DenseMatrix f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f(i, j) = std::polar(scale, i * theta[j]);
  return f;
}

DenseMatrix circulant_real_transform(int n) {
  const auto theta = circulant_grid(n);
  const double scale = std::sqrt(2.0 / n);
  const int split = (n + 2) / 2;
  DenseMatrix q(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double arg = j <= split ? i * theta[j - 1] + kPi / 2 : i * theta[j - 1];
      q(i - 1, j - 1) = scale * std::sin(arg);
    }
  }
  for (int i = 0; i < n; ++i) {
    q(i, 0) *= (1.0 / std::numbers::sqrt2);
    if (n % 2 == 0) q(i, n / 2) *= (1.0 / std::numbers::sqrt2);
  }
  return q;
}

bool GridOrderingReport::all_hold() const {
  for (const auto& l : links)
    if (!l.holds) return false;
  return true;
}

GridOrderingReport grid_ordering_report(int n) {
  check_n(n, "grid_ordering_report");
  struct Step {
    int le, lp, re, rp;
    bool equality;
  };
  static constexpr Step chain[] = {
      {1, 1, 0, 1, false},   {0, 1, 1, 0, true},    {1, 0, -1, 1, false},
      {-1, 1, 1, -1, true},  {1, -1, 0, 0, false},  {0, 0, -1, 0, false},
      {-1, 0, 0, -1, true},  {0, -1, -1, -1, false},
  };
  GridOrderingReport report{n, {}};
  for (const auto& st : chain) {
    const auto lhs = tau_eigen_grid(st.le, st.lp, n);
    const auto rhs = tau_eigen_grid(st.re, st.rp, n);
    GridOrderingLink link{pair_name(st.le, st.lp), pair_name(st.re, st.rp), st.equality, true, 0};
    for (int j = 0; j < n; ++j) {
      const double tol = 1e-14 * (1.0 + std::abs(rhs[j]));
      const bool ok = st.equality ? std::abs(lhs[j] - rhs[j]) <= tol : lhs[j] < rhs[j] - tol;
      if (!ok) {
        link.holds = false;
        link.first_violation_j = j + 1;
        break;
      }
    }
    report.links.push_back(std::move(link));
  }
  return report;
}

bool grid_ordering_check(int n) { return grid_ordering_report(n).all_hold(); }

}  // namespace momsym
