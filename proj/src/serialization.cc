#include "momsym/serialization.h"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "momsym/errors.h"

namespace momsym {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a complex entry [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("key '") + key + "' must be an integer");
  return v.get<int>();
}

Json coefficient_to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix coefficient_from_json(const Json& j, int s, int r) {
  if (!j.is_array() || static_cast<int>(j.size()) != s)
    throw ArgumentError("coefficient matrix must have " + std::to_string(s) + " rows");
  DenseMatrix m(s, r);
  for (int i = 0; i < s; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != r)
      throw ArgumentError("coefficient matrix rows must have " + std::to_string(r) + " entries");
    for (int k = 0; k < r; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

std::string size_key(const MultiIndex& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

MultiIndex parse_size_key(const std::string& key) {
  MultiIndex k;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t comma = std::min(key.find(',', pos), key.size());
    int v = 0;
    auto [ptr, ec] = std::from_chars(key.data() + pos, key.data() + comma, v);
    if (ec != std::errc() || ptr != key.data() + comma) throw ParseError("bad table size key '" + key + "'");
    k.push_back(v);
    pos = comma + 1;
  }
  return k;
}

ScalingClass parse_class(const std::string& s) {
  if (s == "constant") return ScalingClass::kConstant;
  if (s == "decaying") return ScalingClass::kDecaying;
  if (s == "diverging") return ScalingClass::kDiverging;
  throw ParseError("unknown scaling class '" + s + "'");
}

Json values_to_json(const Spectrum& s) {
  Json a = Json::array();
  if (s.kind == SpectrumKind::kGeneralEig) {
    for (const auto& z : s.complex_values) a.push_back(complex_to_json(z));
  } else {
    for (double v : s.values) a.push_back(v);
  }
  return a;
}

}  // namespace

Json symbol_to_json(const LaurentSymbol& f) {
  Json coeffs = Json::array();
  for (const auto& [k, m] : f.coefficients()) coeffs.push_back({{"k", k}, {"m", coefficient_to_json(m)}});
  return {{"d", f.d()}, {"s", f.s()}, {"r", f.r()}, {"coeffs", std::move(coeffs)}};
}

LaurentSymbol symbol_from_json(const Json& j) {
  const int d = int_field(j, "d"), s = int_field(j, "s"), r = int_field(j, "r");
  if (d <= 0 || s <= 0 || r <= 0) throw ArgumentError("symbol: d, s and r must be positive");
  LaurentSymbol f(d, s, r);
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("symbol: 'coeffs' must be an array");
  for (const auto& c : coeffs) {
    const Json& k = field(c, "k");
    if (!k.is_array()) throw ParseError("symbol: 'k' must be an array of integers");
    MultiIndex idx;
    for (const auto& v : k) {
      if (!v.is_number_integer()) throw ParseError("symbol: 'k' must be an array of integers");
      idx.push_back(v.get<int>());
    }
    if (static_cast<int>(idx.size()) != d) throw ArgumentError("symbol: multi-index arity differs from d");
    f.accumulate(idx, coefficient_from_json(field(c, "m"), s, r));
  }
  return f;
}

Json scaling_to_json(const CoefficientScaling& g) {
  Json j = std::visit(
      [](const auto& f) -> Json {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, scaling_form::One>) {
          return {{"form", "one"}};
        } else if constexpr (std::is_same_v<F, scaling_form::InversePower>) {
          return {{"form", "inverse_power"}, {"p", f.p}, {"base", f.base == SizeBase::kN ? "n" : "n+1"}};
        } else if constexpr (std::is_same_v<F, scaling_form::RatioNOverNSquared>) {
          return {{"form", "ratio_N_over_n2"}};
        } else {
          Json t{{"form", "table"}};
          if (!f.factors.empty()) {
            Json factors = Json::array();
            for (const auto& x : f.factors) factors.push_back(scaling_to_json(x));
            t["factors"] = std::move(factors);
          } else {
            Json values = Json::object();
            for (const auto& [k, v] : f.values) values[size_key(k)] = v;
            t["values"] = std::move(values);
          }
          return t;
        }
      },
      g.form());
  j["class"] = to_string(g.class_tag());
  return j;
}

CoefficientScaling scaling_from_json(const Json& j) {
  const Json& form = field(j, "form");
  if (!form.is_string()) throw ParseError("scaling: 'form' must be a string");
  const std::string name = form.get<std::string>();
  ScalingForm f;
  if (name == "one") {
    f = scaling_form::One{};
  } else if (name == "inverse_power") {
    const Json& base = field(j, "base");
    if (!base.is_string()) throw ParseError("scaling: 'base' must be \"n\" or \"n+1\"");
    const std::string b = base.get<std::string>();
    if (b != "n" && b != "n+1") throw ParseError("scaling: 'base' must be \"n\" or \"n+1\"");
    f = scaling_form::InversePower{int_field(j, "p"), b == "n" ? SizeBase::kN : SizeBase::kNPlusOne};
  } else if (name == "ratio_N_over_n2") {
    f = scaling_form::RatioNOverNSquared{};
  } else if (name == "table") {
    scaling_form::Table t;
    if (j.contains("factors")) {
      const Json& factors = j["factors"];
      if (!factors.is_array() || factors.empty()) throw ParseError("scaling: 'factors' must be a nonempty array");
      for (const auto& x : factors) t.factors.push_back(scaling_from_json(x));
    } else {
      const Json& values = field(j, "values");
      if (!values.is_object() || values.empty()) throw ParseError("scaling: 'values' must be a nonempty object");
      for (const auto& [k, v] : values.items()) {
        if (!v.is_number()) throw ParseError("scaling: table values must be numbers");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ArgumentError("scaling: table values must be finite");
        t.values[parse_size_key(k)] = x;
      }
    }
    f = std::move(t);
  } else {
    throw ParseError("scaling: unknown form '" + name + "'");
  }
  if (j.contains("class")) {
    if (!j["class"].is_string()) throw ParseError("scaling: 'class' must be a string");
    return CoefficientScaling(std::move(f), parse_class(j["class"].get<std::string>()));
  }
  return CoefficientScaling(std::move(f));
}

Json momentary_to_json(const MomentarySymbol& m) {
  Json terms = Json::array();
  for (const auto& t : m.terms())
    terms.push_back({{"scaling", scaling_to_json(t.scaling)}, {"symbol", symbol_to_json(t.symbol)}});
  return {{"terms", std::move(terms)}};
}

MomentarySymbol momentary_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty()) throw ParseError("momentary symbol: 'terms' must be a nonempty array");
  std::vector<MomentaryTerm> out;
  for (const auto& t : terms) out.push_back({scaling_from_json(field(t, "scaling")), symbol_from_json(field(t, "symbol"))});
  return MomentarySymbol(std::move(out));
}

Json matrix_to_json(const DenseMatrix& a) {
  Json data = Json::array();
  for (const auto& z : a.data()) data.push_back(complex_to_json(z));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

DenseMatrix matrix_from_json(const Json& j) {
  const int rows = int_field(j, "rows"), cols = int_field(j, "cols");
  if (rows <= 0 || cols <= 0) throw ArgumentError("matrix: rows and cols must be positive");
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows) * cols)
    throw ArgumentError("matrix: 'data' must hold rows * cols entries");
  DenseMatrix a(rows, cols);
  for (std::size_t i = 0; i < data.size(); ++i) a.data()[i] = complex_from_json(data[i]);
  if (!all_finite(a)) throw ArgumentError("matrix: entries must be finite");
  return a;
}

std::string matrix_to_csv(const DenseMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += format_complex(a(i, j));
    }
    out += '\n';
  }
  return out;
}

DenseMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Complex> row;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      row.push_back(parse_complex(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ArgumentError("matrix CSV: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix CSV: no rows");
  DenseMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
  if (!all_finite(a)) throw ArgumentError("matrix CSV: entries must be finite");
  return a;
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::string out;
  if (s.kind == SpectrumKind::kGeneralEig) {
    out = "re,im\n";
    for (const auto& z : s.complex_values) out += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
  } else {
    out = "value\n";
    for (double v : s.values) out += format_double(v) + "\n";
  }
  return out;
}

Json spectrum_to_json(const Spectrum& s) { return {{"kind", to_string(s.kind)}, {"values", values_to_json(s)}}; }

std::string grid_to_csv(const std::vector<double>& angles) {
  std::string out = "theta\n";
  for (double a : angles) out += format_double(a) + "\n";
  return out;
}

std::string report_to_csv(const SpectrumReport& r) {
  const bool real = r.exact.kind != SpectrumKind::kGeneralEig && r.approx.real;
  auto ex = r.exact.as_complex();
  auto ap = r.approx.values;
  auto less = [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::sort(ex.begin(), ex.end(), less);
  std::sort(ap.begin(), ap.end(), less);
  std::string out = real ? "j,exact,approx,abs_error\n" : "j,exact_re,exact_im,approx_re,approx_im,abs_error\n";
  for (std::size_t j = 0; j < ex.size(); ++j) {
    out += std::to_string(j + 1) + ",";
    if (real) {
      out += format_double(ex[j].real()) + "," + format_double(ap[j].real());
    } else {
      out += format_double(ex[j].real()) + "," + format_double(ex[j].imag()) + "," + format_double(ap[j].real()) +
             "," + format_double(ap[j].imag());
    }
    out += "," + format_double(r.per_index_error[j]) + "\n";
  }
  return out;
}

Json report_to_json(const SpectrumReport& r) {
  Json grids = Json::array();
  for (const auto& g : r.grid) grids.push_back(g.name());
  Json approx = Json::array();
  for (const auto& z : r.approx.values) {
    if (r.approx.real) approx.push_back(z.real());
    else approx.push_back(complex_to_json(z));
  }
  return {{"label", r.label},
          {"symbol_kind", to_string(r.symbol_kind)},
          {"grid", std::move(grids)},
          {"size", r.size},
          {"exact_kind", to_string(r.exact.kind)},
          {"max_error", r.max_error},
          {"exact", values_to_json(r.exact)},
          {"approx", std::move(approx)},
          {"per_index_error", r.per_index_error}};
}

Json example_report_to_json(const examples::ExampleReport& r) {
  Json flags = Json::array();
  for (const auto& f : r.flags) flags.push_back({{"name", f.name}, {"passed", f.passed}, {"detail", f.detail}});
  Json reports = Json::array();
  for (const auto& rep : r.reports) reports.push_back(report_to_json(rep));
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"example_id", r.example_id},
          {"params", std::move(params)},
          {"all_passed", r.all_passed()},
          {"flags", std::move(flags)},
          {"reports", std::move(reports)}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string s = format_double(z.real());
  s += im < 0 ? "-" : "+";
  s += format_double(std::abs(im));
  s += "j";
  return s;
}

Complex parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t.empty()) throw ParseError("empty complex entry");
  auto parse_real = [&](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError("bad complex entry '" + text + "'");
    return v;
  };
  if (t.back() != 'j' && t.back() != 'i') return {parse_real(t), 0.0};
  const std::string body = t.substr(0, t.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    const std::string_view im = body;
    if (im.empty() || im == "+") return {0.0, 1.0};
    if (im == "-") return {0.0, -1.0};
    return {0.0, parse_real(im)};
  }
  const std::string re = body.substr(0, split);
  const std::string im = body.substr(split);
  const double imv = im == "+" ? 1.0 : im == "-" ? -1.0 : parse_real(im);
  return {parse_real(re), imv};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const auto parent = path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace momsym
