#include "momsym/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <optional>

#include "momsym/analysis.h"
#include "momsym/errors.h"
#include "momsym/grids.h"
#include "momsym/matrices.h"
#include "momsym/momentary_symbol.h"
#include "momsym/serialization.h"
#include "momsym/spectra.h"
#include "momsym/worked_examples.h"

namespace momsym::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string kind;
  std::string matrix_kind = "toeplitz";
  std::vector<std::string> symbols;
  std::vector<std::string> scalings;
  std::string momentary;
  std::string matrix;
  std::string sizes;
  std::string cols;
  std::string levels;
  int N = 0;
  double eps = 0.0;
  double phi = 0.0;
  std::vector<std::string> grids;
  std::string out;
  std::string format = "csv";
  std::string bc = "dirichlet_neumann";
  std::string test = "abs_power_1";
  int example_id = 0;
  int n_example = 0;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    int x = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, x);
    if (ec != std::errc() || ptr != text.data() + comma || pos == comma)
      throw ParseError(std::string("bad ") + what + " list '" + text + "'");
    v.push_back(x);
    pos = comma + 1;
  }
  for (int x : v)
    if (x <= 0) throw ArgumentError(std::string(what) + " must be positive");
  return v;
}

std::vector<int> required_sizes(const Options& o) {
  if (o.sizes.empty()) throw ArgumentError("--n is required");
  return parse_int_list(o.sizes, "size");
}

LaurentSymbol load_symbol(const std::string& path) { return symbol_from_json(parse_json(read_text_file(path))); }

CoefficientScaling parse_scaling_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return scaling_from_json(parse_json(text));
  if (text == "one") return CoefficientScaling::One();
  if (text == "ratio_N_over_n2") return CoefficientScaling::RatioNOverNSquared();
  // inverse_power:<p>:<n|n+1>
  const std::string prefix = "inverse_power:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string rest = text.substr(prefix.size());
    const std::size_t colon = rest.find(':');
    const std::string base = colon == std::string::npos ? "n" : rest.substr(colon + 1);
    const std::string p = rest.substr(0, colon);
    int pv = 0;
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), pv);
    if (ec != std::errc() || ptr != p.data() + p.size() || (base != "n" && base != "n+1"))
      throw ParseError("bad scaling '" + text + "'");
    return CoefficientScaling::InversePower(pv, base == "n" ? SizeBase::kN : SizeBase::kNPlusOne);
  }
  if (fs::exists(text)) return scaling_from_json(parse_json(read_text_file(text)));
  throw ParseError("bad scaling '" + text + "'");
}

MomentarySymbol load_momentary(const Options& o) {
  if (!o.momentary.empty()) return momentary_from_json(parse_json(read_text_file(o.momentary)));
  if (o.symbols.empty()) throw ArgumentError("--symbol or --momentary is required");
  if (!o.scalings.empty() && o.scalings.size() != o.symbols.size())
    throw ArgumentError("--scaling must be given once per --symbol");
  std::vector<MomentaryTerm> terms;
  for (std::size_t i = 0; i < o.symbols.size(); ++i) {
    terms.push_back({o.scalings.empty() ? CoefficientScaling::One() : parse_scaling_arg(o.scalings[i]),
                     load_symbol(o.symbols[i])});
  }
  return MomentarySymbol(std::move(terms));
}

DenseMatrix build_matrix(const std::string& kind, const LaurentSymbol& f, const Options& o,
                         std::span<const int> n) {
  auto single = [&]() {
    if (n.size() != 1) throw ArgumentError("--kind " + kind + " takes a single size");
    return n[0];
  };
  if (kind == "toeplitz") {
    if (f.d() == 1) return toeplitz(f, single());
    return multilevel_toeplitz(f, n);
  }
  if (kind == "multilevel") return multilevel_toeplitz(f, n);
  if (kind == "circulant") return circulant(f, single());
  if (kind == "tau") return tau_matrix(f, o.eps, o.phi, single());
  if (kind == "toeplitz-rect") {
    if (o.cols.empty()) throw ArgumentError("--kind toeplitz-rect needs --m");
    const auto m = parse_int_list(o.cols, "column size");
    return multilevel_toeplitz_rect(f, n, m);
  }
  throw ParseError("unknown matrix kind '" + kind + "'");
}

DenseMatrix load_matrix(const std::string& path) {
  const std::string text = read_text_file(path);
  if (fs::path(path).extension() == ".json") return matrix_from_json(parse_json(text));
  return matrix_from_csv(text);
}

void emit(const Options& o, const std::string& filename, const std::string& contents, std::ostream& out) {
  if (o.out.empty()) {
    out << contents;
    if (!contents.empty() && contents.back() != '\n') out << '\n';
  } else {
    write_text_file_atomic(fs::path(o.out) / filename, contents);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string file_safe(std::string s) {
  for (char& c : s)
    if (c == '@' || c == ':' || c == ',' || c == '/') c = '_';
  return s;
}

int cmd_build(const Options& o, std::ostream& out) {
  if (o.symbols.size() != 1) throw ArgumentError("build takes exactly one --symbol");
  const auto sizes = required_sizes(o);
  const DenseMatrix a = build_matrix(o.kind, load_symbol(o.symbols.front()), o, sizes);
  if (o.format == "json") emit(o, "matrix_" + o.kind + ".json", dump(matrix_to_json(a)), out);
  else emit(o, "matrix_" + o.kind + ".csv", matrix_to_csv(a), out);
  return kOk;
}

Spectrum spectrum_of(const DenseMatrix& a, const std::string& kind) {
  if (kind == "hermitian") return eig_hermitian(a);
  if (kind == "singular") return singular_values(a);
  if (kind == "general") return eig_general_small(a);
  throw ParseError("unknown spectrum kind '" + kind + "'");
}

DenseMatrix matrix_from_options(const Options& o, const LaurentSymbol* frozen) {
  if (!o.matrix.empty()) return load_matrix(o.matrix);
  const auto sizes = required_sizes(o);
  if (frozen) return build_matrix(o.matrix_kind, *frozen, o, sizes);
  if (o.symbols.size() != 1) throw ArgumentError("pass --matrix or one --symbol");
  return build_matrix(o.matrix_kind, load_symbol(o.symbols.front()), o, sizes);
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Spectrum s = spectrum_of(matrix_from_options(o, nullptr), o.kind);
  if (o.format == "json") emit(o, "spectrum_" + o.kind + ".json", dump(spectrum_to_json(s)), out);
  else emit(o, "spectrum_" + o.kind + ".csv", spectrum_to_csv(s), out);
  return kOk;
}

std::vector<GridSpec> grids_from_options(const Options& o, std::span<const int> points, int d) {
  if (static_cast<int>(o.grids.size()) != d)
    throw ArgumentError("expected " + std::to_string(d) + " --grid options, one per variable");
  if (static_cast<int>(points.size()) != d)
    throw ArgumentError("grid sizes do not match the number of variables");
  std::vector<GridSpec> g;
  for (int i = 0; i < d; ++i) g.push_back(parse_grid(o.grids[i], points[i]));
  return g;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const MomentarySymbol m = load_momentary(o);
  std::vector<int> sizes = required_sizes(o);
  if (o.N > 0) sizes.insert(sizes.begin(), o.N);
  const std::vector<int> points = o.levels.empty() ? sizes : parse_int_list(o.levels, "level");
  const auto grids = grids_from_options(o, points, m.d());

  const LaurentSymbol frozen = m.at(sizes);
  Options build = o;
  build.sizes.clear();
  for (std::size_t i = 0; i < points.size(); ++i) build.sizes += (i ? "," : "") + std::to_string(points[i]);
  const Spectrum exact = spectrum_of(matrix_from_options(build, &frozen), o.kind);

  SpectrumReport glt = compare(exact, sample_spectrum_approx(m.glt_symbol(), grids));
  SpectrumReport mom = compare(exact, sample_spectrum_approx(m, grids, sizes));
  glt.symbol_kind = SymbolKind::kGlt;
  mom.symbol_kind = SymbolKind::kMomentary;
  for (auto* r : {&glt, &mom}) {
    r->grid = grids;
    r->size = sizes;
    r->label = to_string(r->symbol_kind) + "@" + grids.front().name();
  }

  if (o.out.empty()) {
    Json j{{"glt", report_to_json(glt)}, {"momentary", report_to_json(mom)}};
    if (o.format == "json") {
      out << dump(j);
    } else {
      out << "# glt\n" << report_to_csv(glt) << "# momentary\n" << report_to_csv(mom);
    }
  } else {
    for (const auto* r : {&glt, &mom}) {
      const std::string stem = "compare_" + file_safe(r->label);
      write_text_file_atomic(fs::path(o.out) / (stem + ".json"), dump(report_to_json(*r)));
      write_text_file_atomic(fs::path(o.out) / (stem + ".csv"), report_to_csv(*r));
    }
  }
  return kOk;
}

int cmd_grid(const Options& o, std::ostream& out) {
  if (o.grids.size() != 1) throw ArgumentError("grid takes exactly one --grid");
  const auto sizes = required_sizes(o);
  if (sizes.size() != 1) throw ArgumentError("grid takes a single size");
  const GridSpec g = parse_grid(o.grids.front(), sizes[0]);
  const auto angles = g.angles();
  if (o.format == "json") {
    emit(o, "grid_" + file_safe(g.name()) + ".json", dump(Json{{"grid", g.name()}, {"theta", angles}}), out);
  } else {
    emit(o, "grid_" + file_safe(g.name()) + ".csv", grid_to_csv(angles), out);
  }
  return kOk;
}

int quad_points() {
  const char* env = std::getenv("MOMSYM_QUAD_POINTS");
  if (!env || !*env) return kDefaultQuadPoints;
  int v = 0;
  const std::string s = env;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 2)
    throw ParseError("MOMSYM_QUAD_POINTS must be an integer >= 2");
  return v;
}

int cmd_distribution(const Options& o, std::ostream& out) {
  if (o.symbols.size() != 1) throw ArgumentError("distribution takes exactly one --symbol");
  const LaurentSymbol f = load_symbol(o.symbols.front());
  const DenseMatrix a = matrix_from_options(o, &f);
  const Spectrum s = spectrum_of(a, o.kind);
  const DistributionReport r = distribution_test(s, f, AngleBox{}, parse_test_function(o.test), quad_points());
  const Json j{{"test_function", r.test_function_id},
               {"discrete_mean", r.discrete_mean},
               {"integral_mean", r.integral_mean},
               {"gap", r.gap},
               {"domain_measure", r.domain_measure}};
  if (o.format == "json") {
    emit(o, "distribution_" + r.test_function_id + ".json", dump(j), out);
  } else {
    emit(o, "distribution_" + r.test_function_id + ".csv",
         "test_function,discrete_mean,integral_mean,gap\n" + r.test_function_id + "," +
             format_double(r.discrete_mean) + "," + format_double(r.integral_mean) + "," + format_double(r.gap) +
             "\n",
         out);
  }
  return kOk;
}

// Curves g, g_M of X^T X over [0, pi] and the eigenvalues placed on the
// tau_{0,0} grid, for external plotting.
void write_example2_plot_data(const Options& o, int n, const std::string& stem) {
  const double h = 1.0 / n;
  std::string curves = "theta,g,g_M\n";
  constexpr int kPoints = 201;
  for (int i = 0; i < kPoints; ++i) {
    const double t = std::numbers::pi * i / (kPoints - 1);
    const double g = 5.0 + 4.0 * std::cos(t);
    const double gm = 1.0 + (2.0 + h) * (2.0 + h) + 2.0 * (2.0 + h) * std::cos(t);
    curves += format_double(t) + "," + format_double(g) + "," + format_double(gm) + "\n";
  }
  const DenseMatrix x = examples::example2_matrix(n);
  const Spectrum s = eig_hermitian(adjoint(x) * x);
  const auto grid = tau_eigen_grid(0, 0, n);
  std::string eigs = "theta,eigenvalue\n";
  // Descending eigenvalues pair with the ascending grid of a decreasing symbol.
  for (int j = 0; j < n; ++j) eigs += format_double(grid[j]) + "," + format_double(s.values[n - 1 - j]) + "\n";
  write_text_file_atomic(fs::path(o.out) / (stem + "_curves.csv"), curves);
  write_text_file_atomic(fs::path(o.out) / (stem + "_eigenvalues.csv"), eigs);
}

int cmd_example(const Options& o, std::ostream& out, std::ostream& err) {
  examples::ExampleReport r;
  std::string params;
  const int n = o.n_example;
  auto need_n = [&] {
    if (n <= 0) throw ArgumentError("--n is required");
  };
  switch (o.example_id) {
    case 1: {
      need_n();
      const auto bc = examples::parse_boundary_condition(o.bc);
      r = examples::example1(n, bc);
      params = "n" + std::to_string(n) + "_" + examples::to_string(bc);
      break;
    }
    case 2:
      need_n();
      r = examples::example2(n);
      params = "n" + std::to_string(n);
      break;
    case 3:
      need_n();
      if (o.N <= 0) throw ArgumentError("--N is required");
      r = examples::example3(o.N, n);
      params = "N" + std::to_string(o.N) + "_n" + std::to_string(n);
      break;
    case 4:
      need_n();
      r = examples::example4(n);
      params = "n" + std::to_string(n);
      break;
    default:
      throw ArgumentError("example id must be 1, 2, 3 or 4");
  }
  const std::string stem = "example" + std::to_string(o.example_id) + "_" + params;
  const std::string json = dump(example_report_to_json(r));
  if (o.out.empty()) {
    out << json;
  } else {
    write_text_file_atomic(fs::path(o.out) / (stem + ".json"), json);
    for (const auto& rep : r.reports)
      write_text_file_atomic(fs::path(o.out) / (stem + "_" + file_safe(rep.label) + ".csv"), report_to_csv(rep));
    if (o.example_id == 2) write_example2_plot_data(o, n, stem + "_fig1");
    for (const auto& f : r.flags) out << (f.passed ? "PASS " : "FAIL ") << f.name << "\n";
  }
  if (!r.all_passed()) {
    for (const auto& name : r.failed_flags()) err << "failed claim: " << name << " (" << r.flag(name).detail << ")\n";
    return kFailedClaim;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"momentary symbols for Toeplitz-like matrices", "momsym"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "output directory (stdout when omitted)");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_matrix_source = [&](CLI::App* c) {
    c->add_option("--matrix", o.matrix, "matrix file (.csv or .json)");
    c->add_option("--matrix-kind", o.matrix_kind, "builder when no --matrix is given")
        ->check(CLI::IsMember({"toeplitz", "multilevel", "circulant", "tau", "toeplitz-rect"}));
    c->add_option("--eps", o.eps, "tau corner parameter eps");
    c->add_option("--phi", o.phi, "tau corner parameter phi");
    c->add_option("--m", o.cols, "column sizes for toeplitz-rect");
  };

  auto* build = app.add_subcommand("build", "build a structured matrix from a symbol");
  build->add_option("--kind", o.kind, "matrix kind")
      ->required()
      ->check(CLI::IsMember({"toeplitz", "multilevel", "circulant", "tau", "toeplitz-rect"}));
  build->add_option("--symbol", o.symbols, "symbol JSON file")->required();
  build->add_option("--n", o.sizes, "size, or comma-separated sizes per level")->required();
  build->add_option("--m", o.cols, "column sizes for toeplitz-rect");
  build->add_option("--eps", o.eps, "tau corner parameter eps");
  build->add_option("--phi", o.phi, "tau corner parameter phi");
  add_common(build);

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of a matrix file or built matrix");
  spectrum->add_option("--kind", o.kind, "spectrum kind")
      ->required()
      ->check(CLI::IsMember({"hermitian", "singular", "general"}));
  spectrum->add_option("--symbol", o.symbols, "symbol JSON file");
  spectrum->add_option("--n", o.sizes, "size(s) for the builder");
  add_matrix_source(spectrum);
  add_common(spectrum);

  auto* cmp = app.add_subcommand("compare", "exact spectrum against GLT and momentary samplings");
  o.kind = "hermitian";
  cmp->add_option("--kind", o.kind, "spectrum kind")->check(CLI::IsMember({"hermitian", "singular", "general"}));
  cmp->add_option("--symbol", o.symbols, "symbol JSON file, one per term");
  cmp->add_option("--scaling", o.scalings, "scaling per term: JSON, file, one, inverse_power:<p>:<n|n+1>, ratio_N_over_n2");
  cmp->add_option("--momentary", o.momentary, "momentary symbol JSON file");
  cmp->add_option("--n", o.sizes, "size parameter(s)")->required();
  cmp->add_option("--N", o.N, "leading size parameter (prepended to --n)");
  cmp->add_option("--levels", o.levels, "matrix levels and grid sizes when they differ from the size");
  cmp->add_option("--grid", o.grids, "grid per variable: tau:<eps>,<phi> | circulant | uniform-open")->required();
  add_matrix_source(cmp);
  add_common(cmp);

  auto* grid = app.add_subcommand("grid", "export a sampling grid");
  grid->add_option("--grid", o.grids, "grid name")->required();
  grid->add_option("--n", o.sizes, "number of points")->required();
  add_common(grid);

  auto* dist = app.add_subcommand("distribution", "distribution gap for a test function");
  o.kind = "hermitian";
  dist->add_option("--kind", o.kind, "spectrum kind")->check(CLI::IsMember({"hermitian", "singular"}));
  dist->add_option("--symbol", o.symbols, "symbol JSON file")->required();
  dist->add_option("--n", o.sizes, "size(s)");
  dist->add_option("--test", o.test, "abs_power_<p> or chebyshev_<k>");
  add_matrix_source(dist);
  add_common(dist);

  auto* ex = app.add_subcommand("example", "run one of the four worked examples");
  ex->add_option("id", o.example_id, "example id")->required()->check(CLI::Range(1, 4));
  ex->add_option("--n", o.n_example, "size n");
  ex->add_option("--N", o.N, "time steps N (example 3)");
  ex->add_option("--bc", o.bc, "boundary condition for example 1")
      ->check(CLI::IsMember({"dirichlet_neumann", "dirichlet", "periodic"}));
  add_common(ex);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*spectrum) return cmd_spectrum(o, out);
    if (*cmp) return cmd_compare(o, out);
    if (*grid) return cmd_grid(o, out);
    if (*dist) return cmd_distribution(o, out);
    if (*ex) return cmd_example(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << "\n";
    return kShapeError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}

}  // namespace momsym::cli
