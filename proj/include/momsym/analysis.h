#ifndef MOMSYM_ANALYSIS_H_
#define MOMSYM_ANALYSIS_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "momsym/dense_matrix.h"
#include "momsym/grids.h"
#include "momsym/laurent_symbol.h"
#include "momsym/momentary_symbol.h"
#include "momsym/spectra.h"

namespace momsym {

enum class SymbolKind { kGlt, kMomentary };
std::string to_string(SymbolKind kind);

// Sorted symbol samples. `real` is false when some sample was not real, in
// which case ordering is by (real, imag).
struct Samples {
  std::vector<Complex> values;
  bool real = true;
  std::vector<double> real_values() const;
};

// Samples the symbol on the tensor product of `grids` (one per variable).
// Matrix-valued samples contribute their s eigenvalues. `size` feeds the
// coefficient scalings.
Samples sample_spectrum_approx(const MomentarySymbol& sym, std::span<const GridSpec> grids,
                               std::span<const int> size);
Samples sample_spectrum_approx(const LaurentSymbol& sym, std::span<const GridSpec> grids);

struct SpectrumReport {
  Spectrum exact;
  Samples approx;
  std::vector<double> per_index_error;
  double max_error = 0.0;
  std::vector<GridSpec> grid;
  SymbolKind symbol_kind = SymbolKind::kGlt;
  std::vector<int> size;
  std::string label;
};

// Index-paired absolute errors after sorting both sides.
SpectrumReport compare(const Spectrum& exact, const Samples& approx);

struct TauCheck {
  bool ok = false;
  double residual = 0.0;
};

// ||a - T_{n,eps,phi}(f)||_max <= 1e-12 (1 + ||a||_max).
TauCheck verify_tau_decomposition(const DenseMatrix& a, const LaurentSymbol& f, double eps,
                                  double phi);

// Descending eigenvalues of T_{n,0,-1}(f), T_{n,0,-1/2}(f), T_{n,0,0}(f) and
// the bounds for j = 2..n-1 as stated (lambda_j(T_{n,0,0}) on top) and as in
// the rank-one argument (lambda_{j+1}(T_{n,0,0}) on top).
struct InterlacingReport {
  int n = 0;
  std::vector<double> lower;   // T_{n,0,-1}
  std::vector<double> middle;  // T_{n,0,-1/2}
  std::vector<double> upper;   // T_{n,0,0}
  std::vector<bool> stated_bound;  // index j-2
  std::vector<bool> proof_bound;
  bool stated_holds = false;
  bool proof_holds = false;
};

inline constexpr double kInterlacingTol = 1e-12;

InterlacingReport interlacing_check(const LaurentSymbol& f, int n);

struct ZeroDistributionStat {
  int size = 0;
  double rank_ratio = 0.0;
  double trace_norm_ratio = 0.0;
};

std::vector<ZeroDistributionStat> zero_distribution_stats(
    const std::function<DenseMatrix(int)>& builder, std::span<const int> sizes);

}  // namespace momsym

#endif  // MOMSYM_ANALYSIS_H_
