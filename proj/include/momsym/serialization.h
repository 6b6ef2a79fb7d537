#ifndef MOMSYM_SERIALIZATION_H_
#define MOMSYM_SERIALIZATION_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "momsym/analysis.h"
#include "momsym/dense_matrix.h"
#include "momsym/laurent_symbol.h"
#include "momsym/momentary_symbol.h"
#include "momsym/scaling.h"
#include "momsym/spectra.h"
#include "momsym/worked_examples.h"

namespace momsym {

using Json = nlohmann::ordered_json;

// {"d":1,"s":1,"r":1,"coeffs":[{"k":[0],"m":[[[2.0,0.0]]]}, ...]}
Json symbol_to_json(const LaurentSymbol& f);
LaurentSymbol symbol_from_json(const Json& j);

// {"form":"one"} | {"form":"inverse_power","p":2,"base":"n+1"} |
// {"form":"ratio_N_over_n2"} | {"form":"table","values":{"8":0.125}}
// plus an optional "class" of "constant" | "decaying" | "diverging".
Json scaling_to_json(const CoefficientScaling& g);
CoefficientScaling scaling_from_json(const Json& j);

// {"terms":[{"scaling":{...},"symbol":{...}}, ...]}
Json momentary_to_json(const MomentarySymbol& m);
MomentarySymbol momentary_from_json(const Json& j);

// {"rows":..,"cols":..,"data":[[re,im],...]} (row-major)
Json matrix_to_json(const DenseMatrix& a);
DenseMatrix matrix_from_json(const Json& j);
// One row per line, entries "re+imj" separated by commas.
std::string matrix_to_csv(const DenseMatrix& a);
DenseMatrix matrix_from_csv(const std::string& text);

std::string spectrum_to_csv(const Spectrum& s);
Json spectrum_to_json(const Spectrum& s);

// Single column of angles.
std::string grid_to_csv(const std::vector<double>& angles);

// Columns j, exact, approx, abs_error (complex sides as re/im pairs).
std::string report_to_csv(const SpectrumReport& r);
Json report_to_json(const SpectrumReport& r);

Json example_report_to_json(const examples::ExampleReport& r);

// Shortest round-trip decimal representation.
std::string format_double(double x);
std::string format_complex(Complex z);  // "re+imj"
Complex parse_complex(const std::string& text);

Json parse_json(const std::string& text);
std::string read_text_file(const std::filesystem::path& path);
// Writes through a temporary file in the same directory, then renames.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace momsym

#endif  // MOMSYM_SERIALIZATION_H_
