#include "momsym/momentary_symbol.h"

#include <algorithm>

#include "momsym/errors.h"

namespace momsym {

namespace {

std::vector<MomentaryTerm> canonical_terms(std::vector<MomentaryTerm> terms) {
  if (terms.empty()) throw ArgumentError("MomentarySymbol: needs at least one term");
  const auto& first = terms.front().symbol;
  std::vector<MomentaryTerm> merged;
  for (auto& t : terms) {
    if (t.symbol.d() != first.d() || t.symbol.s() != first.s() || t.symbol.r() != first.r())
      throw ArgumentError("MomentarySymbol: terms have different shapes");
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const MomentaryTerm& m) { return m.scaling == t.scaling; });
    if (it == merged.end()) {
      merged.push_back(std::move(t));
    } else {
      it->symbol = symbol_add(it->symbol, t.symbol);
    }
  }
  std::vector<MomentaryTerm> out;
  for (auto& t : merged)
    if (!t.symbol.is_zero()) out.push_back(std::move(t));
  if (out.empty()) out.push_back({CoefficientScaling::One(), LaurentSymbol(first.d(), first.s(), first.r())});
  return out;
}

}  // namespace

MomentarySymbol::MomentarySymbol(LaurentSymbol symbol)
    : MomentarySymbol(std::vector<MomentaryTerm>{{CoefficientScaling::One(), std::move(symbol)}}) {}

MomentarySymbol::MomentarySymbol(std::vector<MomentaryTerm> terms)
    : terms_(canonical_terms(std::move(terms))) {}

bool MomentarySymbol::is_size_independent() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const MomentaryTerm& t) {
    return t.scaling.class_tag() == ScalingClass::kConstant;
  });
}

DenseMatrix MomentarySymbol::evaluate(std::span<const double> theta, std::span<const int> size) const {
  for (int v : size)
    if (v <= 0) throw ArgumentError("momentary_evaluate: size components must be positive");
  DenseMatrix out(s(), r());
  for (const auto& t : terms_) out += t.scaling.evaluate(size) * t.symbol.evaluate(theta);
  return out;
}

LaurentSymbol MomentarySymbol::at(std::span<const int> size) const {
  LaurentSymbol out(d(), s(), r());
  for (const auto& t : terms_) out = symbol_add(out, symbol_scale(t.scaling.evaluate(size), t.symbol));
  return out;
}

LaurentSymbol MomentarySymbol::glt_symbol() const {
  LaurentSymbol out(d(), s(), r());
  for (const auto& t : terms_)
    if (t.scaling.class_tag() == ScalingClass::kConstant)
      out = symbol_add(out, t.symbol);
  return out;
}

MomentarySymbol momentary_add(const MomentarySymbol& a, const MomentarySymbol& b) {
  std::vector<MomentaryTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return MomentarySymbol(std::move(terms));
}

MomentarySymbol momentary_mul(const MomentarySymbol& a, const MomentarySymbol& b) {
  std::vector<MomentaryTerm> terms;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      terms.push_back({scaling_mul(ta.scaling, tb.scaling), symbol_mul(ta.symbol, tb.symbol)});
  return MomentarySymbol(std::move(terms));
}

MomentarySymbol momentary_hermitian(const MomentarySymbol& a) {
  // Scalings are real, so only the symbols change.
  std::vector<MomentaryTerm> terms;
  for (const auto& t : a.terms()) terms.push_back({t.scaling, symbol_hermitian(t.symbol)});
  return MomentarySymbol(std::move(terms));
}

}  // namespace momsym
