#ifndef MOMSYM_MOMENTARY_SYMBOL_H_
#define MOMSYM_MOMENTARY_SYMBOL_H_

#include <span>
#include <vector>

#include "momsym/laurent_symbol.h"
#include "momsym/scaling.h"

namespace momsym {

struct MomentaryTerm {
  CoefficientScaling scaling;
  LaurentSymbol symbol;
  friend bool operator==(const MomentaryTerm&, const MomentaryTerm&) = default;
};

// f_M(theta; n) = sum_i g_i(n) f_i(theta).
//
// Terms sharing a scaling form are merged on construction, and terms whose
// symbol is zero are dropped (one zero term survives if nothing else is left)
// so that structural equality matches functional equality for the forms we
// support.
class MomentarySymbol {
 public:
  explicit MomentarySymbol(LaurentSymbol symbol);
  explicit MomentarySymbol(std::vector<MomentaryTerm> terms);

  const std::vector<MomentaryTerm>& terms() const noexcept { return terms_; }
  int d() const noexcept { return terms_.front().symbol.d(); }
  int s() const noexcept { return terms_.front().symbol.s(); }
  int r() const noexcept { return terms_.front().symbol.r(); }

  // True when every term has a constant scaling (g = 1).
  bool is_size_independent() const;

  DenseMatrix evaluate(std::span<const double> theta, std::span<const int> size) const;

  // Freezes the size: the Laurent symbol sum_i g_i(size) f_i.
  LaurentSymbol at(std::span<const int> size) const;

  // The GLT symbol: the sum of the constant-class terms.
  LaurentSymbol glt_symbol() const;

  friend bool operator==(const MomentarySymbol&, const MomentarySymbol&) = default;

 private:
  std::vector<MomentaryTerm> terms_;
};

MomentarySymbol momentary_add(const MomentarySymbol& a, const MomentarySymbol& b);
MomentarySymbol momentary_mul(const MomentarySymbol& a, const MomentarySymbol& b);
MomentarySymbol momentary_hermitian(const MomentarySymbol& a);

// Convenience for the common case of one term.
inline MomentarySymbol momentary_term(CoefficientScaling g, LaurentSymbol f) {
  return MomentarySymbol(std::vector<MomentaryTerm>{{std::move(g), std::move(f)}});
}

}  // namespace momsym

#endif  // MOMSYM_MOMENTARY_SYMBOL_H_
