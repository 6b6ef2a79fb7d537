#ifndef MOMSYM_SCALING_H_
#define MOMSYM_SCALING_H_

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "momsym/laurent_symbol.h"

namespace momsym {

// Asymptotic class of a size-dependent coefficient g(n).
enum class ScalingClass { kConstant, kDecaying, kDiverging };

std::string to_string(ScalingClass c);

enum class SizeBase { kN, kNPlusOne };

class CoefficientScaling;

namespace scaling_form {

// g = 1.
struct One {
  friend bool operator==(const One&, const One&) = default;
};

// g = (1 / base(n))^p on a single size index. Negative p is the diverging
// case, e.g. h^{-2} with h = 1/(n+1) is {p = -2, base = n+1}.
struct InversePower {
  int p = 0;
  SizeBase base = SizeBase::kN;
  friend bool operator==(const InversePower&, const InversePower&) = default;
};

// g = N / n^2 on a two-index size parameter (N, n).
struct RatioNOverNSquared {
  friend bool operator==(const RatioNOverNSquared&, const RatioNOverNSquared&) = default;
};

// Tabulated values keyed by size. A table with `factors` is a lazily
// evaluated product of other scalings (values stays empty).
struct Table {
  std::map<MultiIndex, double> values;
  std::vector<CoefficientScaling> factors;
  friend bool operator==(const Table&, const Table&);
};

}  // namespace scaling_form

using ScalingForm = std::variant<scaling_form::One, scaling_form::InversePower,
                                 scaling_form::RatioNOverNSquared, scaling_form::Table>;

// A scalar g(n) multiplying one term of a momentary symbol.
class CoefficientScaling {
 public:
  // Class tag derived from the form (tables: constant iff every value is 1,
  // otherwise decaying; ratio: decaying).
  explicit CoefficientScaling(ScalingForm form);
  // Explicit tag; rejected when it contradicts the form's asymptotics.
  CoefficientScaling(ScalingForm form, ScalingClass tag);

  static CoefficientScaling One() { return CoefficientScaling(scaling_form::One{}); }
  static CoefficientScaling InversePower(int p, SizeBase base) {
    return CoefficientScaling(scaling_form::InversePower{p, base});
  }
  static CoefficientScaling RatioNOverNSquared() {
    return CoefficientScaling(scaling_form::RatioNOverNSquared{});
  }

  const ScalingForm& form() const noexcept { return form_; }
  ScalingClass class_tag() const noexcept { return tag_; }
  bool is_one() const noexcept { return std::holds_alternative<scaling_form::One>(form_); }

  double evaluate(std::span<const int> size) const;

  friend bool operator==(const CoefficientScaling&, const CoefficientScaling&) = default;

 private:
  ScalingForm form_;
  ScalingClass tag_;
};

// Pointwise product g_a(n) g_b(n). Powers with a common base add exponents;
// other mixed products become lazily evaluated tables.
CoefficientScaling scaling_mul(const CoefficientScaling& a, const CoefficientScaling& b);

}  // namespace momsym

#endif  // MOMSYM_SCALING_H_
