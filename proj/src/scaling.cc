#include "momsym/scaling.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "momsym/errors.h"

namespace momsym {

namespace scaling_form {

bool operator==(const Table& a, const Table& b) {
  return a.values == b.values && a.factors == b.factors;
}

}  // namespace scaling_form

std::string to_string(ScalingClass c) {
  switch (c) {
    case ScalingClass::kConstant:
      return "constant";
    case ScalingClass::kDecaying:
      return "decaying";
    case ScalingClass::kDiverging:
      return "diverging";
  }
  return "unknown";
}

namespace {

using namespace scaling_form;

std::optional<int> growth_exponent(const CoefficientScaling& g);

std::optional<int> factors_exponent(const std::vector<CoefficientScaling>& factors) {
  int e = 0;
  for (const auto& factor : factors) {
    auto fe = growth_exponent(factor);
    if (!fe) return std::nullopt;
    e += *fe;
  }
  return e;
}

// Exponent e with g ~ n^e when it is known from the form alone.
std::optional<int> growth_exponent(const CoefficientScaling& g) {
  return std::visit(
      [](const auto& f) -> std::optional<int> {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, One>) {
          return 0;
        } else if constexpr (std::is_same_v<F, InversePower>) {
          return -f.p;
        } else if constexpr (std::is_same_v<F, Table>) {
          if (f.factors.empty()) return std::nullopt;
          return factors_exponent(f.factors);
        } else {
          return std::nullopt;
        }
      },
      g.form());
}

ScalingClass class_from_exponent(int e) {
  if (e == 0) return ScalingClass::kConstant;
  return e < 0 ? ScalingClass::kDecaying : ScalingClass::kDiverging;
}

// Class of a lazy product mixing decaying and diverging factors with no
// closed-form exponent: compare |g| at sizes 2^10 and 2^20 in every index.
ScalingClass probe_class(const std::vector<CoefficientScaling>& factors) {
  auto eval = [&](const std::vector<int>& size) {
    double v = 1.0;
    for (const auto& f : factors) v *= f.evaluate(size);
    return std::abs(v);
  };
  for (std::size_t arity : {std::size_t{1}, std::size_t{2}}) {
    try {
      const double a = eval(std::vector<int>(arity, 1 << 10));
      const double b = eval(std::vector<int>(arity, 1 << 20));
      if (b < a) return ScalingClass::kDecaying;
      if (b > a) return ScalingClass::kDiverging;
      return a == 1.0 ? ScalingClass::kConstant : ScalingClass::kDecaying;
    } catch (const ArgumentError&) {
      continue;
    }
  }
  return ScalingClass::kDecaying;
}

ScalingClass product_class(const std::vector<CoefficientScaling>& factors) {
  bool decaying = false, diverging = false;
  for (const auto& f : factors) {
    decaying |= f.class_tag() == ScalingClass::kDecaying;
    diverging |= f.class_tag() == ScalingClass::kDiverging;
  }
  if (!decaying && !diverging) return ScalingClass::kConstant;
  if (decaying != diverging) return decaying ? ScalingClass::kDecaying : ScalingClass::kDiverging;
  if (auto e = factors_exponent(factors)) return class_from_exponent(*e);
  return probe_class(factors);
}

ScalingClass default_class(const ScalingForm& form) {
  return std::visit(
      [](const auto& f) -> ScalingClass {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, One>) {
          return ScalingClass::kConstant;
        } else if constexpr (std::is_same_v<F, InversePower>) {
          return class_from_exponent(-f.p);
        } else if constexpr (std::is_same_v<F, RatioNOverNSquared>) {
          return ScalingClass::kDecaying;
        } else {
          if (!f.factors.empty()) return product_class(f.factors);
          const bool all_one = std::all_of(f.values.begin(), f.values.end(),
                                           [](const auto& kv) { return kv.second == 1.0; });
          return all_one ? ScalingClass::kConstant : ScalingClass::kDecaying;
        }
      },
      form);
}

void validate(const ScalingForm& form, ScalingClass tag) {
  const ScalingClass derived = default_class(form);
  const bool ok = std::visit(
      [&](const auto& f) -> bool {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, One> || std::is_same_v<F, InversePower>) {
          return tag == derived;
        } else if constexpr (std::is_same_v<F, RatioNOverNSquared>) {
          return tag != ScalingClass::kConstant;
        } else {
          if (!f.factors.empty()) return true;
          // Only "constant" can be checked against tabulated values.
          return (tag == ScalingClass::kConstant) == (derived == ScalingClass::kConstant);
        }
      },
      form);
  if (!ok) {
    throw ArgumentError("CoefficientScaling: class tag '" + to_string(tag) +
                        "' contradicts the form (expected '" + to_string(derived) + "')");
  }
}

double base_value(const InversePower& f, std::span<const int> size) {
  if (size.size() != 1)
    throw ArgumentError("inverse_power scaling needs a single size index, got " +
                        std::to_string(size.size()));
  if (size[0] <= 0) throw ArgumentError("scaling: size must be positive");
  return f.base == SizeBase::kN ? size[0] : size[0] + 1.0;
}

}  // namespace

CoefficientScaling::CoefficientScaling(ScalingForm form)
    : form_(std::move(form)), tag_(default_class(form_)) {}

CoefficientScaling::CoefficientScaling(ScalingForm form, ScalingClass tag)
    : form_(std::move(form)), tag_(tag) {
  validate(form_, tag_);
}

double CoefficientScaling::evaluate(std::span<const int> size) const {
  return std::visit(
      [&](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, scaling_form::One>) {
          return 1.0;
        } else if constexpr (std::is_same_v<F, scaling_form::InversePower>) {
          return std::pow(1.0 / base_value(f, size), f.p);
        } else if constexpr (std::is_same_v<F, scaling_form::RatioNOverNSquared>) {
          if (size.size() != 2)
            throw ArgumentError("ratio_N_over_n2 scaling needs a size (N, n), got arity " +
                                std::to_string(size.size()));
          if (size[0] <= 0 || size[1] <= 0) throw ArgumentError("scaling: size must be positive");
          return static_cast<double>(size[0]) / (static_cast<double>(size[1]) * size[1]);
        } else {
          if (!f.factors.empty()) {
            double v = 1.0;
            for (const auto& factor : f.factors) v *= factor.evaluate(size);
            return v;
          }
          auto it = f.values.find(MultiIndex(size.begin(), size.end()));
          if (it == f.values.end()) throw ArgumentError("table scaling: size not tabulated");
          return it->second;
        }
      },
      form_);
}

CoefficientScaling scaling_mul(const CoefficientScaling& a, const CoefficientScaling& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const auto* pa = std::get_if<InversePower>(&a.form());
  const auto* pb = std::get_if<InversePower>(&b.form());
  if (pa && pb && pa->base == pb->base) {
    if (pa->p + pb->p == 0) return CoefficientScaling::One();
    return CoefficientScaling::InversePower(pa->p + pb->p, pa->base);
  }
  Table t;
  for (const auto* g : {&a, &b}) {
    const auto* tg = std::get_if<Table>(&g->form());
    if (tg && !tg->factors.empty()) {
      t.factors.insert(t.factors.end(), tg->factors.begin(), tg->factors.end());
    } else {
      t.factors.push_back(*g);
    }
  }
  return CoefficientScaling(std::move(t));
}

}  // namespace momsym
