#include "arv/semiring.hpp"

#include <algorithm>

namespace arv {

SemiringValue Semiring::oplus(SemiringValue a, SemiringValue b) const noexcept {
  switch (kind_) {
    case SemiringKind::Boolean:
      return {(a.value != 0.0 && b.value != 0.0) ? 1.0 : 0.0};
    case SemiringKind::MinMax:
    case SemiringKind::Tropical:
      return {std::min(a.value, b.value)};
  }
  return a;
}

SemiringValue Semiring::otimes(SemiringValue a, SemiringValue b) const noexcept {
  switch (kind_) {
    case SemiringKind::Boolean:
      return {(a.value != 0.0 || b.value != 0.0) ? 1.0 : 0.0};
    case SemiringKind::MinMax:
      return {std::max(a.value, b.value)};
    case SemiringKind::Tropical:
      return {a.value + b.value};
  }
  return a;
}

SemiringValue Semiring::zero() const noexcept {
  return kind_ == SemiringKind::Boolean ? SemiringValue{1.0} : SemiringValue::infinity();
}

SemiringFlags Semiring::flags() const noexcept {
  if (kind_ == SemiringKind::Tropical) return {true, false, true};
  return {true, true, true};
}

bool Semiring::contains(SemiringValue a) const noexcept {
  if (kind_ == SemiringKind::Boolean) return a.value == 0.0 || a.value == 1.0;
  return a.value >= 0.0;  // NaN fails this too
}

std::string_view Semiring::name() const noexcept {
  switch (kind_) {
    case SemiringKind::Boolean: return "boolean";
    case SemiringKind::MinMax: return "minmax";
    case SemiringKind::Tropical: return "tropical";
  }
  return "?";
}

std::optional<Semiring> semiring_from_name(std::string_view name) {
  if (name == "boolean") return Semiring::boolean();
  if (name == "minmax") return Semiring::minmax();
  if (name == "tropical") return Semiring::tropical();
  return std::nullopt;
}

double to_signed(SemiringValue a, bool negate) noexcept {
  // -0.0 would print as "-0"
  if (!negate || a.value == 0.0) return a.value;
  return -a.value;
}

}  // namespace arv
