#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace arv {

/// Carrier element shared by all shipped semirings: an extended non-negative
/// real with an exact infinity. The Boolean instance only uses {0, 1}.
struct SemiringValue {
  double value = 0.0;

  static constexpr SemiringValue infinity() noexcept {
    return {std::numeric_limits<double>::infinity()};
  }

  bool is_infinite() const noexcept { return std::isinf(value); }

  friend bool operator==(SemiringValue, SemiringValue) = default;
};

enum class SemiringKind { Boolean, MinMax, Tropical };

struct SemiringFlags {
  bool additively_idempotent = true;
  bool multiplicatively_idempotent = true;
  bool bounded = true;
};

/// One of the three concrete semirings (S, oplus, otimes, e_plus, e_times).
///
///   Boolean  = (and, or, 1, 0)
///   MinMax   = (min, max, inf, 0)
///   Tropical = (min, +,   inf, 0)
///
/// All three are commutative, additively idempotent and bounded; only
/// Tropical lacks multiplicative idempotence.
class Semiring {
 public:
  constexpr explicit Semiring(SemiringKind kind) noexcept : kind_(kind) {}

  static constexpr Semiring boolean() noexcept { return Semiring(SemiringKind::Boolean); }
  static constexpr Semiring minmax() noexcept { return Semiring(SemiringKind::MinMax); }
  static constexpr Semiring tropical() noexcept { return Semiring(SemiringKind::Tropical); }

  constexpr SemiringKind kind() const noexcept { return kind_; }

  SemiringValue oplus(SemiringValue a, SemiringValue b) const noexcept;
  SemiringValue otimes(SemiringValue a, SemiringValue b) const noexcept;

  /// Additive identity, also the annihilator of otimes.
  SemiringValue zero() const noexcept;
  /// Multiplicative identity, also the annihilator of oplus.
  SemiringValue one() const noexcept { return {0.0}; }

  /// Natural order: a is below b iff a oplus b == a. Smaller is better.
  bool nat_leq(SemiringValue a, SemiringValue b) const noexcept { return oplus(a, b) == a; }
  bool nat_less(SemiringValue a, SemiringValue b) const noexcept { return nat_leq(a, b) && !(a == b); }

  SemiringFlags flags() const noexcept;

  /// True if `a` belongs to this instance's carrier.
  bool contains(SemiringValue a) const noexcept;

  std::string_view name() const noexcept;

  friend bool operator==(Semiring, Semiring) = default;

 private:
  SemiringKind kind_;
};

/// Parses "boolean", "minmax" or "tropical".
std::optional<Semiring> semiring_from_name(std::string_view name);

/// Embeds a carrier element into the extended signed reals, optionally negated.
double to_signed(SemiringValue a, bool negate) noexcept;

}  // namespace arv
