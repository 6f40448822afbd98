#pragma once

#include "arv/automaton.hpp"
#include "arv/distance.hpp"
#include "arv/semiring.hpp"

namespace arv {

/// Symbolic automaton whose transition weights are the valuation-predicate
/// distance of their guard. Guards are stored ∧-minimized.
class SymbolicWeightedAutomaton {
 public:
  /// Throws PreconditionError if `base` still has epsilon transitions.
  SymbolicWeightedAutomaton(const SymbolicAutomaton& base, Semiring semiring, PointwiseDistance distance);

  const SymbolicAutomaton& base() const noexcept { return base_; }
  Semiring semiring() const noexcept { return semiring_; }
  PointwiseDistance distance() const noexcept { return distance_; }

  SemiringValue weight(const Transition& t, const Valuation& v) const;

 private:
  SymbolicAutomaton base_;
  Semiring semiring_;
  PointwiseDistance distance_;
};

SymbolicWeightedAutomaton decorate(const SymbolicAutomaton& a, Semiring s, PointwiseDistance d);
inline SymbolicWeightedAutomaton decorate(const SymbolicAutomaton& a, Semiring s) {
  return decorate(a, s, default_distance(s));
}

}  // namespace arv
