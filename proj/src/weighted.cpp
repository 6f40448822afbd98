#include "arv/weighted.hpp"

#include "arv/error.hpp"

namespace arv {

namespace {

SymbolicAutomaton minimized(const SymbolicAutomaton& a) {
  if (a.has_epsilons()) throw PreconditionError("decorate requires an epsilon-free automaton");
  SymbolicAutomaton out(a.variables());
  for (Location q = 0; q < a.num_locations(); ++q) out.add_location(a.is_initial(q), a.is_final(q));
  for (const auto& t : a.transitions()) {
    auto guard = wedge_minimize(prune_unsat(t.guard));
    if (is_sat(guard)) out.add_transition(t.src, std::move(guard), t.dst);
  }
  return out;
}

}  // namespace

SymbolicWeightedAutomaton::SymbolicWeightedAutomaton(const SymbolicAutomaton& base, Semiring semiring,
                                                     PointwiseDistance distance)
    : base_(minimized(base)), semiring_(semiring), distance_(distance) {}

SemiringValue SymbolicWeightedAutomaton::weight(const Transition& t, const Valuation& v) const {
  return vpd(v, t.guard, semiring_, distance_);
}

SymbolicWeightedAutomaton decorate(const SymbolicAutomaton& a, Semiring s, PointwiseDistance d) {
  return SymbolicWeightedAutomaton(a, s, d);
}

}  // namespace arv
