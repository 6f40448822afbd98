#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arv/predicate.hpp"
#include "arv/sre.hpp"
#include "arv/stl.hpp"
#include "arv/valuation.hpp"

namespace arv {

using Location = std::uint32_t;

struct Transition {
  Location src = 0;
  DnfPredicate guard;
  Location dst = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Finite automaton whose transitions carry predicates over real variables.
/// Epsilon transitions exist only between construction steps; monitors
/// require them eliminated.
class SymbolicAutomaton {
 public:
  SymbolicAutomaton() = default;
  explicit SymbolicAutomaton(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  Location add_location(bool initial = false, bool final = false);
  void set_initial(Location q, bool on = true);
  void set_final(Location q, bool on = true);
  void add_transition(Location src, DnfPredicate guard, Location dst);
  void add_epsilon(Location src, Location dst);

  void set_variables(std::vector<std::string> variables) { variables_ = std::move(variables); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }

  std::size_t num_locations() const noexcept { return initial_.size(); }
  bool is_initial(Location q) const { return initial_.at(q); }
  bool is_final(Location q) const { return final_.at(q); }
  std::vector<Location> initial_locations() const;
  std::vector<Location> final_locations() const;
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const std::vector<std::pair<Location, Location>>& epsilons() const noexcept { return epsilons_; }
  bool has_epsilons() const noexcept { return !epsilons_.empty(); }

  /// Replaces every guard by f(guard).
  template <typename F>
  void transform_guards(F&& f) {
    for (auto& t : transitions_) t.guard = f(t.guard);
  }

  friend bool operator==(const SymbolicAutomaton&, const SymbolicAutomaton&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
  std::vector<Transition> transitions_;
  std::vector<std::pair<Location, Location>> epsilons_;
};

/// Finite-trace tableau for the future fragment: locations are pending
/// obligation sets; a location is final when no strong-next obligation is
/// pending. Throws UnsupportedFragment on past operators.
SymbolicAutomaton translate_stl(const StlFormula& f);

/// Compositional construction; the result is epsilon-free and trimmed.
SymbolicAutomaton translate_sre(const SreExpr& e);

SymbolicAutomaton eps_eliminate(const SymbolicAutomaton& a);
/// Synchronous product with conjoined guards; unsatisfiable guards dropped.
SymbolicAutomaton product(const SymbolicAutomaton& a, const SymbolicAutomaton& b);
SymbolicAutomaton unite(const SymbolicAutomaton& a, const SymbolicAutomaton& b);

/// Removes locations that are unreachable or cannot reach a final location
/// (initial locations are always kept), drops unsatisfiable guards, merges
/// parallel transitions and renumbers locations in BFS order.
SymbolicAutomaton trim(const SymbolicAutomaton& a);

/// Rewrites each location's outgoing guards into satisfiable, pairwise
/// disjoint cells; transitions sharing a cell share an identical guard.
SymbolicAutomaton mintermize(const SymbolicAutomaton& a);
/// Subset construction over minterms, completed with an explicit sink.
SymbolicAutomaton determinize(const SymbolicAutomaton& a);
/// Language complement (over non-empty traces) via determinize.
SymbolicAutomaton complement(const SymbolicAutomaton& a);

bool is_deterministic(const SymbolicAutomaton& a);
bool is_complete(const SymbolicAutomaton& a);

/// Qualitative run: true iff some path induced by the trace ends in a final location.
bool accepts(const SymbolicAutomaton& a, const Trace& trace);

/// Incremental qualitative run, one valuation per step.
class AcceptanceRun {
 public:
  explicit AcceptanceRun(const SymbolicAutomaton& a);
  void step(const Valuation& v);
  bool accepting() const;

 private:
  const SymbolicAutomaton* automaton_;
  std::vector<char> active_;
};

/// Representative valuations, one per cell of the partition induced by the
/// constants of `guards` (guards are constant on each cell).
std::vector<Valuation> cell_representatives(const std::vector<const DnfPredicate*>& guards);

}  // namespace arv
