#include "arv/fixtures.hpp"

#include "arv/parser.hpp"

namespace arv::fixtures {

SymbolicAutomaton example_automaton() {
  SymbolicAutomaton a({"x", "y"});
  a.add_location(true, false);
  a.add_location();
  a.add_location(false, true);
  const auto g = to_dnf(parse_predicate("x <= 3 && !(y < 6)"));
  a.add_transition(0, DnfPredicate::top(), 0);
  a.add_transition(0, g, 1);
  a.add_transition(1, g, 2);
  a.add_transition(2, DnfPredicate::top(), 2);
  return a;
}

Trace example_trace() { return Trace::from_rows({"x", "y"}, {{4, 2}, {5, 3}, {2, 5}, {3, 5}}); }

std::vector<CostTable> example_tables() {
  constexpr double inf = Interval::kInf;
  return {
      {Semiring::boolean(), {{0, 0, 0, 0, 0}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}}, 1},
      {Semiring::minmax(), {{0, 0, 0, 0, 0}, {inf, 4, 3, 1, 1}, {inf, inf, 4, 3, 1}}, 1},
      {Semiring::tropical(), {{0, 0, 0, 0, 0}, {inf, 5, 5, 1, 1}, {inf, inf, 10, 6, 2}}, 2},
  };
}

}  // namespace arv::fixtures
