#pragma once

#include <vector>

#include "arv/automaton.hpp"
#include "arv/semiring.hpp"
#include "arv/valuation.hpp"

namespace arv::fixtures {

/// Three-location automaton over {x, y}: q0 and q2 carry true self-loops,
/// q0 -> q1 -> q2 are both guarded by `x <= 3 && !(y < 6)`; q0 initial, q2 final.
SymbolicAutomaton example_automaton();

/// (x, y) = (4,2), (5,3), (2,5), (3,5).
Trace example_trace();

/// Expected per-location cost after each prefix (column 0 is the empty prefix)
/// and the final trace value.
struct CostTable {
  Semiring semiring;
  std::vector<std::vector<double>> rows;
  double final_value = 0.0;
};

/// Boolean and MinMax tables as published; Tropical as computed by path enumeration.
std::vector<CostTable> example_tables();

}  // namespace arv::fixtures
