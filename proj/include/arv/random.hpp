#pragma once

#include <random>
#include <string>
#include <vector>

#include "arv/automaton.hpp"
#include "arv/predicate.hpp"
#include "arv/sre.hpp"
#include "arv/stl.hpp"
#include "arv/valuation.hpp"

/// Seeded generators for the property and oracle suites.
namespace arv::random {

using Rng = std::mt19937_64;

struct PredicateShape {
  std::vector<std::string> vars{"x"};
  long min_constant = -8;
  long max_constant = 8;
  std::size_t max_clauses = 3;
  std::size_t max_literals = 3;
  /// Only `x <= k` and `!(x < k)`, so every violated literal's distance is attained.
  bool closed_only = true;
};

Literal literal(Rng& rng, const PredicateShape& shape);
DnfPredicate dnf(Rng& rng, const PredicateShape& shape);
/// Boolean combination of depth at most `depth`, negations included.
Predicate predicate(Rng& rng, const PredicateShape& shape, int depth);

/// Integer-valued valuation in [lo, hi] for every variable.
Valuation valuation(Rng& rng, const std::vector<std::string>& vars, long lo, long hi);

/// Trace of the given length; values are multiples of `step` in [lo, hi].
Trace trace(Rng& rng, const std::vector<std::string>& vars, std::size_t length, double lo, double hi,
            double step = 1.0);

/// Epsilon-free automaton with 1..max_locations locations and random guards.
SymbolicAutomaton automaton(Rng& rng, const PredicateShape& shape, std::size_t max_locations);

struct StlShape {
  std::vector<std::string> vars{"x"};
  long min_constant = 0;
  long max_constant = 3;
  int depth = 3;
  unsigned max_bound = 2;
  /// Restricts to x <= k / x >= k atoms and negation-free monotone operators.
  bool monotone = false;
};

StlFormula stl(Rng& rng, const StlShape& shape);

struct SreShape {
  std::vector<std::string> vars{"x"};
  long min_constant = 0;
  long max_constant = 3;
  int depth = 3;
  unsigned max_bound = 2;
};

/// Star is never nested inside another star.
SreExpr sre(Rng& rng, const SreShape& shape);

/// Every trace of length 1..max_length over `values` for each variable.
std::vector<Trace> all_traces(const std::vector<std::string>& vars, const std::vector<double>& values,
                              std::size_t max_length);

}  // namespace arv::random
