#include "arv/random.hpp"

namespace arv::random {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(items.size()) - 1))];
}

TimeInterval interval(Rng& rng, unsigned max_bound) {
  const auto lo = static_cast<unsigned>(uniform(rng, 0, max_bound));
  if (coin(rng, 0.3)) return TimeInterval::unbounded(lo);
  return TimeInterval::closed(lo, static_cast<unsigned>(uniform(rng, lo, max_bound)));
}

}  // namespace

Literal literal(Rng& rng, const PredicateShape& shape) {
  const auto& var = pick(rng, shape.vars);
  const double k = static_cast<double>(uniform(rng, shape.min_constant, shape.max_constant));
  if (shape.closed_only) {
    return coin(rng) ? Literal::atom(var, Cmp::LessEq, k) : Literal::atom(var, Cmp::Less, k, true);
  }
  return Literal::atom(var, coin(rng) ? Cmp::Less : Cmp::LessEq, k, coin(rng));
}

DnfPredicate dnf(Rng& rng, const PredicateShape& shape) {
  DnfPredicate out;
  const auto clauses = uniform(rng, 1, static_cast<long>(shape.max_clauses));
  for (long c = 0; c < clauses; ++c) {
    Conjunct clause;
    const auto lits = uniform(rng, 1, static_cast<long>(shape.max_literals));
    for (long l = 0; l < lits; ++l) clause.push_back(literal(rng, shape));
    out.clauses.push_back(std::move(clause));
  }
  return out;
}

Predicate predicate(Rng& rng, const PredicateShape& shape, int depth) {
  if (depth <= 0 || coin(rng, 0.3)) {
    const auto l = literal(rng, shape);
    auto p = Predicate::atom(l.var, l.cmp, l.constant);
    return l.negated ? Predicate::negation(p) : p;
  }
  switch (uniform(rng, 0, 2)) {
    case 0: return Predicate::negation(predicate(rng, shape, depth - 1));
    case 1: return Predicate::conjunction(predicate(rng, shape, depth - 1), predicate(rng, shape, depth - 1));
    default: return Predicate::disjunction(predicate(rng, shape, depth - 1), predicate(rng, shape, depth - 1));
  }
}

Valuation valuation(Rng& rng, const std::vector<std::string>& vars, long lo, long hi) {
  Valuation v;
  for (const auto& name : vars) v.set(name, static_cast<double>(uniform(rng, lo, hi)));
  return v;
}

Trace trace(Rng& rng, const std::vector<std::string>& vars, std::size_t length, double lo, double hi, double step) {
  const auto steps = static_cast<long>((hi - lo) / step);
  std::vector<Valuation> samples;
  for (std::size_t i = 0; i < length; ++i) {
    Valuation v;
    for (const auto& name : vars) v.set(name, lo + step * static_cast<double>(uniform(rng, 0, steps)));
    samples.push_back(std::move(v));
  }
  return Trace(vars, std::move(samples));
}

SymbolicAutomaton automaton(Rng& rng, const PredicateShape& shape, std::size_t max_locations) {
  SymbolicAutomaton a(shape.vars);
  const auto n = static_cast<Location>(uniform(rng, 1, static_cast<long>(max_locations)));
  for (Location q = 0; q < n; ++q) a.add_location(q == 0 || coin(rng, 0.2), coin(rng, 0.4));
  const auto edges = uniform(rng, 1, 2 * static_cast<long>(n) + 1);
  for (long e = 0; e < edges; ++e) {
    const auto src = static_cast<Location>(uniform(rng, 0, n - 1));
    const auto dst = static_cast<Location>(uniform(rng, 0, n - 1));
    a.add_transition(src, coin(rng, 0.15) ? DnfPredicate::top() : dnf(rng, shape), dst);
  }
  return a;
}

namespace {

StlFormula stl_atom(Rng& rng, const StlShape& shape) {
  const auto& var = pick(rng, shape.vars);
  const double k = static_cast<double>(uniform(rng, shape.min_constant, shape.max_constant));
  if (shape.monotone) return StlFormula::atom(var, coin(rng) ? Rel::Le : Rel::Ge, k);
  static const std::vector<Rel> rels{Rel::Lt, Rel::Le, Rel::Gt, Rel::Ge};
  return StlFormula::atom(var, pick(rng, rels), k);
}

StlFormula stl_at(Rng& rng, const StlShape& shape, int depth) {
  if (depth <= 0 || coin(rng, 0.25)) return stl_atom(rng, shape);
  const int d = depth - 1;
  const long ops = shape.monotone ? 5 : 8;
  switch (uniform(rng, 0, ops)) {
    case 0: return StlFormula::conjunction(stl_at(rng, shape, d), stl_at(rng, shape, d));
    case 1: return StlFormula::disjunction(stl_at(rng, shape, d), stl_at(rng, shape, d));
    case 2: return StlFormula::next(stl_at(rng, shape, d));
    case 3: return StlFormula::eventually(stl_at(rng, shape, d), interval(rng, shape.max_bound));
    case 4: return StlFormula::globally(stl_at(rng, shape, d), interval(rng, shape.max_bound));
    case 5: return StlFormula::until(stl_at(rng, shape, d), stl_at(rng, shape, d), interval(rng, shape.max_bound));
    case 6: return StlFormula::negation(stl_at(rng, shape, d));
    case 7: return StlFormula::implication(stl_at(rng, shape, d), stl_at(rng, shape, d));
    default: return coin(rng) ? StlFormula::top() : StlFormula::bottom();
  }
}

Predicate sre_predicate(Rng& rng, const SreShape& shape) {
  PredicateShape ps{shape.vars, shape.min_constant, shape.max_constant, 2, 2, false};
  return predicate(rng, ps, 1);
}

SreExpr sre_at(Rng& rng, const SreShape& shape, int depth, bool under_star) {
  if (depth <= 0 || coin(rng, 0.25)) {
    return coin(rng, 0.1) ? SreExpr::epsilon() : SreExpr::pred(sre_predicate(rng, shape));
  }
  const int d = depth - 1;
  switch (uniform(rng, 0, under_star ? 3 : 4)) {
    case 0: return SreExpr::concat(sre_at(rng, shape, d, under_star), sre_at(rng, shape, d, under_star));
    case 1: return SreExpr::alt(sre_at(rng, shape, d, under_star), sre_at(rng, shape, d, under_star));
    case 2: return SreExpr::intersect(sre_at(rng, shape, d, under_star), sre_at(rng, shape, d, under_star));
    case 3: return SreExpr::duration(sre_at(rng, shape, d, under_star), interval(rng, shape.max_bound));
    default: return SreExpr::star(sre_at(rng, shape, d, true));
  }
}

}  // namespace

StlFormula stl(Rng& rng, const StlShape& shape) { return stl_at(rng, shape, shape.depth); }

SreExpr sre(Rng& rng, const SreShape& shape) { return sre_at(rng, shape, shape.depth, false); }

std::vector<Trace> all_traces(const std::vector<std::string>& vars, const std::vector<double>& values,
                              std::size_t max_length) {
  std::vector<Trace> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    const std::size_t slots = n * vars.size();
    std::vector<std::size_t> index(slots, 0);
    while (true) {
      std::vector<Valuation> samples(n);
      for (std::size_t k = 0; k < slots; ++k) samples[k / vars.size()].set(vars[k % vars.size()], values[index[k]]);
      out.emplace_back(vars, std::move(samples));
      std::size_t k = 0;
      while (k < slots && index[k] + 1 == values.size()) index[k++] = 0;
      if (k == slots) break;
      ++index[k];
    }
  }
  return out;
}

}  // namespace arv::random
