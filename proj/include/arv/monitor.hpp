#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arv/distance.hpp"
#include "arv/parser.hpp"
#include "arv/weighted.hpp"

namespace arv {

/// Cost of reaching each location with the prefix consumed so far.
struct CostVector {
  std::vector<SemiringValue> cost;
  std::size_t step = 0;
};

/// Incremental trace value: one dynamic-programming step per valuation,
/// constant work per step. The automaton must outlive the stream.
class ValStream {
 public:
  explicit ValStream(const SymbolicWeightedAutomaton& w);

  /// Consumes one valuation and returns the value of the prefix read so far.
  /// Throws PreconditionError after close().
  SemiringValue step(const Valuation& v);
  /// Value of the prefix read so far; e_times convention before any step.
  SemiringValue value() const;
  /// oplus over the locations selected by `final` (true: final, false: non-final).
  SemiringValue value_over(bool final) const;
  const CostVector& costs() const noexcept { return costs_; }
  void close() noexcept { closed_ = true; }
  bool closed() const noexcept { return closed_; }

 private:
  const SymbolicWeightedAutomaton* automaton_;
  CostVector costs_;
  std::vector<SemiringValue> scratch_;
  bool closed_ = false;
};

/// Trace value of `trace` on `w`. Throws PreconditionError on an empty trace.
SemiringValue val(const Trace& trace, const SymbolicWeightedAutomaton& w);

struct RobustnessVerdict {
  double rho = 0.0;
  bool satisfied = false;
  SemiringValue d_phi;
  SemiringValue d_not_phi;
};

struct PrefixPoint {
  std::size_t t = 0;  ///< prefix length
  double rho = 0.0;
  bool satisfied = false;
};

/// rho from the two trace values: the distance to the complement when the
/// trace is in the language, the negated distance to the language otherwise.
double robustness_degree(const Semiring& s, SemiringValue v_phi, SemiringValue v_not_phi) noexcept;

/// The pair of weighted automata for a specification and its complement.
class RobustnessMonitor {
 public:
  struct Options {
    /// Determinize once and read both values off a single run.
    bool deterministic = false;
  };

  RobustnessMonitor(const Spec& spec, Semiring s, PointwiseDistance d);
  RobustnessMonitor(const Spec& spec, Semiring s, PointwiseDistance d, Options options);

  RobustnessVerdict evaluate(const Trace& trace) const;
  std::vector<PrefixPoint> prefix_series(const Trace& trace) const;

  const Spec& spec() const noexcept { return spec_; }
  Semiring semiring() const noexcept { return semiring_; }
  bool deterministic() const noexcept { return options_.deterministic; }
  /// Automaton of the specification (the determinized one in deterministic mode).
  const SymbolicWeightedAutomaton& positive() const noexcept { return positive_; }
  /// Automaton of the complement; unused in deterministic mode.
  const SymbolicWeightedAutomaton& negative() const noexcept { return negative_; }

 private:
  bool satisfied(const Trace& trace) const;

  Spec spec_;
  Semiring semiring_;
  Options options_;
  SymbolicWeightedAutomaton positive_;
  SymbolicWeightedAutomaton negative_;
};

RobustnessVerdict rob(const Trace& trace, const Spec& spec, Semiring s, PointwiseDistance d);
RobustnessVerdict rob(const Trace& trace, const StlFormula& f, Semiring s, PointwiseDistance d);
RobustnessVerdict rob(const Trace& trace, const SreExpr& e, Semiring s, PointwiseDistance d);
std::vector<PrefixPoint> rob_prefix_series(const Trace& trace, const Spec& spec, Semiring s, PointwiseDistance d);

/// Automaton for the specification and for its complement, unweighted.
SymbolicAutomaton spec_automaton(const Spec& spec);
SymbolicAutomaton complement_automaton(const Spec& spec);

bool satisfies(const Trace& trace, const Spec& spec);

inline constexpr std::size_t kDefaultOracleLimit = 1'000'000;

/// oplus over all accepting location sequences of length |trace| of the
/// otimes of per-step weights. Throws LimitExceeded beyond `limit` paths.
SemiringValue path_oracle(const Trace& trace, const SymbolicWeightedAutomaton& w,
                          std::size_t limit = kDefaultOracleLimit);

/// oplus over every equal-length trace on `grid` that satisfies `spec` of its
/// pointwise distance to `trace`. Variables outside the grid keep their values.
/// Throws LimitExceeded when more than `limit` candidate traces exist.
SemiringValue trace_distance_oracle(const Trace& trace, const Spec& spec, Semiring s, PointwiseDistance d,
                                    const Grid& grid, std::size_t limit = kDefaultOracleLimit);

}  // namespace arv
