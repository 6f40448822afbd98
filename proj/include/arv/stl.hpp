#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arv/predicate.hpp"
#include "arv/valuation.hpp"

namespace arv {

/// Discrete time window [lo, hi] or [lo, inf).
struct TimeInterval {
  unsigned lo = 0;
  std::optional<unsigned> hi;  ///< nullopt means unbounded

  static TimeInterval unbounded(unsigned lo = 0) { return {lo, std::nullopt}; }
  static TimeInterval closed(unsigned lo, unsigned hi) { return {lo, hi}; }

  bool is_bounded() const noexcept { return hi.has_value(); }
  bool contains(long d) const noexcept { return d >= static_cast<long>(lo) && (!hi || d <= static_cast<long>(*hi)); }

  std::string to_string() const;

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

/// Relations accepted in STL atoms. `>` and `>=` are negated literals.
enum class Rel { Lt, Le, Gt, Ge };

Literal atom_literal(const std::string& var, Rel rel, double constant);

/// Immutable discrete-time STL formula with past and future operators.
class StlFormula {
 public:
  enum class Op {
    True, False, Atom, Not, And, Or, Implies,
    Until, Since, Eventually, Globally, Once, Historically, Next, Previous,
  };

  static StlFormula top();
  static StlFormula bottom();
  static StlFormula atom(std::string var, Rel rel, double constant);
  static StlFormula negation(StlFormula f);
  static StlFormula conjunction(StlFormula a, StlFormula b);
  static StlFormula disjunction(StlFormula a, StlFormula b);
  static StlFormula implication(StlFormula a, StlFormula b);
  static StlFormula until(StlFormula a, StlFormula b, TimeInterval i = TimeInterval::unbounded());
  static StlFormula since(StlFormula a, StlFormula b, TimeInterval i = TimeInterval::unbounded());
  static StlFormula eventually(StlFormula f, TimeInterval i = TimeInterval::unbounded());
  static StlFormula globally(StlFormula f, TimeInterval i = TimeInterval::unbounded());
  static StlFormula once(StlFormula f, TimeInterval i = TimeInterval::unbounded());
  static StlFormula historically(StlFormula f, TimeInterval i = TimeInterval::unbounded());
  static StlFormula next(StlFormula f);
  static StlFormula previous(StlFormula f);

  Op op() const noexcept { return node_->op; }
  const std::string& var() const noexcept { return node_->var; }
  Rel rel() const noexcept { return node_->rel; }
  double constant() const noexcept { return node_->constant; }
  const TimeInterval& interval() const noexcept { return node_->interval; }
  const std::vector<StlFormula>& children() const noexcept { return node_->children; }
  const StlFormula& child(std::size_t i = 0) const { return node_->children.at(i); }

  /// Identity of the shared node; stable for the lifetime of the formula.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const StlFormula& a, const StlFormula& b);

 private:
  struct Node {
    Op op = Op::True;
    std::string var;
    Rel rel = Rel::Le;
    double constant = 0.0;
    TimeInterval interval;
    std::vector<StlFormula> children;
  };

  static StlFormula make(Op op, std::vector<StlFormula> children, TimeInterval i = {});
  explicit StlFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool is_past_free(const StlFormula& f);
/// Name of the first past operator found, if any.
std::optional<std::string> first_past_operator(const StlFormula& f);
std::vector<std::string> variables_of(const StlFormula& f);
std::size_t formula_size(const StlFormula& f);

/// Rewrites derived operators so only true/false, atoms (`<`, `<=`), not, or,
/// until and since remain.
StlFormula desugar(const StlFormula& f);

/// Syntactic negation that cancels a leading double negation.
StlFormula negate(const StlFormula& f);

/// Expands bounded until into nested next/and/or and reduces [a, inf) windows
/// to an a-fold next prefix before an unbounded until. Expects desugared input.
StlFormula unfold_bounded(const StlFormula& f);

/// Satisfaction of `f` at position `i` (strict-in-both until/since, finite trace).
bool eval_stl(const Trace& trace, std::size_t i, const StlFormula& f);
/// Satisfaction at every position of the trace.
std::vector<bool> eval_stl_all(const Trace& trace, const StlFormula& f);

/// Fully parenthesized concrete syntax accepted by parse_stl.
std::string to_string(const StlFormula& f);

}  // namespace arv
