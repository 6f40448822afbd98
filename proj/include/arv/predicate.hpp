#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arv/interval.hpp"
#include "arv/valuation.hpp"

namespace arv {

/// Comparison used by basic propositions `x < k` and `x <= k`.
enum class Cmp { Less, LessEq };

/// A DNF literal: true, false, `x cmp k`, or its negation.
struct Literal {
  enum class Kind { True, False, Atom };

  Kind kind = Kind::True;
  std::string var;
  Cmp cmp = Cmp::LessEq;
  double constant = 0.0;
  bool negated = false;

  static Literal top() { return {}; }
  static Literal bottom() { return {Kind::False, {}, Cmp::LessEq, 0.0, false}; }
  static Literal atom(std::string var, Cmp cmp, double constant, bool negated = false) {
    return {Kind::Atom, std::move(var), cmp, constant, negated};
  }

  bool is_atom() const noexcept { return kind == Kind::Atom; }
  Literal negation() const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Conjunct = std::vector<Literal>;

/// Disjunction of conjunctions of literals. Never has zero clauses: the
/// unsatisfiable predicate is a single clause holding `false`.
struct DnfPredicate {
  std::vector<Conjunct> clauses;
  /// Set only by wedge_minimize / minimal_dnf.
  bool wedge_minimal = false;

  static DnfPredicate top() { return {{{Literal::top()}}, true}; }
  static DnfPredicate bottom() { return {{{Literal::bottom()}}, false}; }

  /// Structural equality of clauses, ignoring the minimality flag.
  bool same_clauses(const DnfPredicate& other) const { return clauses == other.clauses; }

  friend bool operator==(const DnfPredicate&, const DnfPredicate&) = default;
};

/// Boolean combination of single-variable comparisons.
class Predicate {
 public:
  enum class Op { True, False, Atom, Not, And, Or };

  static Predicate top();
  static Predicate bottom();
  static Predicate atom(std::string var, Cmp cmp, double constant);
  static Predicate negation(Predicate p);
  static Predicate conjunction(Predicate a, Predicate b);
  static Predicate disjunction(Predicate a, Predicate b);

  Op op() const noexcept { return node_->op; }
  const std::string& var() const noexcept { return node_->var; }
  Cmp cmp() const noexcept { return node_->cmp; }
  double constant() const noexcept { return node_->constant; }
  const Predicate& lhs() const { return node_->children.at(0); }
  const Predicate& rhs() const { return node_->children.at(1); }

  friend bool operator==(const Predicate& a, const Predicate& b);

 private:
  struct Node {
    Op op = Op::True;
    std::string var;
    Cmp cmp = Cmp::LessEq;
    double constant = 0.0;
    std::vector<Predicate> children;
  };

  explicit Predicate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool holds(const Valuation& v, const Literal& l);
bool evaluate(const Valuation& v, const Predicate& p);
bool evaluate(const Valuation& v, const Conjunct& c);
bool evaluate(const Valuation& v, const DnfPredicate& p);

/// De Morgan push-down followed by distribution of and over or.
DnfPredicate to_dnf(const Predicate& p);
Predicate to_predicate(const DnfPredicate& p);

/// Per clause, drops every literal implied by another literal of that clause.
/// Clauses containing `false` are dropped; `true` is dropped from clauses
/// that have other literals. The result is flagged wedge_minimal.
DnfPredicate wedge_minimize(const DnfPredicate& p);

/// True if `premise` implies `conclusion` (interval containment for atoms).
bool implies(const Literal& premise, const Literal& conclusion);

bool is_sat(const Conjunct& c);
bool is_sat(const DnfPredicate& p);

DnfPredicate dnf_and(const DnfPredicate& a, const DnfPredicate& b);
DnfPredicate dnf_or(const DnfPredicate& a, const DnfPredicate& b);
/// Drops unsatisfiable clauses; yields bottom() when none remain.
DnfPredicate prune_unsat(const DnfPredicate& p);

/// Sorted, de-duplicated variable names mentioned by the predicate.
std::vector<std::string> variables_of(const DnfPredicate& p);
std::vector<std::string> variables_of(const Predicate& p);

/// Region of a comparison literal on its variable's axis.
Interval literal_interval(const Literal& l);

/// Intersects `box` (one component per entry of `vars`) with the region of `c`.
IntervalVector conjunct_box(const IntervalVector& box, const Conjunct& c, const std::vector<std::string>& vars);

/// Pairwise-disjoint boxes whose union is the region of `p`.
std::vector<IntervalVector> dnf_boxes(const DnfPredicate& p, const std::vector<std::string>& vars);

/// One clause per non-empty box, encoding each bound with a single literal.
DnfPredicate boxes_to_dnf(const std::vector<IntervalVector>& boxes, const std::vector<std::string>& vars);

/// Equivalent DNF whose clauses are pairwise disjoint and wedge-minimal.
DnfPredicate minimal_dnf(const DnfPredicate& p, const std::vector<std::string>& vars);
DnfPredicate minimal_dnf(const DnfPredicate& p);

/// Shortest decimal spelling that reads back to the same double.
std::string format_number(double x);

/// Concrete syntax understood by parse_predicate: `x <= 3 && !(y < 6) || z < 0`.
std::string to_string(const Literal& l);
std::string to_string(const Conjunct& c);
std::string to_string(const DnfPredicate& p);
std::string to_string(const Predicate& p);

}  // namespace arv
