#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arv/predicate.hpp"
#include "arv/stl.hpp"
#include "arv/valuation.hpp"

namespace arv {

/// Immutable signal regular expression over discrete time.
class SreExpr {
 public:
  enum class Op { Epsilon, Pred, Concat, Union, Intersect, Star, Duration };

  static SreExpr epsilon();
  static SreExpr pred(Predicate p);
  static SreExpr concat(SreExpr a, SreExpr b);
  static SreExpr alt(SreExpr a, SreExpr b);
  static SreExpr intersect(SreExpr a, SreExpr b);
  static SreExpr star(SreExpr e);
  static SreExpr duration(SreExpr e, TimeInterval i);

  Op op() const noexcept { return node_->op; }
  const Predicate& predicate() const { return node_->predicate; }
  const TimeInterval& interval() const noexcept { return node_->interval; }
  const std::vector<SreExpr>& children() const noexcept { return node_->children; }
  const SreExpr& child(std::size_t i = 0) const { return node_->children.at(i); }
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const SreExpr& a, const SreExpr& b);

 private:
  struct Node {
    Op op = Op::Epsilon;
    Predicate predicate = Predicate::top();
    TimeInterval interval;
    std::vector<SreExpr> children;
  };

  static SreExpr make(Op op, std::vector<SreExpr> children);
  explicit SreExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::vector<std::string> variables_of(const SreExpr& e);
std::size_t expression_size(const SreExpr& e);

/// Match relation on the segment [i, j) of the trace, 0 <= i <= j <= |trace|.
/// A basic proposition matches a segment when every sample in it satisfies
/// the predicate (so also the empty segment); concatenation splits at any
/// i <= k <= j.
bool eval_sre(const Trace& trace, std::size_t i, std::size_t j, const SreExpr& e);

/// Whole-trace membership: eval_sre(trace, 0, |trace|, e).
bool sre_accepts(const Trace& trace, const SreExpr& e);

std::string to_string(const SreExpr& e);

}  // namespace arv
