#include "arv/distance.hpp"

#include <cmath>

#include "arv/error.hpp"

namespace arv {

PointwiseDistance default_distance(const Semiring& s) noexcept {
  return s.kind() == SemiringKind::Boolean ? PointwiseDistance::Discrete01 : PointwiseDistance::AbsDiff;
}

SemiringValue point_dist(double a, double b, PointwiseDistance kind) noexcept {
  switch (kind) {
    case PointwiseDistance::Discrete01: return {a == b ? 0.0 : 1.0};
    case PointwiseDistance::AbsDiff: return {std::fabs(a - b)};
  }
  return {0.0};
}

namespace {

SemiringValue conjunct_distance(const Valuation& v, const Conjunct& c, const Semiring& s, PointwiseDistance d) {
  if (!is_sat(c)) return s.zero();
  SemiringValue acc = s.one();
  for (const auto& l : c) {
    if (holds(v, l)) continue;
    acc = s.otimes(acc, d == PointwiseDistance::Discrete01 ? SemiringValue{1.0}
                                                           : point_dist(v.at(l.var), l.constant, d));
  }
  return acc;
}

}  // namespace

SemiringValue vpd(const Valuation& v, const DnfPredicate& p, const Semiring& s, PointwiseDistance d,
                  VpdOptions options) {
  if (!s.flags().multiplicatively_idempotent && !p.wedge_minimal && !options.demonstration_mode) {
    throw PreconditionError("requires ∧-minimal DNF");
  }
  SemiringValue acc = s.zero();
  for (const auto& c : p.clauses) acc = s.oplus(acc, conjunct_distance(v, c, s, d));
  return acc;
}

SemiringValue vpd_oracle(const Valuation& v, const DnfPredicate& p, const Semiring& s, PointwiseDistance d,
                         const Grid& grid) {
  std::vector<std::string> vars;
  std::vector<GridRange> ranges;
  for (const auto& [name, range] : grid) {
    if (range.hi < range.lo) throw PreconditionError("empty grid range for '" + name + "'");
    vars.push_back(name);
    ranges.push_back(range);
  }
  for (const auto& name : variables_of(p)) {
    if (!grid.contains(name)) throw PreconditionError("grid does not cover '" + name + "'");
  }

  SemiringValue best = s.zero();
  std::vector<long> point(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) point[i] = ranges[i].lo;
  Valuation candidate;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) candidate.set(vars[i], static_cast<double>(point[i]));
    if (evaluate(candidate, p)) {
      SemiringValue cost = s.one();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        cost = s.otimes(cost, point_dist(v.at(vars[i]), static_cast<double>(point[i]), d));
      }
      best = s.oplus(best, cost);
    }
    std::size_t k = 0;
    while (k < point.size() && point[k] == ranges[k].hi) {
      point[k] = ranges[k].lo;
      ++k;
    }
    if (k == point.size()) break;
    ++point[k];
  }
  return best;
}

}  // namespace arv
