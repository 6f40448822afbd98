#pragma once

#include <map>
#include <string>
#include <vector>

#include "arv/predicate.hpp"
#include "arv/semiring.hpp"
#include "arv/valuation.hpp"

namespace arv {

enum class PointwiseDistance {
  Discrete01,  ///< 0 if equal, 1 otherwise
  AbsDiff,     ///< |a - b|
};

/// The distance each shipped semiring is paired with.
PointwiseDistance default_distance(const Semiring& s) noexcept;

SemiringValue point_dist(double a, double b, PointwiseDistance kind) noexcept;

struct VpdOptions {
  /// Allows non-minimal DNF under a semiring that lacks multiplicative
  /// idempotence. Reproduces the accumulation error on purpose; never used
  /// by the monitors.
  bool demonstration_mode = false;
};

/// Distance between a valuation and a DNF predicate: unsatisfiable parts
/// weigh e_plus, satisfied literals e_times, violated literals the pointwise
/// distance to their constant; disjunction is oplus and conjunction otimes.
///
/// Throws PreconditionError ("requires ∧-minimal DNF") if `s` is not
/// multiplicatively idempotent and `p` is not flagged wedge-minimal.
SemiringValue vpd(const Valuation& v, const DnfPredicate& p, const Semiring& s, PointwiseDistance d,
                  VpdOptions options = {});

/// Inclusive integer range per variable, used by the brute-force oracles.
struct GridRange {
  long lo = 0;
  long hi = 0;
};
using Grid = std::map<std::string, GridRange, std::less<>>;

/// Literal fold of the valuation-predicate distance over a finite grid:
/// oplus over satisfying grid points of otimes over variables of the
/// pointwise distance. e_plus when no grid point satisfies `p`.
SemiringValue vpd_oracle(const Valuation& v, const DnfPredicate& p, const Semiring& s, PointwiseDistance d,
                         const Grid& grid);

}  // namespace arv
