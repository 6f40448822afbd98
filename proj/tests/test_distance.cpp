#include <doctest.h>

#include "arv/distance.hpp"
#include "arv/error.hpp"
#include "arv/parser.hpp"
#include "arv/random.hpp"
#include "arv/suites.hpp"

using namespace arv;

namespace {

DnfPredicate dnf(const char* text) { return to_dnf(parse_predicate(text)); }
DnfPredicate minimal(const char* text) { return wedge_minimize(dnf(text)); }

const Semiring tropical = Semiring::tropical();
const Semiring minmax = Semiring::minmax();
const Semiring boolean = Semiring::boolean();

}  // namespace

TEST_CASE("pointwise distances") {
  CHECK(point_dist(6, 3, PointwiseDistance::AbsDiff) == SemiringValue{3});
  CHECK(point_dist(5, 5, PointwiseDistance::AbsDiff) == SemiringValue{0});
  CHECK(point_dist(2, 7, PointwiseDistance::Discrete01) == SemiringValue{1});
  CHECK(point_dist(7, 7, PointwiseDistance::Discrete01) == SemiringValue{0});
  CHECK(default_distance(boolean) == PointwiseDistance::Discrete01);
  CHECK(default_distance(tropical) == PointwiseDistance::AbsDiff);
}

TEST_CASE("pointwise distances are metrics") {
  random::Rng rng(3);
  std::uniform_real_distribution<double> u(-20, 20);
  for (auto kind : {PointwiseDistance::AbsDiff, PointwiseDistance::Discrete01}) {
    for (int i = 0; i < 2000; ++i) {
      const double a = std::round(u(rng)), b = std::round(u(rng)), c = std::round(u(rng));
      CHECK(point_dist(a, b, kind) == point_dist(b, a, kind));
      CHECK((point_dist(a, b, kind).value == 0) == (a == b));
      CHECK(point_dist(a, c, kind).value <= point_dist(a, b, kind).value + point_dist(b, c, kind).value);
    }
  }
}

TEST_CASE("conjunction minimality changes the tropical distance") {
  const Valuation v{{"x", 6}};
  CHECK(vpd(v, minimal("x <= 3 && x <= 5"), tropical, PointwiseDistance::AbsDiff) == SemiringValue{3});
  CHECK(vpd(v, dnf("x <= 3 && x <= 5"), tropical, PointwiseDistance::AbsDiff, {true}) == SemiringValue{4});
  CHECK_THROWS_WITH_AS(vpd(v, dnf("x <= 3 && x <= 5"), tropical, PointwiseDistance::AbsDiff),
                       "requires ∧-minimal DNF", PreconditionError);
  CHECK(vpd(v, dnf("x <= 3 && x <= 5"), minmax, PointwiseDistance::AbsDiff) == SemiringValue{3});
}

TEST_CASE("valuation-predicate distance") {
  CHECK(vpd(Valuation{{"x", 5}}, minimal("x <= 5"), tropical, PointwiseDistance::AbsDiff) == tropical.one());
  CHECK(vpd(Valuation{{"x", 4}, {"y", 2}}, dnf("x <= 3 && !(y < 6)"), minmax, PointwiseDistance::AbsDiff) ==
        SemiringValue{4});
  CHECK(vpd(Valuation{{"x", 4}, {"y", 2}}, minimal("x <= 3 && !(y < 6)"), tropical, PointwiseDistance::AbsDiff) ==
        SemiringValue{5});
  CHECK(vpd(Valuation{{"x", 1}}, minimal("x >= 5 && x < 5"), tropical, PointwiseDistance::AbsDiff) ==
        SemiringValue::infinity());
  CHECK(vpd(Valuation{{"x", 1}}, minimal("x > 3 || x < -2"), minmax, PointwiseDistance::AbsDiff) == SemiringValue{2});
  CHECK(vpd(Valuation{{"x", 1}}, minimal("x > 3"), boolean, PointwiseDistance::Discrete01) == SemiringValue{1});
  CHECK(vpd(Valuation{{"x", 1}}, minimal("true"), tropical, PointwiseDistance::AbsDiff) == tropical.one());
  // Strict boundary: violated but infinitesimally close.
  CHECK(vpd(Valuation{{"x", 0}}, minimal("x > 0"), minmax, PointwiseDistance::AbsDiff) == SemiringValue{0});
  CHECK_THROWS_AS(vpd(Valuation{{"y", 0}}, minimal("x > 0"), minmax, PointwiseDistance::AbsDiff), UnboundVariable);
}

TEST_CASE("grid oracle") {
  const Grid grid{{"x", {-10, 10}}};
  CHECK(vpd_oracle(Valuation{{"x", 6}}, dnf("x <= 3"), tropical, PointwiseDistance::AbsDiff, grid) == SemiringValue{3});
  CHECK(vpd_oracle(Valuation{{"x", 6}}, dnf("x < 3 && x > 3"), tropical, PointwiseDistance::AbsDiff, grid) ==
        SemiringValue::infinity());
  CHECK(vpd_oracle(Valuation{{"x", 2}}, dnf("x <= 3"), minmax, PointwiseDistance::AbsDiff, grid) == SemiringValue{0});
  CHECK_THROWS_AS(vpd_oracle(Valuation{{"x", 2}}, dnf("y <= 3"), minmax, PointwiseDistance::AbsDiff, grid),
                  PreconditionError);
}

TEST_CASE("zero distance exactly on satisfying valuations") {
  random::Rng rng(5);
  random::PredicateShape shape{{"x", "y"}, -8, 8, 3, 3, true};
  for (int i = 0; i < 500; ++i) {
    const auto p = wedge_minimize(random::dnf(rng, shape));
    if (!is_sat(p)) continue;
    const auto v = random::valuation(rng, shape.vars, -10, 10);
    for (const auto& s : {boolean, minmax, tropical}) {
      CHECK((vpd(v, p, s, default_distance(s)) == s.one()) == evaluate(v, p));
    }
  }
}

TEST_CASE("distance equals its definition on the grid") {
  for (const auto& s : {minmax, tropical, boolean}) {
    CAPTURE(s.name());
    const auto r = suites::vpd_suite(17, 300, s);
    CHECK(r.cases == 300);
    CHECK_MESSAGE(r.mismatches == 0, r.first_mismatch.value_or(""));
  }
}
