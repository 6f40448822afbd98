#include <doctest.h>

#include "arv/error.hpp"
#include "arv/parser.hpp"
#include "arv/predicate.hpp"
#include "arv/random.hpp"

using namespace arv;

namespace {

DnfPredicate dnf(const char* text) { return to_dnf(parse_predicate(text)); }

Interval closed(double a, double b) { return Interval(a, true, b, true); }
Interval open(double a, double b) { return Interval(a, false, b, false); }
constexpr double inf = Interval::kInf;

bool in_boxes(const std::vector<IntervalVector>& boxes, const std::vector<double>& point) {
  for (const auto& b : boxes) {
    if (b.contains(point)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("to_dnf pushes negations to literals") {
  CHECK(to_string(dnf("!(x <= 3 || y <= 2)")) == "!(x <= 3) && !(y <= 2)");
  CHECK(to_string(dnf("x <= 3 && x <= 5 && y <= 5 || z > 0")) == "x <= 3 && x <= 5 && y <= 5 || !(z <= 0)");
  CHECK(to_string(dnf("true")) == "true");
  CHECK(to_string(dnf("!!(x < 1)")) == "x < 1");
  CHECK(to_string(dnf("(x < 1 || y < 1) && z <= 0")) == "x < 1 && z <= 0 || y < 1 && z <= 0");
}

TEST_CASE("wedge_minimize") {
  CHECK(to_string(wedge_minimize(dnf("x <= 3 && x <= 5"))) == "x <= 3");
  CHECK(to_string(wedge_minimize(dnf("x <= 3 && y <= 5 || z > 0"))) == "x <= 3 && y <= 5 || !(z <= 0)");
  CHECK(to_string(wedge_minimize(dnf("!(x < 1) && !(x < 1.5)"))) == "!(x < 1.5)");
  CHECK(to_string(wedge_minimize(dnf("true && x <= 2"))) == "x <= 2");
  CHECK(to_string(wedge_minimize(dnf("false && x <= 2 || y < 1"))) == "y < 1");
  CHECK(to_string(wedge_minimize(dnf("false"))) == "false");
  CHECK(to_string(wedge_minimize(dnf("x < 3 && x <= 3"))) == "x < 3");
  CHECK(wedge_minimize(dnf("x <= 3 && x <= 5")).wedge_minimal);
  CHECK_FALSE(dnf("x <= 3").wedge_minimal);
}

TEST_CASE("satisfiability") {
  CHECK_FALSE(is_sat(dnf("x >= 5 && x < 5")));
  CHECK(is_sat(dnf("true")));
  CHECK(is_sat(dnf("x <= 1 && !(x <= 2) || y <= 0")));
  CHECK(is_sat(dnf("x <= 5 && x >= 5")));
  CHECK_FALSE(is_sat(dnf("x < 5 && x >= 5")));
  CHECK(to_string(prune_unsat(dnf("x <= 1 && !(x <= 2) || y <= 0"))) == "y <= 0");
}

TEST_CASE("literal intervals") {
  CHECK(literal_interval(Literal::atom("x", Cmp::LessEq, 3)) == Interval(-inf, false, 3, true));
  CHECK(literal_interval(Literal::atom("x", Cmp::Less, 2.5, true)) == Interval(2.5, true, inf, false));
  CHECK(literal_interval(Literal::atom("x", Cmp::Less, 0)) == Interval(-inf, false, 0, false));
  CHECK(literal_interval(Literal::atom("x", Cmp::LessEq, 2, true)) == Interval(2, false, inf, false));
}

TEST_CASE("interval normalization") {
  CHECK(Interval(3, true, 1, true).is_empty());
  CHECK(Interval(1, true, 1, false).is_empty());
  CHECK_FALSE(Interval::point(1).is_empty());
  CHECK(Interval(-inf, true, inf, true).is_full());
  CHECK(closed(0, 2).intersect(open(1, 3)) == Interval(1, false, 2, true));
  CHECK(closed(0, 1).complement() == std::vector<Interval>{Interval(-inf, false, 0, false), Interval(1, false, inf, false)});
  CHECK(Interval::full().complement().empty());
  CHECK(open(1, 2).contains(1.5));
  CHECK_FALSE(open(1, 2).contains(2));
}

TEST_CASE("conjunct boxes") {
  const std::vector<std::string> x{"x"};
  const Conjunct c{Literal::atom("x", Cmp::LessEq, 3), Literal::atom("x", Cmp::Less, 1, true)};
  CHECK(conjunct_box(IntervalVector::full(1), c, x) == IntervalVector({closed(1, 3)}));
  CHECK(conjunct_box(IntervalVector::full(1), {Literal::bottom()}, x).is_empty());
  CHECK(conjunct_box(IntervalVector::full(1), {Literal::top()}, x).is_full());
}

TEST_CASE("box complement") {
  const IntervalVector box({closed(2, 4), closed(2, 4)});
  const auto rest = complement_box(box);
  CHECK(rest.size() == 8);
  const std::vector<IntervalVector> expected{
      IntervalVector({Interval(-inf, false, 2, false), Interval(4, false, inf, false)}),
      IntervalVector({closed(2, 4), Interval(4, false, inf, false)}),
      IntervalVector({Interval(4, false, inf, false), Interval(4, false, inf, false)}),
      IntervalVector({Interval(-inf, false, 2, false), closed(2, 4)}),
      IntervalVector({Interval(4, false, inf, false), closed(2, 4)}),
      IntervalVector({Interval(-inf, false, 2, false), Interval(-inf, false, 2, false)}),
      IntervalVector({closed(2, 4), Interval(-inf, false, 2, false)}),
      IntervalVector({Interval(4, false, inf, false), Interval(-inf, false, 2, false)}),
  };
  for (const auto& e : expected) CHECK(std::find(rest.begin(), rest.end(), e) != rest.end());
  for (double x = 0; x <= 6; x += 0.5) {
    for (double y = 0; y <= 6; y += 0.5) {
      int hits = box.contains({x, y}) ? 1 : 0;
      for (const auto& r : rest) hits += r.contains({x, y}) ? 1 : 0;
      CHECK(hits == 1);
    }
  }
  CHECK(complement_box(IntervalVector::full(2)).empty());
  CHECK(complement_box(IntervalVector({closed(0, 1)})) ==
        std::vector<IntervalVector>{IntervalVector({Interval(-inf, false, 0, false)}),
                                    IntervalVector({Interval(1, false, inf, false)})});
}

TEST_CASE("disjoint boxes and minimal DNF") {
  const std::vector<std::string> x{"x"};
  CHECK(dnf_boxes(dnf("x <= 3"), x) == std::vector<IntervalVector>{IntervalVector({Interval(-inf, false, 3, true)})});
  CHECK(to_string(boxes_to_dnf({IntervalVector({closed(1, 3)})}, x)) == "!(x < 1) && x <= 3");
  CHECK(to_string(boxes_to_dnf({IntervalVector::full(1)}, x)) == "true");
  CHECK(to_string(boxes_to_dnf({IntervalVector({Interval(2, false, inf, false)})}, x)) == "!(x <= 2)");
  CHECK(to_string(minimal_dnf(dnf("x <= 3"))) == "x <= 3");

  const auto region = dnf("x <= 3 || x <= 5");
  const auto m = minimal_dnf(region);
  for (double v = -2; v <= 8; v += 0.5) CHECK(evaluate(Valuation{{"x", v}}, m) == (v <= 5));

  // Two overlapping rectangles forming an L-shaped region.
  const std::vector<std::string> xy{"x", "y"};
  const auto l_shape = dnf("!(x < 1) && x <= 4 && !(y < 1) && y <= 2 || !(x < 3) && x <= 4 && !(y < 1) && y <= 5");
  const auto boxes = dnf_boxes(l_shape, xy);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) CHECK(boxes[i].intersect(boxes[j]).is_empty());
  }
  const auto minimal = minimal_dnf(l_shape, xy);
  CHECK(minimal.wedge_minimal);
  for (double a = 0; a <= 6; a += 0.5) {
    for (double b = 0; b <= 6; b += 0.5) {
      const Valuation v{{"x", a}, {"y", b}};
      CHECK(evaluate(v, minimal) == evaluate(v, l_shape));
      CHECK(in_boxes(boxes, {a, b}) == evaluate(v, l_shape));
    }
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate(Valuation{{"x", 2}}, parse_predicate("x <= 3")));
  CHECK_FALSE(evaluate(Valuation{{"x", 6}}, parse_predicate("x <= 3 && x <= 5")));
  CHECK(evaluate(Valuation{{"x", 5}}, parse_predicate("!(x < 5)")));
  CHECK(evaluate(Valuation{{"x", 5}}, parse_predicate("x >= 5")));
  CHECK_FALSE(evaluate(Valuation{{"x", 5}}, parse_predicate("x > 5")));
  CHECK_THROWS_AS(evaluate(Valuation{{"x", 5}}, parse_predicate("y > 5")), UnboundVariable);
  CHECK_THROWS_WITH(evaluate(Valuation{}, parse_predicate("y > 5")), "unbound variable 'y'");
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(parse_predicate("x <= "), ParseError);
  try {
    parse_predicate("x <= 3 &&& y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("guard rendering round-trips") {
  const auto g = dnf("x <= 3 && !(y < 6)");
  CHECK(to_string(g) == "x <= 3 && !(y < 6)");
  CHECK(to_dnf(parse_predicate(to_string(g))).same_clauses(g));
}

TEST_CASE("normal forms agree on the integer grid") {
  random::Rng rng(11);
  random::PredicateShape shape{{"x", "y", "z"}, -8, 8, 3, 3, false};
  for (int i = 0; i < 60; ++i) {
    const auto p = random::predicate(rng, shape, 3);
    const auto d = to_dnf(p);
    const auto w = wedge_minimize(d);
    CHECK(wedge_minimize(w).same_clauses(w));
    const auto m = minimal_dnf(d, shape.vars);
    const auto boxes = dnf_boxes(d, shape.vars);
    for (std::size_t a = 0; a < boxes.size(); ++a) {
      for (std::size_t b = a + 1; b < boxes.size(); ++b) REQUIRE(boxes[a].intersect(boxes[b]).is_empty());
    }
    for (const auto& c : w.clauses) {
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = 0; b < c.size(); ++b) {
          if (a != b && c[a].is_atom() && c[b].is_atom()) CHECK_FALSE(implies(c[a], c[b]));
        }
      }
    }
    for (long x = -10; x <= 10; ++x) {
      for (long y = -10; y <= 10; ++y) {
        for (long z = -10; z <= 10; z += 5) {
          const Valuation v{{"x", double(x)}, {"y", double(y)}, {"z", double(z)}};
          const bool expected = evaluate(v, p);
          REQUIRE(evaluate(v, d) == expected);
          REQUIRE(evaluate(v, w) == expected);
          REQUIRE(evaluate(v, m) == expected);
          REQUIRE(in_boxes(boxes, {double(x), double(y), double(z)}) == expected);
        }
      }
    }
  }
}
