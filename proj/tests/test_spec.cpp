#include <doctest.h>

#include "arv/error.hpp"
#include "arv/parser.hpp"
#include "arv/random.hpp"
#include "arv/sre.hpp"
#include "arv/stl.hpp"

using namespace arv;

namespace {

Trace xs(std::vector<double> values) {
  std::vector<std::vector<double>> rows;
  for (double v : values) rows.push_back({v});
  return Trace::from_rows({"x"}, rows);
}

}  // namespace

TEST_CASE("parsing the example specifications") {
  const auto phi1 = parse_stl("F (x <= 5 && G[0,1](x <= 3 && y > 6))");
  CHECK(phi1 == StlFormula::eventually(StlFormula::conjunction(
                    StlFormula::atom("x", Rel::Le, 5),
                    StlFormula::globally(StlFormula::conjunction(StlFormula::atom("x", Rel::Le, 3),
                                                                 StlFormula::atom("y", Rel::Gt, 6)),
                                         TimeInterval::closed(0, 1)))));
  const auto psi5 = parse_stl("G((a >= 5) && (a < 5))");
  CHECK(psi5.op() == StlFormula::Op::Globally);
  CHECK(psi5.child().op() == StlFormula::Op::And);

  const auto phi2 = parse_sre("T ; ((x<=5 ; T) & <x<=3 && y>=6>[1,1]) ; T");
  CHECK(phi2.op() == SreExpr::Op::Concat);
  CHECK(variables_of(phi2) == std::vector<std::string>{"x", "y"});
  CHECK(to_string(phi2).find("[1,1]") != std::string::npos);
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_stl("x <= 1 || x <= 2 && x <= 3") ==
        StlFormula::disjunction(StlFormula::atom("x", Rel::Le, 1),
                                StlFormula::conjunction(StlFormula::atom("x", Rel::Le, 2), StlFormula::atom("x", Rel::Le, 3))));
  CHECK(parse_stl("x <= 1 -> x <= 2 -> x <= 3").child(1).op() == StlFormula::Op::Implies);
  CHECK(parse_stl("x <= 1 U[1,2] x <= 2 U x <= 3").child(0).op() == StlFormula::Op::Until);
  CHECK(parse_stl("F[2,inf) x < 0").interval() == TimeInterval::unbounded(2));
  CHECK(parse_stl("!X x <= 0").child().op() == StlFormula::Op::Next);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_stl("F[2,1] x <= 0"), ParseError);
  CHECK_THROWS_AS(parse_stl("x <= "), ParseError);
  CHECK_THROWS_AS(parse_stl("(x <= 1"), ParseError);
  CHECK_THROWS_AS(parse_sre("(x <= 1 ; )"), ParseError);
  CHECK_THROWS_AS(parse_spec("#lang ltl\nx <= 1"), ParseError);
}

TEST_CASE("spec files") {
  const auto s = parse_spec("#lang sre\n# comment\nx <= 3 ; T\n");
  CHECK_FALSE(s.is_stl());
  CHECK(parse_spec("G(x <= 3)").is_stl());
}

TEST_CASE("printing round-trips") {
  random::Rng rng(23);
  random::StlShape shape;
  shape.vars = {"x", "y"};
  for (int i = 0; i < 300; ++i) {
    const auto f = random::stl(rng, shape);
    REQUIRE(parse_stl(to_string(f)) == f);
  }
  random::SreShape sre_shape;
  for (int i = 0; i < 300; ++i) {
    const auto e = random::sre(rng, sre_shape);
    REQUIRE(parse_sre(to_string(e)) == e);
  }
  for (const char* text : {"Y(x <= 1) S[0,2] H x > 3", "P[1,inf) (x >= 1 -> false)"}) {
    const auto f = parse_stl(text);
    CHECK(parse_stl(to_string(f)) == f);
  }
}

TEST_CASE("derived operators") {
  const auto phi = StlFormula::atom("x", Rel::Le, 1);
  CHECK(desugar(StlFormula::eventually(phi)) == StlFormula::until(StlFormula::top(), phi));
  CHECK(desugar(StlFormula::next(phi)) == StlFormula::until(StlFormula::bottom(), phi, TimeInterval::closed(1, 1)));
  CHECK(desugar(StlFormula::globally(phi, TimeInterval::closed(0, 1))) ==
        StlFormula::negation(
            StlFormula::until(StlFormula::top(), StlFormula::negation(phi), TimeInterval::closed(0, 1))));
  CHECK(desugar(StlFormula::atom("x", Rel::Gt, 1)) == StlFormula::negation(StlFormula::atom("x", Rel::Le, 1)));
  CHECK(negate(StlFormula::negation(phi)) == phi);
  CHECK(negate(StlFormula::globally(phi)) == StlFormula::negation(StlFormula::globally(phi)));
}

TEST_CASE("bounded unfolding") {
  const auto psi = StlFormula::atom("x", Rel::Le, 1);
  CHECK(unfold_bounded(desugar(StlFormula::eventually(psi, TimeInterval::closed(0, 0)))) == psi);
  CHECK(unfold_bounded(desugar(StlFormula::eventually(psi, TimeInterval::closed(1, 2)))) ==
        StlFormula::next(StlFormula::disjunction(psi, StlFormula::next(psi))));
  // Finite traces: G[0,1] needs its second sample only when one exists.
  const auto g = unfold_bounded(desugar(StlFormula::globally(psi, TimeInterval::closed(0, 1))));
  CHECK(eval_stl(xs({1}), 0, g));
  CHECK_FALSE(eval_stl(xs({1, 5}), 0, g));
}

TEST_CASE("satisfaction at a position") {
  CHECK(eval_stl(xs({4, 2}), 0, parse_stl("F(x <= 3)")));
  CHECK(eval_stl(xs({4}), 0, parse_stl("G[0,1](x <= 5)")));
  const Trace a = Trace::from_rows({"a"}, {{5}});
  CHECK_FALSE(eval_stl(a, 0, parse_stl("G((a >= 5) && (a < 5))")));
  CHECK_FALSE(eval_stl(xs({1}), 0, parse_stl("X(x <= 5)")));
  CHECK(eval_stl(xs({1}), 0, parse_stl("!X(x > 5)")));
  // Strict until: the left operand is not required at the current position.
  CHECK(eval_stl(xs({9, 9, 0}), 0, parse_stl("(x <= 5) U (x <= 0)")) == false);
  CHECK(eval_stl(xs({9, 3, 0}), 0, parse_stl("(x <= 5) U (x <= 0)")));
  CHECK(eval_stl(xs({9, 0}), 0, parse_stl("(x <= 5) U (x <= 0)")));
  CHECK(eval_stl(xs({0, 9}), 1, parse_stl("Y(x <= 0)")));
  CHECK(eval_stl(xs({0, 9, 9}), 2, parse_stl("P(x <= 0)")));
  CHECK_FALSE(eval_stl(xs({0, 9, 9}), 2, parse_stl("H(x <= 0)")));
  CHECK(eval_stl_all(xs({0, 9, 0}), parse_stl("x <= 0")) == std::vector<bool>{true, false, true});
}

TEST_CASE("segment matching") {
  const auto t1 = xs({2});
  CHECK(eval_sre(t1, 0, 1, parse_sre("x <= 3")));
  CHECK(eval_sre(t1, 0, 0, parse_sre("x <= 0")));
  CHECK(eval_sre(xs({1, 2}), 1, 1, SreExpr::epsilon()));
  CHECK_FALSE(eval_sre(xs({1, 2}), 1, 2, SreExpr::epsilon()));
  CHECK(eval_sre(xs({1, 2, 3}), 0, 3, parse_sre("<x <= 9>[1,1] ; T")));
  CHECK_FALSE(sre_accepts(xs({1, 2, 3}), parse_sre("<x <= 9>[1,1]")));
  CHECK(sre_accepts(xs({1, 5, 1}), parse_sre("(x <= 1 ; x >= 5)* ; x <= 1")));
  CHECK_FALSE(sre_accepts(xs({1, 5, 4}), parse_sre("x <= 1 & x >= 0 ; x >= 5")));
  CHECK_THROWS_AS(eval_sre(t1, 1, 0, SreExpr::epsilon()), PreconditionError);
}

TEST_CASE("rewriting preserves satisfaction") {
  random::Rng rng(29);
  random::StlShape shape;
  shape.min_constant = 0;
  shape.max_constant = 2;
  const auto traces = random::all_traces({"x"}, {0, 1, 2}, 4);
  for (int i = 0; i < 150; ++i) {
    const auto f = random::stl(rng, shape);
    const auto d = desugar(f);
    const auto u = unfold_bounded(d);
    const auto n = negate(f);
    for (const auto& t : traces) {
      for (std::size_t p = 0; p < t.size(); ++p) {
        const bool expected = eval_stl(t, p, f);
        REQUIRE(eval_stl(t, p, d) == expected);
        REQUIRE(eval_stl(t, p, u) == expected);
        REQUIRE(eval_stl(t, p, n) == !expected);
      }
    }
  }
}

TEST_CASE("traces") {
  CHECK_THROWS_AS(Trace({"x", "y"}, {Valuation{{"x", 1}}}), PreconditionError);
  const auto t = xs({1, 2, 3});
  CHECK(t.prefix(2).size() == 2);
  CHECK(t[2].at("x") == 3);
}
