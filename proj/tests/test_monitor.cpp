#include <doctest.h>

#include "arv/error.hpp"
#include "arv/fixtures.hpp"
#include "arv/monitor.hpp"
#include "arv/random.hpp"
#include "arv/suites.hpp"

using namespace arv;

namespace {

constexpr double inf = Interval::kInf;
const Semiring all[] = {Semiring::boolean(), Semiring::minmax(), Semiring::tropical()};

Trace xs(std::vector<double> values) {
  std::vector<std::vector<double>> rows;
  for (double v : values) rows.push_back({v});
  return Trace::from_rows({"x"}, rows);
}

Spec stl(const char* text) { return {SpecLanguage::Stl, parse_stl(text)}; }
Spec sre(const char* text) { return {SpecLanguage::Sre, parse_sre(text)}; }

}  // namespace

TEST_CASE("per-location costs of the worked example") {
  const auto a = fixtures::example_automaton();
  const auto trace = fixtures::example_trace();
  for (const auto& table : fixtures::example_tables()) {
    CAPTURE(table.semiring.name());
    const auto w = decorate(a, table.semiring);
    ValStream stream(w);
    for (Location q = 0; q < 3; ++q) CHECK(stream.costs().cost[q].value == table.rows[q][0]);
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto v = stream.step(trace[i]);
      CHECK(stream.costs().step == i + 1);
      CHECK(v == val(trace.prefix(i + 1), w));
      for (Location q = 0; q < 3; ++q) CHECK(stream.costs().cost[q].value == table.rows[q][i + 1]);
    }
    CHECK(val(trace, w).value == table.final_value);
    CHECK(path_oracle(trace, w).value == table.final_value);
  }
}

TEST_CASE("streams") {
  const auto w = decorate(fixtures::example_automaton(), Semiring::minmax());
  const auto t1 = fixtures::example_trace();
  const auto t2 = Trace::from_rows({"x", "y"}, {{0, 9}, {0, 9}, {9, 0}});
  ValStream s1(w), s2(w);
  for (std::size_t i = 0; i < 3; ++i) {
    s1.step(t1[i]);
    s2.step(t2[i]);
  }
  s1.step(t1[3]);
  CHECK(s1.value() == val(t1, w));
  CHECK(s2.value() == val(t2, w));
  s1.close();
  CHECK_THROWS_AS(s1.step(t1[0]), PreconditionError);
  CHECK_THROWS_AS(val(Trace({"x", "y"}, {}), w), PreconditionError);
  CHECK_THROWS_AS(val(xs({1}), w), UnboundVariable);
}

TEST_CASE("robustness examples") {
  for (const auto& s : all) {
    const auto r = rob(Trace::from_rows({"a"}, {{1}, {7}}), parse_stl("G((a >= 5) && (a < 5))"), s, default_distance(s));
    CHECK(r.rho == to_signed(s.zero(), true));
    CHECK_FALSE(r.satisfied);
  }
  const auto g = rob(xs({4, 7}), parse_stl("G(x <= 10)"), Semiring::minmax(), PointwiseDistance::AbsDiff);
  CHECK(g.rho == 3);
  CHECK(g.satisfied);
  CHECK(g.d_phi == SemiringValue{0});
  const auto b1 = rob(xs({4, 7}), parse_stl("G(x <= 10)"), Semiring::boolean(), PointwiseDistance::Discrete01);
  CHECK(b1.rho == 1);
  const auto b2 = rob(xs({4, 17}), parse_stl("G(x <= 10)"), Semiring::boolean(), PointwiseDistance::Discrete01);
  CHECK(b2.rho == -1);
  const auto valid = rob(xs({4}), parse_stl("x <= 1 || x > 1"), Semiring::tropical(), PointwiseDistance::AbsDiff);
  CHECK(valid.rho == inf);
  const auto t = rob(xs({4, 7}), parse_stl("G(x <= 5)"), Semiring::tropical(), PointwiseDistance::AbsDiff);
  CHECK(t.rho == -2);
  const auto e = rob(xs({4, 7}), parse_sre("x <= 5 ; x >= 7"), Semiring::tropical(), PointwiseDistance::AbsDiff);
  CHECK(e.satisfied);
  CHECK(e.rho == 0);
  const auto e2 = rob(xs({4, 9}), parse_sre("x <= 5 ; x >= 7"), Semiring::tropical(), PointwiseDistance::AbsDiff);
  CHECK(e2.rho == 1);
  CHECK_THROWS_AS(rob(xs({1}), parse_stl("Y(x <= 1)"), Semiring::minmax(), PointwiseDistance::AbsDiff),
                  UnsupportedFragment);
}

TEST_CASE("prefix series") {
  const auto trace = xs({2, 2, 2, 2});
  const auto series = rob_prefix_series(trace, stl("G(x <= 5)"), Semiring::minmax(), PointwiseDistance::AbsDiff);
  REQUIRE(series.size() == 4);
  for (const auto& p : series) {
    CHECK(p.rho == 3);
    CHECK(p.satisfied);
  }
  random::Rng rng(61);
  random::StlShape shape;
  for (int i = 0; i < 50; ++i) {
    const Spec spec{SpecLanguage::Stl, random::stl(rng, shape)};
    const auto t = random::trace(rng, {"x"}, 6, 0, 4);
    for (const auto& s : all) {
      const auto points = rob_prefix_series(t, spec, s, default_distance(s));
      for (const auto& p : points) {
        const bool sat = eval_stl(t.prefix(p.t), 0, spec.stl());
        CHECK(p.satisfied == sat);
        if (p.rho > 0) CHECK(sat);
        if (p.rho < 0) CHECK_FALSE(sat);
        if (s == Semiring::boolean()) CHECK((p.rho == 1 || p.rho == -1));
        CHECK(p.rho == rob(t.prefix(p.t), spec, s, default_distance(s)).rho);
      }
    }
  }
}

TEST_CASE("deterministic shortcut agrees with the two-automata path") {
  random::Rng rng(67);
  random::StlShape shape;
  random::SreShape sre_shape;
  for (int i = 0; i < 60; ++i) {
    const Spec spec = i % 2 ? Spec{SpecLanguage::Stl, random::stl(rng, shape)}
                            : Spec{SpecLanguage::Sre, random::sre(rng, sre_shape)};
    for (const auto& s : all) {
      const RobustnessMonitor two(spec, s, default_distance(s));
      const RobustnessMonitor one(spec, s, default_distance(s), {true});
      for (int k = 0; k < 5; ++k) {
        const auto t = random::trace(rng, {"x"}, 1 + k, 0, 4, 0.5);
        const auto a = two.evaluate(t);
        const auto b = one.evaluate(t);
        REQUIRE(a.rho == b.rho);
        REQUIRE(a.d_phi == b.d_phi);
        REQUIRE(a.d_not_phi == b.d_not_phi);
      }
    }
  }
}

TEST_CASE("path oracle") {
  const auto w = decorate(fixtures::example_automaton(), Semiring::tropical());
  CHECK(path_oracle(fixtures::example_trace(), w) == SemiringValue{2});
  CHECK(path_oracle(fixtures::example_trace().prefix(1), w) == SemiringValue::infinity());
  CHECK_THROWS_AS(path_oracle(fixtures::example_trace(), w, 3), LimitExceeded);
  for (const auto& s : all) {
    const auto r = suites::path_suite(71, 150, s);
    CHECK_MESSAGE(r.mismatches == 0, r.first_mismatch.value_or(""));
  }
}

TEST_CASE("trace distance oracle") {
  const Grid grid{{"x", {0, 4}}};
  const auto t = Semiring::tropical();
  const auto m = Semiring::minmax();
  CHECK(trace_distance_oracle(xs({3}), stl("F(x <= 1)"), t, PointwiseDistance::AbsDiff, grid) == SemiringValue{2});
  CHECK(trace_distance_oracle(xs({3}), stl("x < 0"), t, PointwiseDistance::AbsDiff, grid) == SemiringValue::infinity());
  CHECK(trace_distance_oracle(xs({3, 4}), stl("G(x <= 4)"), m, PointwiseDistance::AbsDiff, grid) == SemiringValue{0});
  CHECK_THROWS_AS(trace_distance_oracle(xs({3, 4, 1, 1, 1, 1, 1, 1, 1}), stl("G(x <= 4)"), m, PointwiseDistance::AbsDiff,
                                        grid),
                  LimitExceeded);
  for (const auto& s : all) {
    const auto r = suites::distance_suite(73, 80, s);
    CHECK_MESSAGE(r.mismatches == 0, r.first_mismatch.value_or(""));
  }
}

TEST_CASE("one of the two values is always e_times") {
  random::Rng rng(79);
  random::StlShape shape;
  random::SreShape sre_shape;
  for (int i = 0; i < 150; ++i) {
    const Spec spec = i % 3 ? Spec{SpecLanguage::Stl, random::stl(rng, shape)}
                            : Spec{SpecLanguage::Sre, random::sre(rng, sre_shape)};
    const auto trace = random::trace(rng, {"x"}, 1 + i % 5, -1, 5, 0.5);
    for (const auto& s : all) {
      const auto r = rob(trace, spec, s, default_distance(s));
      CHECK((r.d_phi == s.one() || r.d_not_phi == s.one()));
      if (r.satisfied) CHECK(r.d_phi == s.one());
      if (s == Semiring::boolean()) CHECK((r.d_phi == s.one()) == r.satisfied);
    }
  }
}

TEST_CASE("costs stay between the identities") {
  random::Rng rng(83);
  random::PredicateShape shape{{"x"}, 0, 4, 2, 2, false};
  for (int i = 0; i < 100; ++i) {
    const auto a = random::automaton(rng, shape, 5);
    for (const auto& s : all) {
      const auto w = decorate(a, s);
      ValStream stream(w);
      const auto trace = random::trace(rng, {"x"}, 6, -2, 6);
      for (const auto& v : trace.samples()) {
        stream.step(v);
        for (const auto& c : stream.costs().cost) {
          CHECK(s.nat_leq(s.one(), c));
          CHECK(s.nat_leq(c, s.zero()));
        }
      }
    }
  }
}

TEST_CASE("syntactic variants of the same property get the same robustness") {
  random::Rng rng(89);
  const auto p1 = stl("a >= -30 && a <= 30");
  const auto p2 = stl("(a >= -30 && a < 0) || (a >= 0 && a <= 30)");
  const auto p3 = stl("F(a >= -10)");
  const auto p4 = stl("F((a >= -10 && a <= 60) || (a >= 55))");
  for (int i = 0; i < 30; ++i) {
    const auto t = random::trace(rng, {"a"}, 1 + i % 20, -80, 80, 0.25);
    for (const auto& s : {Semiring::minmax(), Semiring::tropical()}) {
      CHECK(rob(t, p1, s, PointwiseDistance::AbsDiff).rho == rob(t, p2, s, PointwiseDistance::AbsDiff).rho);
      CHECK(rob(t, p3, s, PointwiseDistance::AbsDiff).rho == rob(t, p4, s, PointwiseDistance::AbsDiff).rho);
    }
  }
}
