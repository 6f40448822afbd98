#include "arv/suites.hpp"

#include "arv/distance.hpp"
#include "arv/monitor.hpp"
#include "arv/random.hpp"

namespace arv::suites {

namespace {

std::string show(SemiringValue v) { return format_number(v.value); }

void record(SuiteResult& r, bool ok, const std::string& detail) {
  ++r.cases;
  if (ok) return;
  ++r.mismatches;
  if (!r.first_mismatch) r.first_mismatch = detail;
}

}  // namespace

SuiteResult vpd_suite(std::uint64_t seed, std::size_t cases, Semiring s) {
  random::Rng rng(seed);
  random::PredicateShape shape{{"x", "y"}, -8, 8, 3, 3, true};
  const Grid grid{{"x", {-12, 12}}, {"y", {-12, 12}}};
  const auto d = default_distance(s);
  SuiteResult r;
  for (std::size_t i = 0; i < cases; ++i) {
    auto p = random::dnf(rng, shape);
    if (!s.flags().multiplicatively_idempotent) p = wedge_minimize(p);
    const auto v = random::valuation(rng, shape.vars, -12, 12);
    const auto fast = vpd(v, p, s, d);
    const auto slow = vpd_oracle(v, p, s, d, grid);
    record(r, fast == slow,
           to_string(p) + " at (" + format_number(v.at("x")) + ", " + format_number(v.at("y")) + "): " + show(fast) +
               " vs " + show(slow));
  }
  return r;
}

SuiteResult path_suite(std::uint64_t seed, std::size_t cases, Semiring s) {
  random::Rng rng(seed);
  random::PredicateShape shape{{"x", "y"}, 0, 5, 2, 2, false};
  SuiteResult r;
  for (std::size_t i = 0; i < cases; ++i) {
    const auto w = decorate(random::automaton(rng, shape, 5), s);
    const auto length = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto tr = random::trace(rng, shape.vars, length, -2, 7);
    const auto fast = val(tr, w);
    const auto slow = path_oracle(tr, w);
    record(r, fast == slow, "case " + std::to_string(i) + ": " + show(fast) + " vs " + show(slow));
  }
  return r;
}

SuiteResult distance_suite(std::uint64_t seed, std::size_t cases, Semiring s) {
  random::Rng rng(seed);
  random::StlShape shape;
  shape.monotone = true;
  const Grid grid{{"x", {0, 4}}};
  const auto d = default_distance(s);
  SuiteResult r;
  for (std::size_t i = 0; i < cases; ++i) {
    const auto f = random::stl(rng, shape);
    const auto length = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto tr = random::trace(rng, {"x"}, length, 0, 4);
    const auto fast = val(tr, decorate(translate_stl(f), s, d));
    const auto slow = trace_distance_oracle(tr, Spec{SpecLanguage::Stl, f}, s, d, grid);
    record(r, fast == slow, to_string(f) + ": " + show(fast) + " vs " + show(slow));
  }
  return r;
}

}  // namespace arv::suites
