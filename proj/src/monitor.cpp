#include "arv/monitor.hpp"

#include <functional>

#include "arv/error.hpp"

namespace arv {

ValStream::ValStream(const SymbolicWeightedAutomaton& w) : automaton_(&w) {
  const auto& a = w.base();
  const Semiring s = w.semiring();
  costs_.cost.assign(a.num_locations(), s.zero());
  for (Location q : a.initial_locations()) costs_.cost[q] = s.one();
  scratch_.resize(a.num_locations());
}

SemiringValue ValStream::step(const Valuation& v) {
  if (closed_) throw PreconditionError("step on a closed stream");
  const Semiring s = automaton_->semiring();
  std::fill(scratch_.begin(), scratch_.end(), s.zero());
  for (const auto& t : automaton_->base().transitions()) {
    const SemiringValue from = costs_.cost[t.src];
    if (from == s.zero()) continue;
    scratch_[t.dst] = s.oplus(scratch_[t.dst], s.otimes(from, automaton_->weight(t, v)));
  }
  costs_.cost.swap(scratch_);
  ++costs_.step;
  return value();
}

SemiringValue ValStream::value() const { return value_over(true); }

SemiringValue ValStream::value_over(bool final) const {
  const Semiring s = automaton_->semiring();
  const auto& a = automaton_->base();
  SemiringValue acc = s.zero();
  for (Location q = 0; q < a.num_locations(); ++q) {
    if (a.is_final(q) == final) acc = s.oplus(acc, costs_.cost[q]);
  }
  return acc;
}

SemiringValue val(const Trace& trace, const SymbolicWeightedAutomaton& w) {
  if (trace.empty()) throw PreconditionError("empty trace");
  ValStream stream(w);
  for (const auto& v : trace.samples()) stream.step(v);
  return stream.value();
}

double robustness_degree(const Semiring& s, SemiringValue v_phi, SemiringValue v_not_phi) noexcept {
  if (v_phi == s.one()) return to_signed(v_not_phi, false);
  return to_signed(v_phi, true);
}

SymbolicAutomaton spec_automaton(const Spec& spec) {
  return spec.is_stl() ? translate_stl(spec.stl()) : translate_sre(spec.sre());
}

SymbolicAutomaton complement_automaton(const Spec& spec) {
  if (spec.is_stl()) return translate_stl(negate(spec.stl()));
  return complement(translate_sre(spec.sre()));
}

bool satisfies(const Trace& trace, const Spec& spec) {
  if (trace.empty()) throw PreconditionError("empty trace");
  return spec.is_stl() ? eval_stl(trace, 0, spec.stl()) : sre_accepts(trace, spec.sre());
}

namespace {

SymbolicAutomaton positive_base(const Spec& spec, bool deterministic) {
  auto a = spec_automaton(spec);
  if (!deterministic) return a;
  auto d = determinize(a);
  if (!is_deterministic(d) || !is_complete(d)) throw PreconditionError("determinization did not yield a complete DFA");
  return d;
}

}  // namespace

RobustnessMonitor::RobustnessMonitor(const Spec& spec, Semiring s, PointwiseDistance d)
    : RobustnessMonitor(spec, s, d, Options{}) {}

RobustnessMonitor::RobustnessMonitor(const Spec& spec, Semiring s, PointwiseDistance d, Options options)
    : spec_(spec),
      semiring_(s),
      options_(options),
      positive_(decorate(positive_base(spec, options.deterministic), s, d)),
      negative_(options.deterministic ? positive_ : decorate(complement_automaton(spec), s, d)) {}

bool RobustnessMonitor::satisfied(const Trace& trace) const { return satisfies(trace, spec_); }

RobustnessVerdict RobustnessMonitor::evaluate(const Trace& trace) const {
  if (trace.empty()) throw PreconditionError("empty trace");
  RobustnessVerdict out;
  if (options_.deterministic) {
    // In a complete DFA the single run ends in a final location iff the
    // trace is accepted; the complement is the same run with finals flipped.
    ValStream run(positive_);
    for (const auto& v : trace.samples()) run.step(v);
    out.d_phi = run.value_over(true);
    out.d_not_phi = run.value_over(false);
  } else {
    out.d_phi = val(trace, positive_);
    out.d_not_phi = val(trace, negative_);
  }
  out.rho = robustness_degree(semiring_, out.d_phi, out.d_not_phi);
  out.satisfied = satisfied(trace);
  return out;
}

std::vector<PrefixPoint> RobustnessMonitor::prefix_series(const Trace& trace) const {
  if (trace.empty()) throw PreconditionError("empty trace");
  std::vector<PrefixPoint> out;
  ValStream pos(positive_);
  ValStream neg(negative_);
  AcceptanceRun accept(positive_.base());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    pos.step(trace[t]);
    accept.step(trace[t]);
    SemiringValue v2;
    if (options_.deterministic) {
      v2 = pos.value_over(false);
    } else {
      neg.step(trace[t]);
      v2 = neg.value();
    }
    out.push_back({t + 1, robustness_degree(semiring_, pos.value(), v2), accept.accepting()});
  }
  return out;
}

RobustnessVerdict rob(const Trace& trace, const Spec& spec, Semiring s, PointwiseDistance d) {
  return RobustnessMonitor(spec, s, d).evaluate(trace);
}

RobustnessVerdict rob(const Trace& trace, const StlFormula& f, Semiring s, PointwiseDistance d) {
  return rob(trace, Spec{SpecLanguage::Stl, f}, s, d);
}

RobustnessVerdict rob(const Trace& trace, const SreExpr& e, Semiring s, PointwiseDistance d) {
  return rob(trace, Spec{SpecLanguage::Sre, e}, s, d);
}

std::vector<PrefixPoint> rob_prefix_series(const Trace& trace, const Spec& spec, Semiring s, PointwiseDistance d) {
  return RobustnessMonitor(spec, s, d).prefix_series(trace);
}

SemiringValue path_oracle(const Trace& trace, const SymbolicWeightedAutomaton& w, std::size_t limit) {
  if (trace.empty()) throw PreconditionError("empty trace");
  const auto& a = w.base();
  const Semiring s = w.semiring();
  std::vector<std::vector<const Transition*>> out_edges(a.num_locations());
  for (const auto& t : a.transitions()) out_edges[t.src].push_back(&t);

  SemiringValue best = s.zero();
  std::size_t paths = 0;
  std::function<void(Location, std::size_t, SemiringValue)> walk = [&](Location q, std::size_t i, SemiringValue acc) {
    if (i == trace.size()) {
      if (++paths > limit) throw LimitExceeded("more than " + std::to_string(limit) + " paths");
      if (a.is_final(q)) best = s.oplus(best, acc);
      return;
    }
    for (const auto* t : out_edges[q]) walk(t->dst, i + 1, s.otimes(acc, w.weight(*t, trace[i])));
  };
  for (Location q : a.initial_locations()) walk(q, 0, s.one());
  return best;
}

SemiringValue trace_distance_oracle(const Trace& trace, const Spec& spec, Semiring s, PointwiseDistance d,
                                    const Grid& grid, std::size_t limit) {
  if (trace.empty()) throw PreconditionError("empty trace");
  const auto spec_vars = spec.is_stl() ? variables_of(spec.stl()) : variables_of(spec.sre());
  std::vector<std::string> vars;
  std::vector<GridRange> ranges;
  for (const auto& name : spec_vars) {
    auto it = grid.find(name);
    if (it == grid.end()) throw PreconditionError("grid does not cover '" + name + "'");
    if (it->second.hi < it->second.lo) throw PreconditionError("empty grid range for '" + name + "'");
    vars.push_back(name);
    ranges.push_back(it->second);
  }

  // Every (position, variable) slot ranges over its grid independently.
  const std::size_t slots = vars.size() * trace.size();
  double candidates = 1.0;
  for (std::size_t k = 0; k < slots; ++k) {
    const auto& r = ranges[k % vars.size()];
    candidates *= static_cast<double>(r.hi - r.lo + 1);
  }
  if (candidates > static_cast<double>(limit)) {
    throw LimitExceeded("more than " + std::to_string(limit) + " candidate traces");
  }

  std::vector<long> point(slots);
  for (std::size_t k = 0; k < slots; ++k) point[k] = ranges[k % vars.size()].lo;
  std::vector<Valuation> samples = trace.samples();
  SemiringValue best = s.zero();
  while (true) {
    for (std::size_t k = 0; k < slots; ++k) samples[k / vars.size()].set(vars[k % vars.size()], static_cast<double>(point[k]));
    const Trace candidate(trace.variables(), samples);
    if (satisfies(candidate, spec)) {
      SemiringValue cost = s.one();
      for (std::size_t k = 0; k < slots; ++k) {
        const double original = trace[k / vars.size()].at(vars[k % vars.size()]);
        cost = s.otimes(cost, point_dist(original, static_cast<double>(point[k]), d));
      }
      best = s.oplus(best, cost);
    }
    std::size_t k = 0;
    while (k < slots && point[k] == ranges[k % vars.size()].hi) {
      point[k] = ranges[k % vars.size()].lo;
      ++k;
    }
    if (k == slots) break;
    ++point[k];
  }
  return best;
}

}  // namespace arv
