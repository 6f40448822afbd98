#include "arv/automaton.hpp"
#include "arv/error.hpp"

namespace arv {

namespace {

SymbolicAutomaton counter(const TimeInterval& i) {
  // Location c counts consumed samples; the unbounded tail saturates at lo.
  const unsigned cap = i.hi ? *i.hi : i.lo;
  SymbolicAutomaton out;
  for (unsigned c = 0; c <= cap; ++c) out.add_location(c == 0, i.contains(c));
  for (unsigned c = 0; c < cap; ++c) out.add_transition(c, DnfPredicate::top(), c + 1);
  if (!i.hi) out.add_transition(cap, DnfPredicate::top(), cap);
  return out;
}

// Thompson-style construction; epsilon transitions are left in place.
SymbolicAutomaton build(const SreExpr& e) {
  using Op = SreExpr::Op;
  switch (e.op()) {
    case Op::Epsilon: {
      SymbolicAutomaton out;
      out.add_location(true, true);
      return out;
    }
    case Op::Pred: {
      SymbolicAutomaton out(variables_of(e.predicate()));
      const Location q0 = out.add_location(true, true);
      auto guard = prune_unsat(to_dnf(e.predicate()));
      if (!is_sat(guard)) return out;
      const Location q1 = out.add_location(false, true);
      out.add_transition(q0, guard, q1);
      out.add_transition(q1, std::move(guard), q1);
      return out;
    }
    case Op::Concat: {
      const auto a = build(e.child(0));
      const auto b = build(e.child(1));
      auto out = unite(a, b);
      const auto base = static_cast<Location>(a.num_locations());
      for (Location p : a.final_locations()) {
        for (Location q : b.initial_locations()) out.add_epsilon(p, base + q);
      }
      for (Location p = 0; p < a.num_locations(); ++p) out.set_final(p, false);
      for (Location q = 0; q < b.num_locations(); ++q) out.set_initial(base + q, false);
      return out;
    }
    case Op::Union: return unite(build(e.child(0)), build(e.child(1)));
    case Op::Intersect: return product(build(e.child(0)), build(e.child(1)));
    case Op::Star: {
      // Iterations are non-empty, so one iteration is the transitive closure.
      const auto a = eps_eliminate(build(e.child()));
      SymbolicAutomaton out(a.variables());
      const Location hub = out.add_location(true, true);
      auto body = unite(out, a);
      for (Location q : a.initial_locations()) {
        body.set_initial(1 + q, false);
        body.add_epsilon(hub, 1 + q);
      }
      for (Location q : a.final_locations()) {
        body.set_final(1 + q, false);
        body.add_epsilon(1 + q, hub);
      }
      return body;
    }
    case Op::Duration: return product(build(e.child()), counter(e.interval()));
  }
  throw PreconditionError("unknown expression");
}

}  // namespace

SymbolicAutomaton translate_sre(const SreExpr& e) {
  auto out = eps_eliminate(build(e));
  out.set_variables(variables_of(e));
  return out;
}

}  // namespace arv
