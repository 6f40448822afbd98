#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "arv/automaton.hpp"
#include "arv/error.hpp"

namespace arv {

namespace {

// Formula in negation normal form over the future fragment. Next is strong
// (a successor position must exist), WeakNext holds at the last position.
// UntilNs and Release are non-strict: the left operand is required at the
// current position too.
enum class Kind { True, False, Lit, And, Or, Next, WeakNext, UntilNs, Release };

struct Node {
  Kind kind = Kind::True;
  Literal lit;
  int a = -1;
  int b = -1;
};

using Ids = std::vector<int>;

struct Alternative {
  Ids lits;
  Ids strong;
  Ids weak;
};

Ids merged(const Ids& x, const Ids& y) {
  Ids out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

class Tableau {
 public:
  int from_formula(const StlFormula& f, bool positive) {
    using Op = StlFormula::Op;
    switch (f.op()) {
      case Op::True: return positive ? top() : bottom();
      case Op::False: return positive ? bottom() : top();
      case Op::Atom: {
        Literal l = atom_literal(f.var(), f.rel(), f.constant());
        return intern({Kind::Lit, positive ? l : l.negation(), -1, -1});
      }
      case Op::Not: return from_formula(f.child(), !positive);
      case Op::And:
      case Op::Or: {
        int x = from_formula(f.child(0), positive);
        int y = from_formula(f.child(1), positive);
        return (f.op() == Op::And) == positive ? mk_and(x, y) : mk_or(x, y);
      }
      case Op::Implies: {
        int x = from_formula(f.child(0), !positive);
        int y = from_formula(f.child(1), positive);
        return positive ? mk_or(x, y) : mk_and(x, y);
      }
      case Op::Next: {
        int x = from_formula(f.child(), positive);
        return positive ? mk_next(Kind::Next, x) : mk_next(Kind::WeakNext, x);
      }
      case Op::Until: {
        if (f.interval() != TimeInterval::unbounded()) throw PreconditionError("bounded until reached the tableau");
        const bool left_true = f.child(0).op() == Op::True;
        int a = from_formula(f.child(0), positive);
        int b = from_formula(f.child(1), positive);
        if (positive) {
          int u = intern({Kind::UntilNs, {}, a, b});
          if (left_true) return u;
          return mk_or(b, mk_next(Kind::Next, u));
        }
        int r = intern({Kind::Release, {}, a, b});
        if (left_true) return r;
        return mk_and(b, mk_next(Kind::WeakNext, r));
      }
      default: return from_formula(desugar(f), positive);
    }
  }

  const std::vector<Alternative>& expand(int id) {
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
    std::vector<Alternative> out;
    const Node n = nodes_[id];
    switch (n.kind) {
      case Kind::True: out.push_back({}); break;
      case Kind::False: break;
      case Kind::Lit: out.push_back({{id}, {}, {}}); break;
      case Kind::And: out = cross(expand(n.a), expand(n.b)); break;
      case Kind::Or: {
        out = expand(n.a);
        const auto& rest = expand(n.b);
        out.insert(out.end(), rest.begin(), rest.end());
        break;
      }
      case Kind::Next: out.push_back({{}, {n.a}, {}}); break;
      case Kind::WeakNext: out.push_back({{}, {}, {n.a}}); break;
      case Kind::UntilNs: {
        out = expand(n.b);
        auto step = cross(expand(n.a), {{{}, {id}, {}}});
        out.insert(out.end(), step.begin(), step.end());
        break;
      }
      case Kind::Release: {
        auto stay = expand(n.a);
        stay.push_back({{}, {}, {id}});
        out = cross(expand(n.b), stay);
        break;
      }
    }
    return memo_.emplace(id, std::move(out)).first->second;
  }

  std::vector<Alternative> cross(const std::vector<Alternative>& x, const std::vector<Alternative>& y) {
    std::vector<Alternative> out;
    for (const auto& p : x) {
      for (const auto& q : y) {
        Alternative r{merged(p.lits, q.lits), merged(p.strong, q.strong), merged(p.weak, q.weak)};
        if (is_sat(guard_clause(r.lits))) out.push_back(std::move(r));
      }
    }
    return out;
  }

  Conjunct guard_clause(const Ids& lits) const {
    Conjunct c;
    for (int id : lits) c.push_back(nodes_[id].lit);
    if (c.empty()) c.push_back(Literal::top());
    return c;
  }

 private:
  int top() { return intern({Kind::True, {}, -1, -1}); }
  int bottom() { return intern({Kind::False, {}, -1, -1}); }

  int mk_and(int x, int y) {
    if (kind(x) == Kind::False || kind(y) == Kind::False) return bottom();
    if (kind(x) == Kind::True) return y;
    if (kind(y) == Kind::True || x == y) return x;
    return intern({Kind::And, {}, std::min(x, y), std::max(x, y)});
  }

  int mk_or(int x, int y) {
    if (kind(x) == Kind::True || kind(y) == Kind::True) return top();
    if (kind(x) == Kind::False) return y;
    if (kind(y) == Kind::False || x == y) return x;
    return intern({Kind::Or, {}, std::min(x, y), std::max(x, y)});
  }

  int mk_next(Kind k, int x) {
    if (k == Kind::Next && kind(x) == Kind::False) return bottom();
    if (k == Kind::WeakNext && kind(x) == Kind::True) return top();
    return intern({k, {}, x, -1});
  }

  Kind kind(int id) const { return nodes_[id].kind; }

  int intern(Node n) {
    auto key = std::make_tuple(static_cast<int>(n.kind), n.kind == Kind::Lit ? to_string(n.lit) : std::string(), n.a, n.b);
    auto [it, inserted] = index_.try_emplace(std::move(key), static_cast<int>(nodes_.size()));
    if (inserted) nodes_.push_back(std::move(n));
    return it->second;
  }

  std::vector<Node> nodes_;
  std::map<std::tuple<int, std::string, int, int>, int> index_;
  std::map<int, std::vector<Alternative>> memo_;
};

}  // namespace

SymbolicAutomaton translate_stl(const StlFormula& f) {
  if (auto past = first_past_operator(f)) {
    throw UnsupportedFragment("past fragment not translatable (operator " + *past + ")");
  }
  Tableau tableau;
  const int root = tableau.from_formula(unfold_bounded(desugar(f)), true);

  // A location is a pair of pending obligation sets for the next position:
  // strong ones need that position to exist, weak ones hold at the end.
  using Key = std::pair<Ids, Ids>;
  SymbolicAutomaton out(variables_of(f));
  std::map<Key, Location> ids;
  std::deque<Key> work;
  auto id_of = [&](Key key) {
    auto [it, inserted] = ids.try_emplace(key, 0);
    if (inserted) {
      it->second = out.add_location(false, key.first.empty());
      work.push_back(std::move(key));
    }
    return it->second;
  };
  out.set_initial(id_of({{root}, {}}));

  while (!work.empty()) {
    const Key key = work.front();
    work.pop_front();
    const Location src = ids.at(key);
    std::vector<Alternative> alts{{}};
    for (int id : merged(key.first, key.second)) alts = tableau.cross(alts, tableau.expand(id));

    std::map<Location, DnfPredicate> edges;
    std::vector<Location> order;
    for (const auto& alt : alts) {
      Ids weak;
      std::set_difference(alt.weak.begin(), alt.weak.end(), alt.strong.begin(), alt.strong.end(),
                          std::back_inserter(weak));
      const Location dst = id_of({alt.strong, weak});
      Conjunct clause = tableau.guard_clause(alt.lits);
      auto [it, inserted] = edges.try_emplace(dst);
      if (inserted) order.push_back(dst);
      auto& clauses = it->second.clauses;
      if (std::find(clauses.begin(), clauses.end(), clause) == clauses.end()) clauses.push_back(std::move(clause));
    }
    for (Location dst : order) out.add_transition(src, std::move(edges.at(dst)), dst);
  }
  return trim(out);
}

}  // namespace arv
