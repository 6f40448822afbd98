#include "arv/predicate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "arv/error.hpp"

namespace arv {

Literal Literal::negation() const {
  switch (kind) {
    case Kind::True: return bottom();
    case Kind::False: return top();
    case Kind::Atom: return atom(var, cmp, constant, !negated);
  }
  return *this;
}

Predicate Predicate::top() { return Predicate(std::make_shared<const Node>()); }

Predicate Predicate::bottom() {
  auto n = std::make_shared<Node>();
  n->op = Op::False;
  return Predicate(std::move(n));
}

Predicate Predicate::atom(std::string var, Cmp cmp, double constant) {
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->var = std::move(var);
  n->cmp = cmp;
  n->constant = constant;
  return Predicate(std::move(n));
}

Predicate Predicate::negation(Predicate p) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->children.push_back(std::move(p));
  return Predicate(std::move(n));
}

Predicate Predicate::conjunction(Predicate a, Predicate b) {
  auto n = std::make_shared<Node>();
  n->op = Op::And;
  n->children = {std::move(a), std::move(b)};
  return Predicate(std::move(n));
}

Predicate Predicate::disjunction(Predicate a, Predicate b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Or;
  n->children = {std::move(a), std::move(b)};
  return Predicate(std::move(n));
}

bool operator==(const Predicate& a, const Predicate& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op) return false;
  if (x.op == Predicate::Op::Atom) return x.var == y.var && x.cmp == y.cmp && x.constant == y.constant;
  return x.children == y.children;
}

bool holds(const Valuation& v, const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::True: return true;
    case Literal::Kind::False: return false;
    case Literal::Kind::Atom: {
      double x = v.at(l.var);
      bool base = l.cmp == Cmp::Less ? x < l.constant : x <= l.constant;
      return base != l.negated;
    }
  }
  return false;
}

bool evaluate(const Valuation& v, const Predicate& p) {
  switch (p.op()) {
    case Predicate::Op::True: return true;
    case Predicate::Op::False: return false;
    case Predicate::Op::Atom: return holds(v, Literal::atom(p.var(), p.cmp(), p.constant()));
    case Predicate::Op::Not: return !evaluate(v, p.lhs());
    case Predicate::Op::And: return evaluate(v, p.lhs()) && evaluate(v, p.rhs());
    case Predicate::Op::Or: return evaluate(v, p.lhs()) || evaluate(v, p.rhs());
  }
  return false;
}

bool evaluate(const Valuation& v, const Conjunct& c) {
  return std::all_of(c.begin(), c.end(), [&](const Literal& l) { return holds(v, l); });
}

bool evaluate(const Valuation& v, const DnfPredicate& p) {
  return std::any_of(p.clauses.begin(), p.clauses.end(), [&](const Conjunct& c) { return evaluate(v, c); });
}

namespace {

DnfPredicate cross(const DnfPredicate& a, const DnfPredicate& b) {
  DnfPredicate out;
  out.clauses.reserve(a.clauses.size() * b.clauses.size());
  for (const auto& ca : a.clauses) {
    for (const auto& cb : b.clauses) {
      Conjunct c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      out.clauses.push_back(std::move(c));
    }
  }
  return out;
}

DnfPredicate concat(const DnfPredicate& a, const DnfPredicate& b) {
  DnfPredicate out = a;
  out.wedge_minimal = false;
  out.clauses.insert(out.clauses.end(), b.clauses.begin(), b.clauses.end());
  return out;
}

DnfPredicate to_dnf_signed(const Predicate& p, bool negated) {
  using Op = Predicate::Op;
  switch (p.op()) {
    case Op::True: return negated ? DnfPredicate::bottom() : DnfPredicate{{{Literal::top()}}, false};
    case Op::False: return negated ? DnfPredicate{{{Literal::top()}}, false} : DnfPredicate::bottom();
    case Op::Atom: return {{{Literal::atom(p.var(), p.cmp(), p.constant(), negated)}}, false};
    case Op::Not: return to_dnf_signed(p.lhs(), !negated);
    case Op::And:
      return negated ? concat(to_dnf_signed(p.lhs(), true), to_dnf_signed(p.rhs(), true))
                     : cross(to_dnf_signed(p.lhs(), false), to_dnf_signed(p.rhs(), false));
    case Op::Or:
      return negated ? cross(to_dnf_signed(p.lhs(), true), to_dnf_signed(p.rhs(), true))
                     : concat(to_dnf_signed(p.lhs(), false), to_dnf_signed(p.rhs(), false));
  }
  return DnfPredicate::bottom();
}

Predicate literal_predicate(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::True: return Predicate::top();
    case Literal::Kind::False: return Predicate::bottom();
    case Literal::Kind::Atom: {
      Predicate a = Predicate::atom(l.var, l.cmp, l.constant);
      return l.negated ? Predicate::negation(std::move(a)) : a;
    }
  }
  return Predicate::top();
}

}  // namespace

DnfPredicate to_dnf(const Predicate& p) { return to_dnf_signed(p, false); }

Predicate to_predicate(const DnfPredicate& p) {
  std::optional<Predicate> result;
  for (const auto& clause : p.clauses) {
    std::optional<Predicate> conj;
    for (const auto& l : clause) {
      Predicate lp = literal_predicate(l);
      conj = conj ? Predicate::conjunction(*conj, lp) : lp;
    }
    Predicate c = conj ? *conj : Predicate::top();
    result = result ? Predicate::disjunction(*result, c) : c;
  }
  return result ? *result : Predicate::bottom();
}

Interval literal_interval(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::True: return Interval::full();
    case Literal::Kind::False: return Interval::empty();
    case Literal::Kind::Atom: break;
  }
  if (!l.negated) {
    return Interval(-Interval::kInf, false, l.constant, l.cmp == Cmp::LessEq);
  }
  return Interval(l.constant, l.cmp == Cmp::Less, Interval::kInf, false);
}

bool implies(const Literal& premise, const Literal& conclusion) {
  if (premise.kind == Literal::Kind::False || conclusion.kind == Literal::Kind::True) return true;
  if (premise.kind == Literal::Kind::True || conclusion.kind == Literal::Kind::False) return false;
  if (premise.var != conclusion.var) return false;
  return literal_interval(premise).subset_of(literal_interval(conclusion));
}

DnfPredicate wedge_minimize(const DnfPredicate& p) {
  DnfPredicate out;
  for (const auto& clause : p.clauses) {
    bool has_false = false;
    Conjunct lits;
    for (const auto& l : clause) {
      if (l.kind == Literal::Kind::False) has_false = true;
      if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
    }
    if (has_false) continue;
    if (lits.size() > 1) {
      std::erase_if(lits, [](const Literal& l) { return l.kind == Literal::Kind::True; });
    }
    std::vector<bool> removed(lits.size(), false);
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (removed[i]) continue;
      for (std::size_t j = 0; j < lits.size(); ++j) {
        if (i != j && !removed[j] && implies(lits[i], lits[j])) removed[j] = true;
      }
    }
    Conjunct kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (!removed[i]) kept.push_back(lits[i]);
    }
    if (kept.empty()) kept.push_back(Literal::top());
    out.clauses.push_back(std::move(kept));
  }
  if (out.clauses.empty()) out.clauses.push_back({Literal::bottom()});
  out.wedge_minimal = true;
  return out;
}

bool is_sat(const Conjunct& c) {
  std::map<std::string_view, Interval> region;
  for (const auto& l : c) {
    if (l.kind == Literal::Kind::False) return false;
    if (l.kind == Literal::Kind::True) continue;
    auto [it, inserted] = region.try_emplace(l.var, Interval::full());
    it->second = it->second.intersect(literal_interval(l));
    if (it->second.is_empty()) return false;
  }
  return true;
}

bool is_sat(const DnfPredicate& p) {
  return std::any_of(p.clauses.begin(), p.clauses.end(), [](const Conjunct& c) { return is_sat(c); });
}

DnfPredicate dnf_and(const DnfPredicate& a, const DnfPredicate& b) { return cross(a, b); }

DnfPredicate dnf_or(const DnfPredicate& a, const DnfPredicate& b) { return concat(a, b); }

DnfPredicate prune_unsat(const DnfPredicate& p) {
  DnfPredicate out;
  out.wedge_minimal = p.wedge_minimal;
  for (const auto& c : p.clauses) {
    if (is_sat(c)) out.clauses.push_back(c);
  }
  if (out.clauses.empty()) return DnfPredicate::bottom();
  return out;
}

std::vector<std::string> variables_of(const DnfPredicate& p) {
  std::set<std::string> vars;
  for (const auto& c : p.clauses) {
    for (const auto& l : c) {
      if (l.is_atom()) vars.insert(l.var);
    }
  }
  return {vars.begin(), vars.end()};
}

namespace {

void collect_vars(const Predicate& p, std::set<std::string>& out) {
  switch (p.op()) {
    case Predicate::Op::Atom: out.insert(p.var()); break;
    case Predicate::Op::Not: collect_vars(p.lhs(), out); break;
    case Predicate::Op::And:
    case Predicate::Op::Or:
      collect_vars(p.lhs(), out);
      collect_vars(p.rhs(), out);
      break;
    default: break;
  }
}

}  // namespace

std::vector<std::string> variables_of(const Predicate& p) {
  std::set<std::string> vars;
  collect_vars(p, vars);
  return {vars.begin(), vars.end()};
}

IntervalVector conjunct_box(const IntervalVector& box, const Conjunct& c, const std::vector<std::string>& vars) {
  if (box.dimension() != vars.size()) throw PreconditionError("box dimension does not match variable list");
  if (box.is_empty()) return box;
  std::vector<Interval> parts = box.components();
  for (const auto& l : c) {
    if (l.kind == Literal::Kind::True) continue;
    if (l.kind == Literal::Kind::False) return IntervalVector::empty(vars.size());
    auto it = std::find(vars.begin(), vars.end(), l.var);
    if (it == vars.end()) throw PreconditionError("literal variable '" + l.var + "' not in variable list");
    auto& slot = parts[static_cast<std::size_t>(it - vars.begin())];
    slot = slot.intersect(literal_interval(l));
    if (slot.is_empty()) return IntervalVector::empty(vars.size());
  }
  return IntervalVector(std::move(parts));
}

std::vector<IntervalVector> dnf_boxes(const DnfPredicate& p, const std::vector<std::string>& vars) {
  const IntervalVector everything = IntervalVector::full(vars.size());
  std::vector<IntervalVector> boxes;
  for (const auto& clause : p.clauses) {
    IntervalVector box = conjunct_box(everything, clause, vars);
    if (box.is_empty()) continue;
    if (box.is_full()) return {box};
    std::vector<IntervalVector> next{box};
    const auto outside = complement_box(box);
    for (const auto& old : boxes) {
      for (const auto& piece : outside) {
        IntervalVector kept = old.intersect(piece);
        if (!kept.is_empty()) next.push_back(std::move(kept));
      }
    }
    boxes = std::move(next);
  }
  return boxes;
}

DnfPredicate boxes_to_dnf(const std::vector<IntervalVector>& boxes, const std::vector<std::string>& vars) {
  DnfPredicate out;
  for (const auto& box : boxes) {
    if (box.is_empty()) continue;
    if (box.dimension() != vars.size()) throw PreconditionError("box dimension does not match variable list");
    Conjunct clause;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const Interval& c = box[i];
      if (c.lower() != -Interval::kInf) {
        // [a, ... -> !(x < a);  (a, ... -> !(x <= a)
        clause.push_back(Literal::atom(vars[i], c.lower_closed() ? Cmp::Less : Cmp::LessEq, c.lower(), true));
      }
      if (c.upper() != Interval::kInf) {
        clause.push_back(Literal::atom(vars[i], c.upper_closed() ? Cmp::LessEq : Cmp::Less, c.upper()));
      }
    }
    if (clause.empty()) clause.push_back(Literal::top());
    out.clauses.push_back(std::move(clause));
  }
  if (out.clauses.empty()) return DnfPredicate{{{Literal::bottom()}}, true};
  out.wedge_minimal = true;
  return out;
}

DnfPredicate minimal_dnf(const DnfPredicate& p, const std::vector<std::string>& vars) {
  return boxes_to_dnf(dnf_boxes(p, vars), vars);
}

DnfPredicate minimal_dnf(const DnfPredicate& p) { return minimal_dnf(p, variables_of(p)); }

std::string format_number(double x) {
  if (x == Interval::kInf) return "inf";
  if (x == -Interval::kInf) return "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string to_string(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::True: return "true";
    case Literal::Kind::False: return "false";
    case Literal::Kind::Atom: break;
  }
  std::string base = l.var + (l.cmp == Cmp::Less ? " < " : " <= ") + format_number(l.constant);
  return l.negated ? "!(" + base + ")" : base;
}

std::string to_string(const Conjunct& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += " && ";
    s += to_string(c[i]);
  }
  return s.empty() ? "true" : s;
}

std::string to_string(const DnfPredicate& p) {
  std::string s;
  for (std::size_t i = 0; i < p.clauses.size(); ++i) {
    if (i) s += " || ";
    s += to_string(p.clauses[i]);
  }
  return s.empty() ? "false" : s;
}

std::string to_string(const Predicate& p) {
  using Op = Predicate::Op;
  switch (p.op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return to_string(Literal::atom(p.var(), p.cmp(), p.constant()));
    case Op::Not: return "!(" + to_string(p.lhs()) + ")";
    case Op::And: return "(" + to_string(p.lhs()) + " && " + to_string(p.rhs()) + ")";
    case Op::Or: return "(" + to_string(p.lhs()) + " || " + to_string(p.rhs()) + ")";
  }
  return "?";
}

}  // namespace arv
