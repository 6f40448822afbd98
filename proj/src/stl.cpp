#include "arv/stl.hpp"

#include <set>
#include <unordered_map>

namespace arv {

std::string TimeInterval::to_string() const {
  return "[" + std::to_string(lo) + "," + (hi ? std::to_string(*hi) + "]" : std::string("inf)"));
}

Literal atom_literal(const std::string& var, Rel rel, double constant) {
  switch (rel) {
    case Rel::Lt: return Literal::atom(var, Cmp::Less, constant);
    case Rel::Le: return Literal::atom(var, Cmp::LessEq, constant);
    case Rel::Gt: return Literal::atom(var, Cmp::LessEq, constant, true);
    case Rel::Ge: return Literal::atom(var, Cmp::Less, constant, true);
  }
  return Literal::top();
}

StlFormula StlFormula::make(Op op, std::vector<StlFormula> children, TimeInterval i) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children = std::move(children);
  n->interval = i;
  return StlFormula(std::move(n));
}

StlFormula StlFormula::top() { return make(Op::True, {}); }
StlFormula StlFormula::bottom() { return make(Op::False, {}); }

StlFormula StlFormula::atom(std::string var, Rel rel, double constant) {
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->var = std::move(var);
  n->rel = rel;
  n->constant = constant;
  return StlFormula(std::move(n));
}

StlFormula StlFormula::negation(StlFormula f) { return make(Op::Not, {std::move(f)}); }
StlFormula StlFormula::conjunction(StlFormula a, StlFormula b) { return make(Op::And, {std::move(a), std::move(b)}); }
StlFormula StlFormula::disjunction(StlFormula a, StlFormula b) { return make(Op::Or, {std::move(a), std::move(b)}); }
StlFormula StlFormula::implication(StlFormula a, StlFormula b) {
  return make(Op::Implies, {std::move(a), std::move(b)});
}
StlFormula StlFormula::until(StlFormula a, StlFormula b, TimeInterval i) {
  return make(Op::Until, {std::move(a), std::move(b)}, i);
}
StlFormula StlFormula::since(StlFormula a, StlFormula b, TimeInterval i) {
  return make(Op::Since, {std::move(a), std::move(b)}, i);
}
StlFormula StlFormula::eventually(StlFormula f, TimeInterval i) { return make(Op::Eventually, {std::move(f)}, i); }
StlFormula StlFormula::globally(StlFormula f, TimeInterval i) { return make(Op::Globally, {std::move(f)}, i); }
StlFormula StlFormula::once(StlFormula f, TimeInterval i) { return make(Op::Once, {std::move(f)}, i); }
StlFormula StlFormula::historically(StlFormula f, TimeInterval i) {
  return make(Op::Historically, {std::move(f)}, i);
}
StlFormula StlFormula::next(StlFormula f) { return make(Op::Next, {std::move(f)}); }
StlFormula StlFormula::previous(StlFormula f) { return make(Op::Previous, {std::move(f)}); }

bool operator==(const StlFormula& a, const StlFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op) return false;
  if (x.op == StlFormula::Op::Atom) return x.var == y.var && x.rel == y.rel && x.constant == y.constant;
  return x.interval == y.interval && x.children == y.children;
}

namespace {

using Op = StlFormula::Op;

bool is_past_op(Op op) {
  return op == Op::Since || op == Op::Once || op == Op::Historically || op == Op::Previous;
}

const char* past_name(Op op) {
  switch (op) {
    case Op::Since: return "S";
    case Op::Once: return "P";
    case Op::Historically: return "H";
    case Op::Previous: return "Y";
    default: return "";
  }
}

void collect_vars(const StlFormula& f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) out.insert(f.var());
  for (const auto& c : f.children()) collect_vars(c, out);
}

}  // namespace

std::optional<std::string> first_past_operator(const StlFormula& f) {
  if (is_past_op(f.op())) return std::string(past_name(f.op()));
  for (const auto& c : f.children()) {
    if (auto name = first_past_operator(c)) return name;
  }
  return std::nullopt;
}

bool is_past_free(const StlFormula& f) { return !first_past_operator(f).has_value(); }

std::vector<std::string> variables_of(const StlFormula& f) {
  std::set<std::string> vars;
  collect_vars(f, vars);
  return {vars.begin(), vars.end()};
}

std::size_t formula_size(const StlFormula& f) {
  std::size_t n = 1;
  for (const auto& c : f.children()) n += formula_size(c);
  return n;
}

StlFormula negate(const StlFormula& f) {
  if (f.op() == Op::Not) return f.child();
  return StlFormula::negation(f);
}

StlFormula desugar(const StlFormula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False: return f;
    case Op::Atom:
      if (f.rel() == Rel::Gt) return StlFormula::negation(StlFormula::atom(f.var(), Rel::Le, f.constant()));
      if (f.rel() == Rel::Ge) return StlFormula::negation(StlFormula::atom(f.var(), Rel::Lt, f.constant()));
      return f;
    case Op::Not: return negate(desugar(f.child()));
    case Op::Or: return StlFormula::disjunction(desugar(f.child(0)), desugar(f.child(1)));
    case Op::And:
      return negate(StlFormula::disjunction(negate(desugar(f.child(0))), negate(desugar(f.child(1)))));
    case Op::Implies: return StlFormula::disjunction(negate(desugar(f.child(0))), desugar(f.child(1)));
    case Op::Until: return StlFormula::until(desugar(f.child(0)), desugar(f.child(1)), f.interval());
    case Op::Since: return StlFormula::since(desugar(f.child(0)), desugar(f.child(1)), f.interval());
    case Op::Eventually: return StlFormula::until(StlFormula::top(), desugar(f.child()), f.interval());
    case Op::Globally:
      return negate(StlFormula::until(StlFormula::top(), negate(desugar(f.child())), f.interval()));
    case Op::Once: return StlFormula::since(StlFormula::top(), desugar(f.child()), f.interval());
    case Op::Historically:
      return negate(StlFormula::since(StlFormula::top(), negate(desugar(f.child())), f.interval()));
    case Op::Next: return StlFormula::until(StlFormula::bottom(), desugar(f.child()), TimeInterval::closed(1, 1));
    case Op::Previous:
      return StlFormula::since(StlFormula::bottom(), desugar(f.child()), TimeInterval::closed(1, 1));
  }
  return f;
}

namespace {

StlFormula mk_and(const StlFormula& a, const StlFormula& b) {
  if (a.op() == Op::True) return b;
  if (b.op() == Op::True) return a;
  if (a.op() == Op::False || b.op() == Op::False) return StlFormula::bottom();
  return StlFormula::conjunction(a, b);
}

StlFormula mk_or(const StlFormula& a, const StlFormula& b) {
  if (a.op() == Op::False) return b;
  if (b.op() == Op::False) return a;
  if (a.op() == Op::True || b.op() == Op::True) return StlFormula::top();
  return StlFormula::disjunction(a, b);
}

StlFormula mk_next(const StlFormula& a) {
  if (a.op() == Op::False) return a;
  return StlFormula::next(a);
}

std::optional<unsigned> minus_one(std::optional<unsigned> hi) {
  if (!hi) return std::nullopt;
  return *hi - 1;
}

// Until whose left operand must also hold at the current position:
// exists j in [i+lo, i+hi] with b at j and a on every k in [i, j).
StlFormula non_strict(const StlFormula& a, const StlFormula& b, unsigned lo, std::optional<unsigned> hi) {
  if (lo > 0) return mk_and(a, mk_next(non_strict(a, b, lo - 1, minus_one(hi))));
  if (!hi) {
    if (a.op() == Op::True) return StlFormula::until(a, b);
    return mk_or(b, mk_and(a, StlFormula::until(a, b)));
  }
  if (*hi == 0) return b;
  return mk_or(b, mk_and(a, mk_next(non_strict(a, b, 0, *hi - 1))));
}

StlFormula strict(const StlFormula& a, const StlFormula& b, const TimeInterval& i) {
  // With a trivially true left operand the two flavours coincide.
  if (a.op() == Op::True) return non_strict(a, b, i.lo, i.hi);
  if (i.lo > 0) return mk_next(non_strict(a, b, i.lo - 1, minus_one(i.hi)));
  if (!i.hi) return StlFormula::until(a, b);
  if (*i.hi == 0) return b;
  return mk_or(b, mk_next(non_strict(a, b, 0, *i.hi - 1)));
}

}  // namespace

StlFormula unfold_bounded(const StlFormula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom: return f;
    case Op::Not: return negate(unfold_bounded(f.child()));
    case Op::And: return mk_and(unfold_bounded(f.child(0)), unfold_bounded(f.child(1)));
    case Op::Or: return mk_or(unfold_bounded(f.child(0)), unfold_bounded(f.child(1)));
    case Op::Next: return mk_next(unfold_bounded(f.child()));
    case Op::Until: {
      StlFormula a = unfold_bounded(f.child(0));
      StlFormula b = unfold_bounded(f.child(1));
      return strict(a, b, f.interval());
    }
    case Op::Since:
      // Past operators are kept; the translator rejects them.
      return StlFormula::since(unfold_bounded(f.child(0)), unfold_bounded(f.child(1)), f.interval());
    default: return unfold_bounded(desugar(f));
  }
}

namespace {

class StlEvaluator {
 public:
  explicit StlEvaluator(const Trace& trace) : trace_(trace), n_(trace.size()) {}

  const std::vector<char>& sat(const StlFormula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    std::vector<char> out = compute(f);
    keep_.push_back(f);
    return memo_.emplace(f.id(), std::move(out)).first->second;
  }

 private:
  std::vector<char> compute(const StlFormula& f) {
    std::vector<char> out(n_, 0);
    switch (f.op()) {
      case Op::True: std::fill(out.begin(), out.end(), 1); break;
      case Op::False: break;
      case Op::Atom: {
        Literal l = atom_literal(f.var(), f.rel(), f.constant());
        for (std::size_t i = 0; i < n_; ++i) out[i] = holds(trace_[i], l);
        break;
      }
      case Op::Not: {
        const auto& a = sat(f.child());
        for (std::size_t i = 0; i < n_; ++i) out[i] = !a[i];
        break;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        const auto a = sat(f.child(0));
        const auto& b = sat(f.child(1));
        for (std::size_t i = 0; i < n_; ++i) {
          if (f.op() == Op::And) out[i] = a[i] && b[i];
          if (f.op() == Op::Or) out[i] = a[i] || b[i];
          if (f.op() == Op::Implies) out[i] = !a[i] || b[i];
        }
        break;
      }
      case Op::Until: {
        const auto a = sat(f.child(0));
        const auto& b = sat(f.child(1));
        until(a, b, f.interval(), out);
        break;
      }
      case Op::Eventually: {
        std::vector<char> all(n_, 1);
        until(all, sat(f.child()), f.interval(), out);
        break;
      }
      case Op::Globally: {
        const auto& a = sat(f.child());
        std::vector<char> all(n_, 1), neg(n_);
        for (std::size_t i = 0; i < n_; ++i) neg[i] = !a[i];
        until(all, neg, f.interval(), out);
        for (auto& x : out) x = !x;
        break;
      }
      case Op::Next: {
        std::vector<char> none(n_, 0);
        until(none, sat(f.child()), TimeInterval::closed(1, 1), out);
        break;
      }
      case Op::Since: {
        const auto a = sat(f.child(0));
        const auto& b = sat(f.child(1));
        since(a, b, f.interval(), out);
        break;
      }
      case Op::Once: {
        std::vector<char> all(n_, 1);
        since(all, sat(f.child()), f.interval(), out);
        break;
      }
      case Op::Historically: {
        const auto& a = sat(f.child());
        std::vector<char> all(n_, 1), neg(n_);
        for (std::size_t i = 0; i < n_; ++i) neg[i] = !a[i];
        since(all, neg, f.interval(), out);
        for (auto& x : out) x = !x;
        break;
      }
      case Op::Previous: {
        std::vector<char> none(n_, 0);
        since(none, sat(f.child()), TimeInterval::closed(1, 1), out);
        break;
      }
    }
    return out;
  }

  // exists j in (i + I) ∩ [0, n): b(j) and a(k) for all i < k < j
  void until(const std::vector<char>& a, const std::vector<char>& b, const TimeInterval& iv,
             std::vector<char>& out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        const std::size_t d = j - i;
        if (iv.hi && d > *iv.hi) break;
        if (d >= iv.lo && b[j]) {
          out[i] = 1;
          break;
        }
        if (j > i && !a[j]) break;
      }
    }
  }

  // exists j in (i - I) ∩ [0, n): b(j) and a(k) for all j < k < i
  void since(const std::vector<char>& a, const std::vector<char>& b, const TimeInterval& iv,
             std::vector<char>& out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j-- > 0;) {
        const std::size_t d = i - j;
        if (iv.hi && d > *iv.hi) break;
        if (d >= iv.lo && b[j]) {
          out[i] = 1;
          break;
        }
        if (j < i && !a[j]) break;
      }
    }
  }

  const Trace& trace_;
  std::size_t n_;
  std::unordered_map<const void*, std::vector<char>> memo_;
  std::vector<StlFormula> keep_;  // pins node addresses used as memo keys
};

}  // namespace

std::vector<bool> eval_stl_all(const Trace& trace, const StlFormula& f) {
  StlEvaluator ev(trace);
  const auto& s = ev.sat(f);
  return {s.begin(), s.end()};
}

bool eval_stl(const Trace& trace, std::size_t i, const StlFormula& f) {
  if (i >= trace.size()) return false;
  return eval_stl_all(trace, f)[i];
}

namespace {

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Lt: return " < ";
    case Rel::Le: return " <= ";
    case Rel::Gt: return " > ";
    case Rel::Ge: return " >= ";
  }
  return " ? ";
}

std::string interval_suffix(const TimeInterval& i) {
  if (i.lo == 0 && !i.hi) return "";
  return i.to_string();
}

}  // namespace

std::string to_string(const StlFormula& f) {
  switch (f.op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return f.var() + rel_text(f.rel()) + format_number(f.constant());
    case Op::Not: return "!(" + to_string(f.child()) + ")";
    case Op::And: return "(" + to_string(f.child(0)) + " && " + to_string(f.child(1)) + ")";
    case Op::Or: return "(" + to_string(f.child(0)) + " || " + to_string(f.child(1)) + ")";
    case Op::Implies: return "(" + to_string(f.child(0)) + " -> " + to_string(f.child(1)) + ")";
    case Op::Until:
      return "(" + to_string(f.child(0)) + " U" + interval_suffix(f.interval()) + " " + to_string(f.child(1)) + ")";
    case Op::Since:
      return "(" + to_string(f.child(0)) + " S" + interval_suffix(f.interval()) + " " + to_string(f.child(1)) + ")";
    case Op::Eventually: return "F" + interval_suffix(f.interval()) + "(" + to_string(f.child()) + ")";
    case Op::Globally: return "G" + interval_suffix(f.interval()) + "(" + to_string(f.child()) + ")";
    case Op::Once: return "P" + interval_suffix(f.interval()) + "(" + to_string(f.child()) + ")";
    case Op::Historically: return "H" + interval_suffix(f.interval()) + "(" + to_string(f.child()) + ")";
    case Op::Next: return "X(" + to_string(f.child()) + ")";
    case Op::Previous: return "Y(" + to_string(f.child()) + ")";
  }
  return "?";
}

}  // namespace arv
