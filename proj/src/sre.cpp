#include "arv/sre.hpp"

#include <set>
#include <unordered_map>

#include "arv/error.hpp"

namespace arv {

SreExpr SreExpr::make(Op op, std::vector<SreExpr> children) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children = std::move(children);
  return SreExpr(std::move(n));
}

SreExpr SreExpr::epsilon() { return make(Op::Epsilon, {}); }

SreExpr SreExpr::pred(Predicate p) {
  auto n = std::make_shared<Node>();
  n->op = Op::Pred;
  n->predicate = std::move(p);
  return SreExpr(std::move(n));
}

SreExpr SreExpr::concat(SreExpr a, SreExpr b) { return make(Op::Concat, {std::move(a), std::move(b)}); }
SreExpr SreExpr::alt(SreExpr a, SreExpr b) { return make(Op::Union, {std::move(a), std::move(b)}); }
SreExpr SreExpr::intersect(SreExpr a, SreExpr b) { return make(Op::Intersect, {std::move(a), std::move(b)}); }
SreExpr SreExpr::star(SreExpr e) { return make(Op::Star, {std::move(e)}); }

SreExpr SreExpr::duration(SreExpr e, TimeInterval i) {
  auto n = std::make_shared<Node>();
  n->op = Op::Duration;
  n->children = {std::move(e)};
  n->interval = i;
  return SreExpr(std::move(n));
}

bool operator==(const SreExpr& a, const SreExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op) return false;
  if (x.op == SreExpr::Op::Pred) return x.predicate == y.predicate;
  return x.interval == y.interval && x.children == y.children;
}

namespace {

void collect_vars(const SreExpr& e, std::set<std::string>& out) {
  if (e.op() == SreExpr::Op::Pred) {
    for (auto& v : variables_of(e.predicate())) out.insert(v);
  }
  for (const auto& c : e.children()) collect_vars(c, out);
}

/// (n+1) x (n+1) match table, row-major by segment start.
class MatchTable {
 public:
  explicit MatchTable(std::size_t n) : n_(n), cells_((n + 1) * (n + 1), 0) {}
  char& at(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }
  char at(std::size_t i, std::size_t j) const { return cells_[i * (n_ + 1) + j]; }

 private:
  std::size_t n_;
  std::vector<char> cells_;
};

class SreMatcher {
 public:
  explicit SreMatcher(const Trace& trace) : trace_(trace), n_(trace.size()) {}

  const MatchTable& table(const SreExpr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    MatchTable t = compute(e);
    keep_.push_back(e);
    return memo_.emplace(e.id(), std::move(t)).first->second;
  }

 private:
  MatchTable compute(const SreExpr& e) {
    using Op = SreExpr::Op;
    MatchTable out(n_);
    switch (e.op()) {
      case Op::Epsilon:
        for (std::size_t i = 0; i <= n_; ++i) out.at(i, i) = 1;
        break;
      case Op::Pred:
        for (std::size_t i = 0; i <= n_; ++i) {
          out.at(i, i) = 1;
          for (std::size_t j = i; j < n_ && evaluate(trace_[j], e.predicate()); ++j) out.at(i, j + 1) = 1;
        }
        break;
      case Op::Concat: {
        const auto& a = table(e.child(0));
        const auto& b = table(e.child(1));
        for (std::size_t i = 0; i <= n_; ++i) {
          for (std::size_t k = i; k <= n_; ++k) {
            if (!a.at(i, k)) continue;
            for (std::size_t j = k; j <= n_; ++j) {
              if (b.at(k, j)) out.at(i, j) = 1;
            }
          }
        }
        break;
      }
      case Op::Union:
      case Op::Intersect: {
        const auto& a = table(e.child(0));
        const auto& b = table(e.child(1));
        for (std::size_t i = 0; i <= n_; ++i) {
          for (std::size_t j = i; j <= n_; ++j) {
            out.at(i, j) = e.op() == Op::Union ? (a.at(i, j) || b.at(i, j)) : (a.at(i, j) && b.at(i, j));
          }
        }
        break;
      }
      case Op::Star: {
        // Least fixpoint; empty iterations add nothing, so each step consumes.
        const auto& a = table(e.child());
        for (std::size_t j = 0; j <= n_; ++j) {
          out.at(j, j) = 1;
          for (std::size_t i = j; i-- > 0;) {
            for (std::size_t k = i + 1; k <= j; ++k) {
              if (a.at(i, k) && out.at(k, j)) {
                out.at(i, j) = 1;
                break;
              }
            }
          }
        }
        break;
      }
      case Op::Duration: {
        const auto& a = table(e.child());
        for (std::size_t i = 0; i <= n_; ++i) {
          for (std::size_t j = i; j <= n_; ++j) {
            out.at(i, j) = a.at(i, j) && e.interval().contains(static_cast<long>(j - i));
          }
        }
        break;
      }
    }
    return out;
  }

  const Trace& trace_;
  std::size_t n_;
  std::unordered_map<const void*, MatchTable> memo_;
  std::vector<SreExpr> keep_;
};

}  // namespace

std::vector<std::string> variables_of(const SreExpr& e) {
  std::set<std::string> vars;
  collect_vars(e, vars);
  return {vars.begin(), vars.end()};
}

std::size_t expression_size(const SreExpr& e) {
  std::size_t n = 1;
  for (const auto& c : e.children()) n += expression_size(c);
  return n;
}

bool eval_sre(const Trace& trace, std::size_t i, std::size_t j, const SreExpr& e) {
  if (i > j || j > trace.size()) throw PreconditionError("eval_sre requires 0 <= i <= j <= |trace|");
  SreMatcher m(trace);
  return m.table(e).at(i, j);
}

bool sre_accepts(const Trace& trace, const SreExpr& e) { return eval_sre(trace, 0, trace.size(), e); }

std::string to_string(const SreExpr& e) {
  using Op = SreExpr::Op;
  switch (e.op()) {
    case Op::Epsilon: return "eps";
    case Op::Pred: return "(" + to_string(e.predicate()) + ")";
    case Op::Concat: return "(" + to_string(e.child(0)) + " ; " + to_string(e.child(1)) + ")";
    case Op::Union: return "(" + to_string(e.child(0)) + " | " + to_string(e.child(1)) + ")";
    case Op::Intersect: return "(" + to_string(e.child(0)) + " & " + to_string(e.child(1)) + ")";
    case Op::Star: return "(" + to_string(e.child()) + ")*";
    case Op::Duration: return "<" + to_string(e.child()) + ">" + e.interval().to_string();
  }
  return "?";
}

}  // namespace arv
