#include "arv/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "arv/error.hpp"

namespace arv {

Location SymbolicAutomaton::add_location(bool initial, bool final) {
  initial_.push_back(initial);
  final_.push_back(final);
  return static_cast<Location>(initial_.size() - 1);
}

void SymbolicAutomaton::set_initial(Location q, bool on) { initial_.at(q) = on; }

void SymbolicAutomaton::set_final(Location q, bool on) { final_.at(q) = on; }

void SymbolicAutomaton::add_transition(Location src, DnfPredicate guard, Location dst) {
  if (src >= num_locations() || dst >= num_locations()) throw PreconditionError("transition endpoint out of range");
  transitions_.push_back({src, std::move(guard), dst});
}

void SymbolicAutomaton::add_epsilon(Location src, Location dst) {
  if (src >= num_locations() || dst >= num_locations()) throw PreconditionError("epsilon endpoint out of range");
  epsilons_.emplace_back(src, dst);
}

std::vector<Location> SymbolicAutomaton::initial_locations() const {
  std::vector<Location> out;
  for (Location q = 0; q < num_locations(); ++q) {
    if (initial_[q]) out.push_back(q);
  }
  return out;
}

std::vector<Location> SymbolicAutomaton::final_locations() const {
  std::vector<Location> out;
  for (Location q = 0; q < num_locations(); ++q) {
    if (final_[q]) out.push_back(q);
  }
  return out;
}

namespace {

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> all(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  return {all.begin(), all.end()};
}

struct Cell {
  IntervalVector box;
  Valuation rep;
};

struct CellPartition {
  std::vector<std::string> vars;
  std::vector<Cell> cells;
};

// Elementary cells over the constants mentioned by the guards: per variable
// the open gaps between consecutive constants and the constants themselves.
CellPartition partition_cells(const std::vector<const DnfPredicate*>& guards) {
  std::map<std::string, std::set<double>> constants;
  for (const auto* g : guards) {
    for (const auto& c : g->clauses) {
      for (const auto& l : c) {
        if (l.is_atom()) constants[l.var].insert(l.constant);
      }
    }
  }
  CellPartition out;
  std::vector<std::vector<Interval>> pieces;
  for (const auto& [var, ks] : constants) {
    out.vars.push_back(var);
    std::vector<Interval> ps;
    double prev = -Interval::kInf;
    for (double k : ks) {
      ps.emplace_back(prev, false, k, false);
      ps.push_back(Interval::point(k));
      prev = k;
    }
    ps.emplace_back(prev, false, Interval::kInf, false);
    pieces.push_back(std::move(ps));
  }
  std::vector<std::size_t> index(pieces.size(), 0);
  while (true) {
    std::vector<Interval> comps;
    Valuation rep;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      comps.push_back(pieces[i][index[i]]);
      rep.set(out.vars[i], comps.back().sample_point());
    }
    out.cells.push_back({IntervalVector(std::move(comps)), std::move(rep)});
    std::size_t i = 0;
    for (; i < pieces.size(); ++i) {
      if (++index[i] < pieces[i].size()) break;
      index[i] = 0;
    }
    if (i == pieces.size()) break;
  }
  return out;
}

bool adjacent(const Interval& a, const Interval& b) {
  return a.upper() == b.lower() && a.upper() != Interval::kInf && (a.upper_closed() != b.lower_closed());
}

// Greedily fuses boxes that differ in a single, touching component.
std::vector<IntervalVector> merge_boxes(std::vector<IntervalVector> boxes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < boxes.size() && !changed; ++i) {
      for (std::size_t j = 0; j < boxes.size() && !changed; ++j) {
        if (i == j) continue;
        const auto& a = boxes[i];
        const auto& b = boxes[j];
        std::size_t diff = a.dimension();
        bool ok = true;
        for (std::size_t k = 0; k < a.dimension(); ++k) {
          if (a[k] == b[k]) continue;
          if (diff != a.dimension()) {
            ok = false;
            break;
          }
          diff = k;
        }
        if (!ok || diff == a.dimension() || !adjacent(a[diff], b[diff])) continue;
        auto comps = a.components();
        comps[diff] = Interval(a[diff].lower(), a[diff].lower_closed(), b[diff].upper(), b[diff].upper_closed());
        boxes[i] = IntervalVector(std::move(comps));
        boxes.erase(boxes.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
  return boxes;
}

DnfPredicate cells_to_guard(const std::vector<const Cell*>& cells, const std::vector<std::string>& vars) {
  std::vector<IntervalVector> boxes;
  for (const auto* c : cells) boxes.push_back(c->box);
  return boxes_to_dnf(merge_boxes(std::move(boxes)), vars);
}

std::vector<std::vector<std::size_t>> outgoing(const SymbolicAutomaton& a) {
  std::vector<std::vector<std::size_t>> out(a.num_locations());
  for (std::size_t i = 0; i < a.transitions().size(); ++i) out[a.transitions()[i].src].push_back(i);
  return out;
}

std::vector<char> eps_closure(const SymbolicAutomaton& a, std::vector<char> set) {
  std::vector<std::vector<Location>> succ(a.num_locations());
  for (auto [p, q] : a.epsilons()) succ[p].push_back(q);
  std::vector<Location> stack;
  for (Location q = 0; q < set.size(); ++q) {
    if (set[q]) stack.push_back(q);
  }
  while (!stack.empty()) {
    Location p = stack.back();
    stack.pop_back();
    for (Location q : succ[p]) {
      if (!set[q]) {
        set[q] = 1;
        stack.push_back(q);
      }
    }
  }
  return set;
}

const SymbolicAutomaton& without_eps(const SymbolicAutomaton& a, SymbolicAutomaton& storage) {
  if (!a.has_epsilons()) return a;
  storage = eps_eliminate(a);
  return storage;
}

}  // namespace

std::vector<Valuation> cell_representatives(const std::vector<const DnfPredicate*>& guards) {
  std::vector<Valuation> out;
  for (auto& c : partition_cells(guards).cells) out.push_back(std::move(c.rep));
  return out;
}

SymbolicAutomaton eps_eliminate(const SymbolicAutomaton& a) {
  SymbolicAutomaton out(a.variables());
  const auto n = a.num_locations();
  for (Location q = 0; q < n; ++q) out.add_location(a.is_initial(q), false);
  const auto out_edges = outgoing(a);
  for (Location q = 0; q < n; ++q) {
    std::vector<char> seed(n, 0);
    seed[q] = 1;
    const auto closure = eps_closure(a, std::move(seed));
    for (Location p = 0; p < n; ++p) {
      if (!closure[p]) continue;
      if (a.is_final(p)) out.set_final(q);
      for (std::size_t t : out_edges[p]) out.add_transition(q, a.transitions()[t].guard, a.transitions()[t].dst);
    }
  }
  return trim(out);
}

SymbolicAutomaton product(const SymbolicAutomaton& a_in, const SymbolicAutomaton& b_in) {
  SymbolicAutomaton sa, sb;
  const auto& a = without_eps(a_in, sa);
  const auto& b = without_eps(b_in, sb);
  SymbolicAutomaton out(merge_variables(a.variables(), b.variables()));
  std::map<std::pair<Location, Location>, Location> ids;
  std::deque<std::pair<Location, Location>> work;
  auto id_of = [&](Location p, Location q) {
    auto [it, inserted] = ids.try_emplace({p, q}, 0);
    if (inserted) {
      it->second = out.add_location(false, a.is_final(p) && b.is_final(q));
      work.emplace_back(p, q);
    }
    return it->second;
  };
  for (Location p : a.initial_locations()) {
    for (Location q : b.initial_locations()) out.set_initial(id_of(p, q));
  }
  const auto oa = outgoing(a);
  const auto ob = outgoing(b);
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    const Location src = ids.at({p, q});
    for (std::size_t i : oa[p]) {
      for (std::size_t j : ob[q]) {
        auto guard = wedge_minimize(prune_unsat(dnf_and(a.transitions()[i].guard, b.transitions()[j].guard)));
        if (!is_sat(guard)) continue;
        const Location dst = id_of(a.transitions()[i].dst, b.transitions()[j].dst);
        out.add_transition(src, std::move(guard), dst);
      }
    }
  }
  return trim(out);
}

SymbolicAutomaton unite(const SymbolicAutomaton& a, const SymbolicAutomaton& b) {
  SymbolicAutomaton out(merge_variables(a.variables(), b.variables()));
  for (const auto* part : {&a, &b}) {
    const Location base = static_cast<Location>(out.num_locations());
    for (Location q = 0; q < part->num_locations(); ++q) out.add_location(part->is_initial(q), part->is_final(q));
    for (const auto& t : part->transitions()) out.add_transition(base + t.src, t.guard, base + t.dst);
    for (auto [p, q] : part->epsilons()) out.add_epsilon(base + p, base + q);
  }
  return out;
}

SymbolicAutomaton trim(const SymbolicAutomaton& a) {
  const auto n = a.num_locations();
  std::vector<std::vector<std::size_t>> fwd(n);
  std::vector<std::vector<Location>> bwd(n);
  std::vector<char> live_edge(a.transitions().size(), 0);
  for (std::size_t i = 0; i < a.transitions().size(); ++i) {
    const auto& t = a.transitions()[i];
    if (!is_sat(t.guard)) continue;
    live_edge[i] = 1;
    fwd[t.src].push_back(i);
    bwd[t.dst].push_back(t.src);
  }
  std::vector<std::vector<Location>> eps_fwd(n), eps_bwd(n);
  for (auto [p, q] : a.epsilons()) {
    eps_fwd[p].push_back(q);
    eps_bwd[q].push_back(p);
  }
  std::vector<char> coreach(n, 0);
  std::vector<Location> stack;
  for (Location q = 0; q < n; ++q) {
    if (a.is_final(q)) {
      coreach[q] = 1;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    Location q = stack.back();
    stack.pop_back();
    auto visit = [&](Location p) {
      if (!coreach[p]) {
        coreach[p] = 1;
        stack.push_back(p);
      }
    };
    for (Location p : bwd[q]) visit(p);
    for (Location p : eps_bwd[q]) visit(p);
  }

  // BFS numbering from the initial locations over co-reachable targets.
  std::vector<Location> order;
  std::vector<long> renum(n, -1);
  std::deque<Location> work;
  for (Location q = 0; q < n; ++q) {
    if (a.is_initial(q)) {
      renum[q] = static_cast<long>(order.size());
      order.push_back(q);
      work.push_back(q);
    }
  }
  while (!work.empty()) {
    Location q = work.front();
    work.pop_front();
    auto visit = [&](Location p) {
      if (coreach[p] && renum[p] < 0) {
        renum[p] = static_cast<long>(order.size());
        order.push_back(p);
        work.push_back(p);
      }
    };
    for (std::size_t i : fwd[q]) visit(a.transitions()[i].dst);
    for (Location p : eps_fwd[q]) visit(p);
  }

  SymbolicAutomaton out(a.variables());
  for (Location q : order) out.add_location(a.is_initial(q), a.is_final(q));
  auto keep = [&](Location p, Location q) { return renum[p] >= 0 && renum[q] >= 0 && coreach[q]; };

  // Parallel transitions are merged into one guard, in first-seen order.
  std::map<std::pair<long, long>, std::size_t> slot;
  std::vector<Transition> merged;
  for (Location q : order) {
    for (std::size_t i : fwd[q]) {
      const auto& t = a.transitions()[i];
      if (!keep(t.src, t.dst)) continue;
      const std::pair<long, long> key{renum[t.src], renum[t.dst]};
      auto guard = prune_unsat(t.guard);
      auto it = slot.find(key);
      if (it == slot.end()) {
        slot.emplace(key, merged.size());
        merged.push_back({static_cast<Location>(key.first), std::move(guard), static_cast<Location>(key.second)});
      } else {
        auto& g = merged[it->second].guard;
        for (auto& c : guard.clauses) {
          if (std::find(g.clauses.begin(), g.clauses.end(), c) == g.clauses.end()) g.clauses.push_back(std::move(c));
        }
        g.wedge_minimal = false;
      }
    }
  }
  for (auto& t : merged) out.add_transition(t.src, std::move(t.guard), t.dst);
  std::set<std::pair<long, long>> eps_seen;
  for (auto [p, q] : a.epsilons()) {
    if (!keep(p, q) || p == q) continue;
    if (eps_seen.insert({renum[p], renum[q]}).second) {
      out.add_epsilon(static_cast<Location>(renum[p]), static_cast<Location>(renum[q]));
    }
  }
  return out;
}

SymbolicAutomaton mintermize(const SymbolicAutomaton& a_in) {
  SymbolicAutomaton storage;
  const auto& a = without_eps(a_in, storage);
  SymbolicAutomaton out(a.variables());
  for (Location q = 0; q < a.num_locations(); ++q) out.add_location(a.is_initial(q), a.is_final(q));
  const auto out_edges = outgoing(a);
  for (Location q = 0; q < a.num_locations(); ++q) {
    std::vector<const DnfPredicate*> guards;
    for (std::size_t i : out_edges[q]) guards.push_back(&a.transitions()[i].guard);
    if (guards.empty()) continue;
    const auto part = partition_cells(guards);
    std::map<std::vector<std::size_t>, std::vector<const Cell*>> groups;
    for (const auto& cell : part.cells) {
      std::vector<std::size_t> sig;
      for (std::size_t k = 0; k < guards.size(); ++k) {
        if (evaluate(cell.rep, *guards[k])) sig.push_back(k);
      }
      if (!sig.empty()) groups[sig].push_back(&cell);
    }
    for (const auto& [sig, cells] : groups) {
      const auto guard = cells_to_guard(cells, part.vars);
      std::set<Location> targets;
      for (std::size_t k : sig) targets.insert(a.transitions()[out_edges[q][k]].dst);
      for (Location dst : targets) out.add_transition(q, guard, dst);
    }
  }
  return out;
}

SymbolicAutomaton determinize(const SymbolicAutomaton& a_in) {
  SymbolicAutomaton storage;
  const auto& a = without_eps(a_in, storage);
  const auto out_edges = outgoing(a);
  SymbolicAutomaton out(a.variables());
  std::map<std::vector<Location>, Location> ids;
  std::deque<std::vector<Location>> work;
  auto id_of = [&](const std::vector<Location>& set) {
    auto [it, inserted] = ids.try_emplace(set, 0);
    if (inserted) {
      bool fin = std::any_of(set.begin(), set.end(), [&](Location q) { return a.is_final(q); });
      it->second = out.add_location(false, fin);
      work.push_back(set);
    }
    return it->second;
  };
  out.set_initial(id_of(a.initial_locations()));
  while (!work.empty()) {
    const auto set = work.front();
    work.pop_front();
    const Location src = ids.at(set);
    std::vector<std::size_t> edges;
    std::vector<const DnfPredicate*> guards;
    for (Location q : set) {
      for (std::size_t i : out_edges[q]) {
        edges.push_back(i);
        guards.push_back(&a.transitions()[i].guard);
      }
    }
    const auto part = partition_cells(guards);
    std::map<std::vector<Location>, std::vector<const Cell*>> groups;
    for (const auto& cell : part.cells) {
      std::set<Location> targets;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (evaluate(cell.rep, *guards[k])) targets.insert(a.transitions()[edges[k]].dst);
      }
      groups[{targets.begin(), targets.end()}].push_back(&cell);
    }
    for (const auto& [targets, cells] : groups) {
      out.add_transition(src, cells_to_guard(cells, part.vars), id_of(targets));
    }
  }
  return out;
}

SymbolicAutomaton complement(const SymbolicAutomaton& a) {
  auto d = determinize(a);
  for (Location q = 0; q < d.num_locations(); ++q) d.set_final(q, !d.is_final(q));
  return trim(d);
}

namespace {

std::vector<std::vector<Valuation>> per_location_cells(const SymbolicAutomaton& a) {
  const auto out_edges = outgoing(a);
  std::vector<std::vector<Valuation>> out;
  for (Location q = 0; q < a.num_locations(); ++q) {
    std::vector<const DnfPredicate*> guards;
    for (std::size_t i : out_edges[q]) guards.push_back(&a.transitions()[i].guard);
    out.push_back(cell_representatives(guards));
  }
  return out;
}

}  // namespace

bool is_deterministic(const SymbolicAutomaton& a) {
  if (a.has_epsilons() || a.initial_locations().size() > 1) return false;
  const auto out_edges = outgoing(a);
  const auto reps = per_location_cells(a);
  for (Location q = 0; q < a.num_locations(); ++q) {
    for (const auto& v : reps[q]) {
      int hits = 0;
      for (std::size_t i : out_edges[q]) hits += evaluate(v, a.transitions()[i].guard) ? 1 : 0;
      if (hits > 1) return false;
    }
  }
  return true;
}

bool is_complete(const SymbolicAutomaton& a) {
  if (a.has_epsilons() || a.initial_locations().empty()) return false;
  const auto out_edges = outgoing(a);
  const auto reps = per_location_cells(a);
  for (Location q = 0; q < a.num_locations(); ++q) {
    for (const auto& v : reps[q]) {
      bool hit = std::any_of(out_edges[q].begin(), out_edges[q].end(),
                             [&](std::size_t i) { return evaluate(v, a.transitions()[i].guard); });
      if (!hit) return false;
    }
  }
  return true;
}

AcceptanceRun::AcceptanceRun(const SymbolicAutomaton& a) : automaton_(&a), active_(a.num_locations(), 0) {
  for (Location q : a.initial_locations()) active_[q] = 1;
  active_ = eps_closure(a, std::move(active_));
}

void AcceptanceRun::step(const Valuation& v) {
  std::vector<char> next(active_.size(), 0);
  for (const auto& t : automaton_->transitions()) {
    if (active_[t.src] && !next[t.dst] && evaluate(v, t.guard)) next[t.dst] = 1;
  }
  active_ = eps_closure(*automaton_, std::move(next));
}

bool AcceptanceRun::accepting() const {
  for (Location q = 0; q < active_.size(); ++q) {
    if (active_[q] && automaton_->is_final(q)) return true;
  }
  return false;
}

bool accepts(const SymbolicAutomaton& a, const Trace& trace) {
  AcceptanceRun run(a);
  for (const auto& v : trace.samples()) run.step(v);
  return run.accepting();
}

}  // namespace arv
