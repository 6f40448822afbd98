#include "arv/serialize.hpp"

#include <json.hpp>
#include <sstream>

#include "arv/error.hpp"
#include "arv/parser.hpp"

namespace arv {

using nlohmann::json;

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

Location location(const json& j, std::size_t count, const std::string& path) {
  if (!j.is_number_unsigned()) throw SchemaError(path, "expected a location id");
  const auto q = j.get<std::uint64_t>();
  if (q >= count) throw SchemaError(path, "location id out of range");
  return static_cast<Location>(q);
}

}  // namespace

std::string to_dot(const SymbolicAutomaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  for (Location q = 0; q < a.num_locations(); ++q) {
    out << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle");
    if (a.is_initial(q)) out << ", style=bold";
    out << "];\n";
  }
  for (const auto& t : a.transitions()) {
    out << "  q" << t.src << " -> q" << t.dst << " [label=\"" << dot_escape(to_string(t.guard)) << "\"];\n";
  }
  for (auto [p, q] : a.epsilons()) out << "  q" << p << " -> q" << q << " [label=\"eps\", style=dashed];\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const SymbolicAutomaton& a) {
  json j;
  j["variables"] = a.variables();
  j["locations"] = a.num_locations();
  j["initial"] = a.initial_locations();
  j["final"] = a.final_locations();
  json ts = json::array();
  for (const auto& t : a.transitions()) ts.push_back({{"src", t.src}, {"guard", to_string(t.guard)}, {"dst", t.dst}});
  j["transitions"] = std::move(ts);
  if (a.has_epsilons()) {
    json es = json::array();
    for (auto [p, q] : a.epsilons()) es.push_back({p, q});
    j["epsilon"] = std::move(es);
  }
  return j.dump(2) + "\n";
}

SymbolicAutomaton from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
  const auto& vars = field(j, "variables", "$");
  if (!vars.is_array()) throw SchemaError("$.variables", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) throw SchemaError("variables[" + std::to_string(i) + "]", "expected a string");
    names.push_back(vars[i].get<std::string>());
  }
  SymbolicAutomaton out(std::move(names));

  const auto& n = field(j, "locations", "$");
  if (!n.is_number_unsigned()) throw SchemaError("locations", "expected a non-negative integer");
  const auto count = n.get<std::size_t>();
  for (std::size_t q = 0; q < count; ++q) out.add_location();

  for (const char* key : {"initial", "final"}) {
    const auto& list = field(j, key, "$");
    if (!list.is_array()) throw SchemaError(key, "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Location q = location(list[i], count, std::string(key) + "[" + std::to_string(i) + "]");
      if (std::string_view(key) == "initial") {
        out.set_initial(q);
      } else {
        out.set_final(q);
      }
    }
  }

  const auto& ts = field(j, "transitions", "$");
  if (!ts.is_array()) throw SchemaError("transitions", "expected an array");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string path = "transitions[" + std::to_string(i) + "]";
    const Location src = location(field(ts[i], "src", path), count, path + ".src");
    const Location dst = location(field(ts[i], "dst", path), count, path + ".dst");
    const auto& g = field(ts[i], "guard", path);
    if (!g.is_string()) throw SchemaError(path + ".guard", "expected a predicate string");
    DnfPredicate guard;
    try {
      guard = to_dnf(parse_predicate(g.get<std::string>()));
    } catch (const ParseError& e) {
      throw SchemaError(path + ".guard", e.what());
    }
    guard.wedge_minimal = wedge_minimize(guard).same_clauses(guard);
    out.add_transition(src, std::move(guard), dst);
  }

  if (auto it = j.find("epsilon"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("epsilon", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "epsilon[" + std::to_string(i) + "]";
      const auto& e = (*it)[i];
      if (!e.is_array() || e.size() != 2) throw SchemaError(path, "expected a [src, dst] pair");
      out.add_epsilon(location(e[0], count, path + "[0]"), location(e[1], count, path + "[1]"));
    }
  }
  return out;
}

}  // namespace arv
