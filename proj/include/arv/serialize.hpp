#pragma once

#include <string>
#include <string_view>

#include "arv/automaton.hpp"

namespace arv {

/// Graphviz rendering: one node per location, one edge per transition
/// labelled with its guard; initial locations bold, final ones doubled.
std::string to_dot(const SymbolicAutomaton& a);

/// {"variables", "locations", "initial", "final", "transitions": [{"src", "guard", "dst"}],
/// "epsilon": [[src, dst]] (only when present)}. Guards use predicate syntax.
std::string to_json(const SymbolicAutomaton& a);

/// Inverse of to_json. Throws SchemaError naming the offending path.
SymbolicAutomaton from_json(std::string_view text);

}  // namespace arv
