#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "arv/predicate.hpp"
#include "arv/sre.hpp"
#include "arv/stl.hpp"

namespace arv {

/// `x <= 3 && !(y < 2) || z > 0`; `>` and `>=` read as negated literals.
Predicate parse_predicate(std::string_view text);

/// Precedence, tightest first: `!` and F/G/X/P/H/Y, then U/S (left-binding,
/// optional `[a,b]` / `[a,inf)` window), `&&`, `||`, `->` (right-binding).
StlFormula parse_stl(std::string_view text);

/// Predicates as basic expressions, `eps`, postfix `*`, `;` concatenation,
/// `&` intersection, `|` union, and `<e>[a,b]` durations.
SreExpr parse_sre(std::string_view text);

enum class SpecLanguage { Stl, Sre };

struct Spec {
  SpecLanguage language = SpecLanguage::Stl;
  std::variant<StlFormula, SreExpr> formula = StlFormula::top();

  bool is_stl() const noexcept { return language == SpecLanguage::Stl; }
  const StlFormula& stl() const { return std::get<StlFormula>(formula); }
  const SreExpr& sre() const { return std::get<SreExpr>(formula); }
};

/// Spec file contents: optional first-line `#lang stl` / `#lang sre`
/// directive (default stl), further `#` lines are comments.
Spec parse_spec(std::string_view text);

}  // namespace arv
