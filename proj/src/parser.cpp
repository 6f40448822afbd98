#include "arv/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "arv/error.hpp"

namespace arv {

namespace {

enum class Tok {
  Ident, Number, LParen, RParen, LBracket, RBracket, Comma,
  Lt, Le, Gt, Ge, Bang, AndAnd, OrOr, Arrow, Minus,
  Semi, Amp, Bar, Star, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), i});
    i += len;
  };
  while (i < s.size()) {
    const char c = s[i];
    const char d = i + 1 < s.size() ? s[i + 1] : '\0';
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      push(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && std::isdigit(static_cast<unsigned char>(d)))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
          j = k;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        }
      }
      push(Tok::Number, j - i);
    } else if (c == '<' && d == '=') {
      push(Tok::Le, 2);
    } else if (c == '>' && d == '=') {
      push(Tok::Ge, 2);
    } else if (c == '&' && d == '&') {
      push(Tok::AndAnd, 2);
    } else if (c == '|' && d == '|') {
      push(Tok::OrOr, 2);
    } else if (c == '-' && d == '>') {
      push(Tok::Arrow, 2);
    } else {
      switch (c) {
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case '[': push(Tok::LBracket, 1); break;
        case ']': push(Tok::RBracket, 1); break;
        case ',': push(Tok::Comma, 1); break;
        case '<': push(Tok::Lt, 1); break;
        case '>': push(Tok::Gt, 1); break;
        case '!': push(Tok::Bang, 1); break;
        case '-': push(Tok::Minus, 1); break;
        case ';': push(Tok::Semi, 1); break;
        case '&': push(Tok::Amp, 1); break;
        case '|': push(Tok::Bar, 1); break;
        case '*': push(Tok::Star, 1); break;
        default: throw ParseError(i, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  static const char* const kKeywords[] = {"F", "G", "X", "P", "H", "Y", "U", "S", "T",
                                          "true", "false", "eps", "inf"};
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view name) const { return at(Tok::Ident) && peek().text == name; }

  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(t.pos, message + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"));
  }

  void expect_end() {
    if (!at(Tok::End)) fail("unexpected trailing input");
  }

  double number() {
    bool negative = accept(Tok::Minus);
    double sign = negative ? -1.0 : 1.0;
    if (at_ident("inf")) {
      take();
      return sign * Interval::kInf;
    }
    Token t = expect(Tok::Number, "number");
    double value = 0.0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size()) throw ParseError(t.pos, "bad number '" + t.text + "'");
    return sign * value;
  }

  unsigned natural() {
    Token t = expect(Tok::Number, "natural number");
    unsigned value = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size()) {
      throw ParseError(t.pos, "interval bound must be a natural number");
    }
    return value;
  }

  /// `[a,b]`, `[a,inf)` or `[a,inf]`
  TimeInterval interval() {
    std::size_t start = peek().pos;
    expect(Tok::LBracket, "'['");
    unsigned lo = natural();
    expect(Tok::Comma, "','");
    if (at_ident("inf")) {
      take();
      if (!accept(Tok::RParen)) expect(Tok::RBracket, "')' or ']'");
      return TimeInterval::unbounded(lo);
    }
    unsigned hi = natural();
    expect(Tok::RBracket, "']'");
    if (hi < lo) throw ParseError(start, "interval lower bound exceeds upper bound");
    return TimeInterval::closed(lo, hi);
  }

  std::optional<TimeInterval> optional_interval() {
    if (at(Tok::LBracket)) return interval();
    return std::nullopt;
  }

  struct RawAtom {
    std::string var;
    Rel rel;
    double constant;
  };

  bool at_atom() const { return at(Tok::Ident) && !is_keyword(peek().text); }

  RawAtom atom() {
    Token name = expect(Tok::Ident, "variable");
    if (is_keyword(name.text)) throw ParseError(name.pos, "keyword '" + name.text + "' used as variable");
    Rel rel;
    switch (peek().kind) {
      case Tok::Lt: rel = Rel::Lt; break;
      case Tok::Le: rel = Rel::Le; break;
      case Tok::Gt: rel = Rel::Gt; break;
      case Tok::Ge: rel = Rel::Ge; break;
      default: fail("expected comparison after variable");
    }
    take();
    return {name.text, rel, number()};
  }

  // ---- predicates ----------------------------------------------------------

  Predicate pred_or() {
    Predicate p = pred_and();
    while (accept(Tok::OrOr)) p = Predicate::disjunction(p, pred_and());
    return p;
  }

  Predicate pred_and() {
    Predicate p = pred_not();
    while (accept(Tok::AndAnd)) p = Predicate::conjunction(p, pred_not());
    return p;
  }

  Predicate pred_not() {
    if (accept(Tok::Bang)) return Predicate::negation(pred_not());
    if (accept(Tok::LParen)) {
      Predicate p = pred_or();
      expect(Tok::RParen, "')'");
      return p;
    }
    if (at_ident("true") || at_ident("T")) {
      take();
      return Predicate::top();
    }
    if (at_ident("false")) {
      take();
      return Predicate::bottom();
    }
    return predicate_of(atom());
  }

  static Predicate predicate_of(const RawAtom& a) {
    switch (a.rel) {
      case Rel::Lt: return Predicate::atom(a.var, Cmp::Less, a.constant);
      case Rel::Le: return Predicate::atom(a.var, Cmp::LessEq, a.constant);
      case Rel::Gt: return Predicate::negation(Predicate::atom(a.var, Cmp::LessEq, a.constant));
      case Rel::Ge: return Predicate::negation(Predicate::atom(a.var, Cmp::Less, a.constant));
    }
    return Predicate::top();
  }

  // ---- STL -----------------------------------------------------------------

  StlFormula stl_implies() {
    StlFormula f = stl_or();
    if (accept(Tok::Arrow)) return StlFormula::implication(f, stl_implies());
    return f;
  }

  StlFormula stl_or() {
    StlFormula f = stl_and();
    while (accept(Tok::OrOr)) f = StlFormula::disjunction(f, stl_and());
    return f;
  }

  StlFormula stl_and() {
    StlFormula f = stl_binary_temporal();
    while (accept(Tok::AndAnd)) f = StlFormula::conjunction(f, stl_binary_temporal());
    return f;
  }

  StlFormula stl_binary_temporal() {
    StlFormula f = stl_unary();
    while (at_ident("U") || at_ident("S")) {
      bool is_until = take().text == "U";
      TimeInterval i = optional_interval().value_or(TimeInterval::unbounded());
      StlFormula rhs = stl_unary();
      f = is_until ? StlFormula::until(f, rhs, i) : StlFormula::since(f, rhs, i);
    }
    return f;
  }

  StlFormula stl_unary() {
    if (accept(Tok::Bang)) return StlFormula::negation(stl_unary());
    if (at(Tok::Ident)) {
      const std::string& name = peek().text;
      if (name == "F" || name == "G" || name == "P" || name == "H") {
        std::string op = take().text;
        TimeInterval i = optional_interval().value_or(TimeInterval::unbounded());
        StlFormula body = stl_unary();
        if (op == "F") return StlFormula::eventually(body, i);
        if (op == "G") return StlFormula::globally(body, i);
        if (op == "P") return StlFormula::once(body, i);
        return StlFormula::historically(body, i);
      }
      if (name == "X" || name == "Y") {
        bool next = take().text == "X";
        StlFormula body = stl_unary();
        return next ? StlFormula::next(body) : StlFormula::previous(body);
      }
    }
    return stl_primary();
  }

  StlFormula stl_primary() {
    if (accept(Tok::LParen)) {
      StlFormula f = stl_implies();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_ident("true") || at_ident("T")) {
      take();
      return StlFormula::top();
    }
    if (at_ident("false")) {
      take();
      return StlFormula::bottom();
    }
    if (!at_atom()) fail("expected formula");
    RawAtom a = atom();
    return StlFormula::atom(a.var, a.rel, a.constant);
  }

  // ---- SRE -----------------------------------------------------------------

  SreExpr sre_union() {
    SreExpr e = sre_intersect();
    while (accept(Tok::Bar)) e = SreExpr::alt(e, sre_intersect());
    return e;
  }

  SreExpr sre_intersect() {
    SreExpr e = sre_concat();
    while (accept(Tok::Amp)) e = SreExpr::intersect(e, sre_concat());
    return e;
  }

  SreExpr sre_concat() {
    SreExpr e = sre_bool_or();
    while (accept(Tok::Semi)) e = SreExpr::concat(e, sre_bool_or());
    return e;
  }

  const Predicate& require_pred(const SreExpr& e, std::size_t pos, const char* op) {
    if (e.op() != SreExpr::Op::Pred) throw ParseError(pos, std::string("operands of '") + op + "' must be predicates");
    return e.predicate();
  }

  SreExpr sre_bool_or() {
    std::size_t pos = peek().pos;
    SreExpr e = sre_bool_and();
    while (at(Tok::OrOr)) {
      take();
      SreExpr rhs = sre_bool_and();
      e = SreExpr::pred(Predicate::disjunction(require_pred(e, pos, "||"), require_pred(rhs, pos, "||")));
    }
    return e;
  }

  SreExpr sre_bool_and() {
    std::size_t pos = peek().pos;
    SreExpr e = sre_bool_not();
    while (at(Tok::AndAnd)) {
      take();
      SreExpr rhs = sre_bool_not();
      e = SreExpr::pred(Predicate::conjunction(require_pred(e, pos, "&&"), require_pred(rhs, pos, "&&")));
    }
    return e;
  }

  SreExpr sre_bool_not() {
    std::size_t pos = peek().pos;
    if (accept(Tok::Bang)) return SreExpr::pred(Predicate::negation(require_pred(sre_bool_not(), pos, "!")));
    return sre_postfix();
  }

  SreExpr sre_postfix() {
    SreExpr e = sre_primary();
    while (accept(Tok::Star)) e = SreExpr::star(e);
    return e;
  }

  SreExpr sre_primary() {
    if (accept(Tok::LParen)) {
      SreExpr e = sre_union();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (accept(Tok::Lt)) {
      SreExpr e = sre_union();
      expect(Tok::Gt, "'>' closing duration");
      return SreExpr::duration(e, interval());
    }
    if (at_ident("eps")) {
      take();
      return SreExpr::epsilon();
    }
    if (at_ident("true") || at_ident("T")) {
      take();
      return SreExpr::pred(Predicate::top());
    }
    if (at_ident("false")) {
      take();
      return SreExpr::pred(Predicate::bottom());
    }
    if (!at_atom()) fail("expected expression");
    return SreExpr::pred(predicate_of(atom()));
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Predicate parse_predicate(std::string_view text) {
  Parser p(text);
  Predicate out = p.pred_or();
  p.expect_end();
  return out;
}

StlFormula parse_stl(std::string_view text) {
  Parser p(text);
  StlFormula out = p.stl_implies();
  p.expect_end();
  return out;
}

SreExpr parse_sre(std::string_view text) {
  Parser p(text);
  SreExpr out = p.sre_union();
  p.expect_end();
  return out;
}

Spec parse_spec(std::string_view text) {
  Spec spec;
  std::string body;
  std::size_t line_start = 0;
  bool first_line = true;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t k = line.find_first_not_of(" \t\r");
    std::string_view trimmed = k == std::string_view::npos ? std::string_view{} : line.substr(k);
    if (!trimmed.empty() && trimmed.front() == '#') {
      if (first_line && trimmed.starts_with("#lang")) {
        std::string_view lang = trimmed.substr(5);
        std::size_t a = lang.find_first_not_of(" \t");
        std::size_t b = lang.find_last_not_of(" \t\r");
        lang = a == std::string_view::npos ? std::string_view{} : lang.substr(a, b - a + 1);
        if (lang == "stl") {
          spec.language = SpecLanguage::Stl;
        } else if (lang == "sre") {
          spec.language = SpecLanguage::Sre;
        } else {
          throw ParseError(line_start, "unknown language '" + std::string(lang) + "'");
        }
      }
      // Blank out comment lines so token positions stay file offsets.
      body.append(line.size(), ' ');
    } else {
      body.append(line);
    }
    if (!trimmed.empty()) first_line = false;
    if (line_end == text.size()) break;
    body.push_back('\n');
    line_start = line_end + 1;
  }
  if (spec.language == SpecLanguage::Stl) {
    spec.formula = parse_stl(body);
  } else {
    spec.formula = parse_sre(body);
  }
  return spec;
}

}  // namespace arv
