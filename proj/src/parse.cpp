#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "aicrepair/frontend.hpp"

namespace aicrepair {

namespace {

enum class Tok { Ident, Comma, Period, Colon, Arrow, LArrow, If, Bar, Plus,
                 Minus, LParen, RParen, LBrace, RBrace, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line, k = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", l, k});
      advance(2);
      continue;
    }
    if (two == "<-") {
      out.push_back({Tok::LArrow, "<-", l, k});
      advance(2);
      continue;
    }
    if (two == ":-") {
      out.push_back({Tok::If, ":-", l, k});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Period; break;
      case ':': kind = Tok::Colon; break;
      case '|': kind = Tok::Bar; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      default:
        throw SyntaxError(l, k, std::string("a token, found '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, k});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_atom_name(const std::string& s) {
  return !s.empty() && s[0] >= 'a' && s[0] <= 'z' && s != "not" &&
         s != "false";
}

bool is_section(const std::string& s) {
  return s == "universe" || s == "db" || s == "aic" || s == "rev" ||
         s == "lp";
}

// Rules as names until the universe is known.
struct RawLit {
  std::string atom;
  bool positive;
};
struct RawRule {
  std::vector<RawLit> head;
  std::vector<RawLit> body;
  std::size_t line;
  bool head_is_false = false;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const {
    return t_[std::min(p_ + k, t_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const {
    return at(Tok::Ident) && peek().text == w;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().line, peek().col, expected);
  }
  const Token& expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    return t_[p_++];
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("'" + std::string(w) + "'");
    ++p_;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++p_;
    return true;
  }
  std::string atom() {
    if (!at(Tok::Ident) || !is_atom_name(peek().text)) fail("atom");
    return t_[p_++].text;
  }
  bool section_start() const {
    return at(Tok::Ident) && is_section(peek().text) &&
           peek(1).kind == Tok::Colon;
  }
  bool rules_end() const { return at(Tok::End) || section_start(); }

  // atom ( ',' atom )*  or nothing
  std::vector<std::string> atom_list(Tok terminator) {
    std::vector<std::string> out;
    if (at(terminator)) return out;
    do out.push_back(atom());
    while (accept(Tok::Comma));
    return out;
  }

  RawLit body_literal() {
    if (at_word("not")) {
      ++p_;
      return {atom(), false};
    }
    return {atom(), true};
  }

  std::vector<RawLit> body(Tok terminator) {
    std::vector<RawLit> out;
    if (at(terminator)) return out;
    do out.push_back(body_literal());
    while (accept(Tok::Comma));
    return out;
  }

  RawLit action() {
    if (accept(Tok::Plus)) return {atom(), true};
    if (accept(Tok::Minus)) return {atom(), false};
    fail("update action '+atom' or '-atom'");
  }

  RawLit revision_literal() {
    bool positive;
    if (at_word("in")) {
      positive = true;
    } else if (at_word("out")) {
      positive = false;
    } else {
      fail("revision literal 'in(atom)' or 'out(atom)'");
    }
    ++p_;
    expect(Tok::LParen, "'('");
    std::string a = atom();
    expect(Tok::RParen, "')'");
    return {a, positive};
  }

  RawRule aic_rule() {
    RawRule r{{}, {}, peek().line};
    r.body = body(Tok::Arrow);
    expect(Tok::Arrow, "'->'");
    if (at_word("false")) {
      ++p_;
      r.head_is_false = true;
    } else {
      do r.head.push_back(action());
      while (accept(Tok::Bar));
    }
    expect(Tok::Period, "'.'");
    return r;
  }

  RawRule revision_rule() {
    RawRule r{{}, {}, peek().line};
    if (at_word("false")) {
      ++p_;
      r.head_is_false = true;
    } else {
      do r.head.push_back(revision_literal());
      while (accept(Tok::Bar));
    }
    expect(Tok::LArrow, "'<-'");
    if (!at(Tok::Period)) {
      do r.body.push_back(revision_literal());
      while (accept(Tok::Comma));
    }
    expect(Tok::Period, "'.'");
    return r;
  }

  RawRule lp_rule() {
    RawRule r{{}, {}, peek().line};
    if (at_word("false")) {
      ++p_;
      r.head_is_false = true;
    } else {
      do r.head.push_back({atom(), true});
      while (accept(Tok::Bar));
    }
    expect(Tok::If, "':-'");
    r.body = body(Tok::Period);
    expect(Tok::Period, "'.'");
    return r;
  }

  std::size_t pos() const { return p_; }

 private:
  std::vector<Token> t_;
  std::size_t p_ = 0;
};

template <class Tag>
SignedSet<Tag> resolve(const Universe& u, const std::vector<RawLit>& xs) {
  SignedSet<Tag> out;
  for (const auto& x : xs) out.insert({u.at(x.atom), x.positive});
  return out;
}

std::string at_line(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Parser ps(lex(text));
  std::optional<std::vector<std::string>> declared;
  std::optional<std::vector<std::string>> db_atoms;
  std::string kind;
  std::vector<RawRule> rules;
  std::set<std::string> seen;

  while (!ps.at(Tok::End)) {
    if (!ps.section_start())
      ps.fail("section header (universe:, db:, aic:, rev: or lp:)");
    Token head = ps.peek();
    ps.expect(Tok::Ident, "section");
    ps.expect(Tok::Colon, "':'");
    const std::string& name = head.text;
    if (!seen.insert(name).second)
      throw SyntaxError(head.line, head.col, "no second '" + name + ":' section");
    if (name == "universe" || name == "db") {
      auto atoms = ps.atom_list(Tok::Period);
      ps.expect(Tok::Period, "',' or '.'");
      (name == "universe" ? declared : db_atoms) = std::move(atoms);
      continue;
    }
    if (!kind.empty())
      throw SyntaxError(head.line, head.col,
                        "a single program section, already have '" + kind + ":'");
    kind = name;
    while (!ps.rules_end()) {
      if (kind == "aic") rules.push_back(ps.aic_rule());
      else if (kind == "rev") rules.push_back(ps.revision_rule());
      else rules.push_back(ps.lp_rule());
    }
  }
  if (kind.empty()) ps.fail("a program section (aic:, rev: or lp:)");

  std::vector<std::string> names;
  if (declared) {
    names = *declared;
  } else {
    std::set<std::string> all;
    if (db_atoms) all.insert(db_atoms->begin(), db_atoms->end());
    for (const auto& r : rules) {
      for (const auto& l : r.head) all.insert(l.atom);
      for (const auto& l : r.body) all.insert(l.atom);
    }
    names.assign(all.begin(), all.end());
  }
  auto u = std::make_shared<const Universe>(std::move(names), declared.has_value());

  Instance inst{u, {}, AicProgram(u), {}};
  if (db_atoms)
    for (const auto& a : *db_atoms) inst.db.insert(u->at(a));

  auto warn_body = [&](const RawRule& r, const LiteralSet& body) {
    if (!body.consistent())
      inst.warnings.push_back(
          at_line(r.line, "body contains an atom and its negation; the rule "
                          "can never be violated"));
  };

  if (kind == "aic") {
    AicProgram p(u);
    for (const auto& r : rules) {
      LiteralSet body = resolve<LiteralTag>(*u, r.body);
      warn_body(r, body);
      try {
        p.add(validate_aic_rule(*u, body, resolve<ActionTag>(*u, r.head)));
      } catch (const UpdatableConditionViolated& e) {
        throw UpdatableConditionViolated(at_line(r.line, e.what()));
      }
    }
    inst.program = std::move(p);
  } else if (kind == "rev") {
    RevisionProgram p(u);
    for (const auto& r : rules) {
      try {
        p.add(validate_revision_rule(*u, resolve<RevisionTag>(*u, r.head),
                                     resolve<RevisionTag>(*u, r.body)));
      } catch (const EmptyRevisionRule& e) {
        throw EmptyRevisionRule(at_line(r.line, e.what()));
      }
    }
    inst.program = std::move(p);
  } else {
    LogicProgram p(u);
    for (const auto& r : rules) {
      LiteralSet body = resolve<LiteralTag>(*u, r.body);
      warn_body(r, body);
      p.add({resolve<LiteralTag>(*u, r.head).positive(), body.positive(),
             body.negative()});
    }
    inst.program = std::move(p);
  }
  return inst;
}

namespace {

template <class Tag, class Item>
SignedSet<Tag> parse_list(const Universe& u, std::string_view text,
                          Item&& item) {
  Parser ps(lex(text));
  bool braced = ps.accept(Tok::LBrace);
  SignedSet<Tag> out;
  Tok stop = braced ? Tok::RBrace : Tok::End;
  if (!ps.at(stop)) {
    do {
      RawLit l = item(ps);
      out.insert({u.at(l.atom), l.positive});
    } while (ps.accept(Tok::Comma));
  }
  if (braced) ps.expect(Tok::RBrace, "',' or '}'");
  ps.expect(Tok::End, braced ? "end of input" : "',' or end of input");
  return out;
}

}  // namespace

UpdateSet parse_update_set(const Universe& u, std::string_view text) {
  return parse_list<ActionTag>(u, text, [](Parser& p) { return p.action(); });
}

RevisionSet parse_revision_set(const Universe& u, std::string_view text) {
  return parse_list<RevisionTag>(
      u, text, [](Parser& p) { return p.revision_literal(); });
}

LiteralSet parse_literal_set(const Universe& u, std::string_view text) {
  return parse_list<LiteralTag>(
      u, text, [](Parser& p) { return p.body_literal(); });
}

AtomSet parse_atom_set(const Universe& u, std::string_view text) {
  auto s = parse_list<LiteralTag>(
      u, text, [](Parser& p) { return RawLit{p.atom(), true}; });
  return s.positive();
}

}  // namespace aicrepair
