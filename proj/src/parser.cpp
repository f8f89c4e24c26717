#include "deak/parser.hpp"

#include <cctype>
#include <sstream>

namespace deak {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { End, Ident, Punct, Quoted, DQuoted };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // ident text, punct spelling, or quoted inner text
  SourceSpan span;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;
  Token look;
  bool has_look = false;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg, SourceSpan sp) {
    std::ostringstream os;
    os << "parse error at " << sp.line << ":" << sp.col << ": " << msg;
    throw ParseError(os.str(), sp);
  }
  [[noreturn]] void fail_here(const std::string& msg) {
    fail(msg, {pos, pos, line, col});
  }

  void advance(size_t n) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  bool starts(const char* s) const {
    size_t n = std::char_traits<char>::length(s);
    return src.compare(pos, n, s) == 0;
  }

  Token lex() {
    skip_ws();
    SourceSpan sp{pos, pos, line, col};
    if (pos >= src.size()) return {Tok::End, "", sp};
    char c = src[pos];
    // Quoted formula leaf / quoted sequent string.
    if (c == '\'' || c == '"') {
      advance(1);
      std::string inner;
      while (pos < src.size() && src[pos] != c) {
        inner += src[pos];
        advance(1);
      }
      if (pos >= src.size()) fail("unterminated quote", sp);
      advance(1);
      sp.end = pos;
      return {c == '\'' ? Tok::Quoted : Tok::DQuoted, inner, sp};
    }
    // Multi-character punctuation first.
    for (const char* p : {"|-", "->", "<-", "<*", "*>"}) {
      if (starts(p)) {
        advance(std::char_traits<char>::length(p));
        sp.end = pos;
        return {Tok::Punct, p, sp};
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '?' || c == '_' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      std::string id;
      if (c == '?') {
        id += c;
        advance(1);
      }
      while (pos < src.size()) {
        char d = src[pos];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          id += d;
          advance(1);
        } else {
          break;
        }
      }
      if (id.empty()) fail("stray character", sp);
      sp.end = pos;
      return {Tok::Ident, id, sp};
    }
    static const std::string singles = "&|;(){}[]<>^=@,:.";
    if (singles.find(c) != std::string::npos) {
      advance(1);
      sp.end = pos;
      return {Tok::Punct, std::string(1, c), sp};
    }
    fail("unexpected character", sp);
  }

  const Token& peek() {
    if (!has_look) {
      look = lex();
      has_look = true;
    }
    return look;
  }
  Token next() {
    peek();
    has_look = false;
    return look;
  }
  bool at_punct(const char* p) {
    return peek().kind == Tok::Punct && peek().text == p;
  }
  bool eat_punct(const char* p) {
    if (!at_punct(p)) return false;
    next();
    return true;
  }
  void expect_punct(const char* p) {
    if (!eat_punct(p)) fail(std::string("expected '") + p + "'", peek().span);
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::Ident)
      fail(std::string("expected ") + what, peek().span);
    return next().text;
  }
  // Rule names may contain '-' (e.g. swap-in_L); lex them specially.
  std::string lex_rule_name() {
    skip_ws();
    SourceSpan sp{pos, pos, line, col};
    std::string id;
    while (pos < src.size()) {
      char d = src[pos];
      if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
          d == '-' || d == '.') {
        id += d;
        advance(1);
      } else {
        break;
      }
    }
    if (id.empty()) fail("expected rule name", sp);
    return id;
  }
};

// ---------------------------------------------------------------------------
// Label resolution

struct Label {
  bool is_agent = false;
  Agent agent;
  ActionLabel act;
};

Label resolve_label(Lexer& lx, const Declarations& decls) {
  Token t = lx.peek();
  std::string name = lx.expect_ident("agent or action name");
  std::string state;
  if (lx.eat_punct("@")) state = lx.expect_ident("action state");
  Label out;
  if (is_metavar_name(name)) {
    // Pattern-variable convention: ?a names an agent, anything else an
    // action metavariable. Only exercised when parsing rendered schemas.
    if (name == "?a" || name == "?b") {
      out.is_agent = true;
      out.agent = Agent{name};
    } else {
      out.act = ActionLabel{name, state};
    }
    return out;
  }
  if (decls.has_agent(name)) {
    if (!state.empty()) lx.fail("agents have no '@state' suffix", t.span);
    out.is_agent = true;
    out.agent = Agent{name};
    return out;
  }
  const ActionStructure* a = decls.find_action(name);
  if (!a) lx.fail("unknown agent or action '" + name + "'", t.span);
  if (state.empty()) {
    state = a->designated;
  } else if (std::find(a->states.begin(), a->states.end(), state) ==
             a->states.end()) {
    lx.fail("action '" + name + "' has no state '" + state + "'", t.span);
  }
  out.act = ActionLabel{name, state};
  return out;
}

// ---------------------------------------------------------------------------
// Formula parser

FormulaPtr p_formula(Lexer& lx, const Declarations& decls);

FormulaPtr p_primary(Lexer& lx, const Declarations& decls) {
  if (lx.eat_punct("(")) {
    FormulaPtr f = p_formula(lx, decls);
    lx.expect_punct(")");
    return f;
  }
  Token t = lx.peek();
  if (t.kind != Tok::Ident) lx.fail("expected formula", t.span);
  std::string id = lx.next().text;
  if (id == "T") return fTop();
  if (id == "F") return fBot();
  if (id == "1" || id == "Pre") {
    lx.expect_punct("[");
    Label l = resolve_label(lx, decls);
    lx.expect_punct("]");
    if (l.is_agent) lx.fail("expected an action label", t.span);
    return id == "1" ? fOne(l.act) : fPreOf(l.act);
  }
  return fAtom(id);
}

FormulaPtr p_unary(Lexer& lx, const Declarations& decls) {
  if (lx.at_punct("<")) {
    lx.next();
    Label l = resolve_label(lx, decls);
    lx.expect_punct(">");
    bool adj = lx.eat_punct("^");
    FormulaPtr body = p_unary(lx, decls);
    if (l.is_agent)
      return adj ? fAdjDia(l.agent, body) : fDia(l.agent, body);
    return adj ? fAdjDDia(l.act, body) : fDDia(l.act, body);
  }
  if (lx.at_punct("[")) {
    lx.next();
    Label l = resolve_label(lx, decls);
    lx.expect_punct("]");
    bool adj = lx.eat_punct("^");
    FormulaPtr body = p_unary(lx, decls);
    if (l.is_agent)
      return adj ? fAdjBox(l.agent, body) : fBox(l.agent, body);
    return adj ? fAdjDBox(l.act, body) : fDBox(l.act, body);
  }
  return p_primary(lx, decls);
}

FormulaPtr p_and(Lexer& lx, const Declarations& decls) {
  FormulaPtr f = p_unary(lx, decls);
  while (lx.eat_punct("&")) f = fAnd(f, p_unary(lx, decls));
  return f;
}

FormulaPtr p_or(Lexer& lx, const Declarations& decls) {
  FormulaPtr f = p_and(lx, decls);
  while (lx.eat_punct("|")) f = fOr(f, p_and(lx, decls));
  return f;
}

FormulaPtr p_formula(Lexer& lx, const Declarations& decls) {
  FormulaPtr f = p_or(lx, decls);
  // Arrow family: one level, right-associative.
  if (lx.at_punct("->")) {
    lx.next();
    return fImp(f, p_formula(lx, decls));
  }
  if (lx.at_punct("<-")) {
    lx.next();
    return fLImp(f, p_formula(lx, decls));
  }
  if (lx.at_punct("*>")) {
    lx.next();
    return fCoImp(f, p_formula(lx, decls));
  }
  if (lx.at_punct("<*")) {
    lx.next();
    return fLCoImp(f, p_formula(lx, decls));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Structure parser

StructurePtr p_structure(Lexer& lx, const Declarations& decls);

StructurePtr p_sprim(Lexer& lx, const Declarations& decls) {
  if (lx.eat_punct("(")) {
    StructurePtr s = p_structure(lx, decls);
    lx.expect_punct(")");
    return s;
  }
  if (lx.peek().kind == Tok::Quoted) {
    Token t = lx.next();
    Lexer inner(t.text);
    FormulaPtr f = p_formula(inner, decls);
    if (inner.peek().kind != Tok::End)
      lx.fail("trailing input inside quoted formula", t.span);
    return sFm(f);
  }
  if (lx.at_punct("{")) {
    lx.next();
    Label l = resolve_label(lx, decls);
    lx.expect_punct("}");
    bool adj = lx.eat_punct("^");
    StructurePtr body = p_sprim(lx, decls);
    if (l.is_agent)
      return adj ? sAdjProx(l.agent, body) : sProx(l.agent, body);
    return adj ? sAdjDProx(l.act, body) : sDProx(l.act, body);
  }
  Token t = lx.peek();
  if (t.kind != Tok::Ident) lx.fail("expected structure", t.span);
  std::string id = lx.next().text;
  if (id == "I") return sI();
  if (id == "Phi") {
    lx.expect_punct("[");
    Label l = resolve_label(lx, decls);
    lx.expect_punct("]");
    if (l.is_agent) lx.fail("expected an action label", t.span);
    return sPhi(l.act);
  }
  // Structure metavariables, by the conventional letters.
  if (id == "X" || id == "Y" || id == "Z" || id == "W" || id == "U" ||
      id == "V" || id == "Gamma" || id == "Delta")
    return sVar(id);
  // Bare connective-free formula leaf.
  if (id == "T") return sFm(fTop());
  if (id == "F") return sFm(fBot());
  if (id == "1" || id == "Pre") {
    lx.expect_punct("[");
    Label l = resolve_label(lx, decls);
    lx.expect_punct("]");
    if (l.is_agent) lx.fail("expected an action label", t.span);
    return sFm(id == "1" ? fOne(l.act) : fPreOf(l.act));
  }
  return sFm(fAtom(id));
}

StructurePtr p_semi(Lexer& lx, const Declarations& decls) {
  StructurePtr s = p_sprim(lx, decls);
  while (lx.at_punct(";")) {
    lx.next();
    s = sSemi(s, p_sprim(lx, decls));
  }
  return s;
}

StructurePtr p_structure(Lexer& lx, const Declarations& decls) {
  StructurePtr s = p_semi(lx, decls);
  if (lx.at_punct(">")) {
    lx.next();
    return sGt(s, p_semi(lx, decls));
  }
  if (lx.at_punct("<")) {
    lx.next();
    return sLt(s, p_semi(lx, decls));
  }
  return s;
}

Sequent p_sequent(Lexer& lx, const Declarations& decls) {
  StructurePtr a = p_structure(lx, decls);
  lx.expect_punct("|-");
  StructurePtr s = p_structure(lx, decls);
  return {a, s};
}

// ---------------------------------------------------------------------------
// Proof s-expressions

ProofTreePtr p_proof(Lexer& lx, const Declarations& decls) {
  lx.expect_punct("(");
  std::string name = lx.lex_rule_name();
  if (lx.peek().kind != Tok::DQuoted)
    lx.fail("expected a double-quoted sequent", lx.peek().span);
  Token t = lx.next();
  Lexer inner(t.text);
  Sequent seq = p_sequent(inner, decls);
  if (inner.peek().kind != Tok::End)
    lx.fail("trailing input inside quoted sequent", t.span);
  auto node = std::make_shared<ProofTree>();
  node->rule = name;
  node->conclusion = seq;
  while (lx.at_punct("(")) node->children.push_back(p_proof(lx, decls));
  lx.expect_punct(")");
  return node;
}

// ---------------------------------------------------------------------------
// Declarations preamble

FormulaPtr parse_formula_full(const std::string& text,
                              const Declarations& decls) {
  Lexer lx(text);
  FormulaPtr f = p_formula(lx, decls);
  if (lx.peek().kind != Tok::End) lx.fail_here("trailing input");
  return f;
}

Declarations p_declarations(Lexer& lx, size_t* consumed) {
  Declarations decls;
  // Preconditions may mention agents/actions, so their text is parsed after
  // the whole preamble is read.
  std::vector<std::pair<std::string, std::string>> pre_raw;  // "act/state", txt
  for (;;) {
    lx.skip_ws();
    if (consumed) *consumed = lx.pos;
    const Token& t = lx.peek();
    if (t.kind != Tok::Ident || (t.text != "agent" && t.text != "action"))
      break;
    if (t.text == "agent") {
      lx.next();
      std::string n = lx.expect_ident("agent name");
      lx.expect_punct(";");
      decls.agents.push_back(Agent{n});
      continue;
    }
    lx.next();
    ActionStructure act;
    Token name_tok = lx.peek();
    act.base = lx.expect_ident("action name");
    lx.expect_punct("{");
    while (!lx.eat_punct("}")) {
      Token kt = lx.peek();
      std::string key = lx.expect_ident("declaration item");
      if (key == "states") {
        lx.expect_punct(":");
        while (lx.peek().kind == Tok::Ident)
          act.states.push_back(lx.next().text);
        lx.expect_punct(";");
      } else if (key == "designated") {
        lx.expect_punct(":");
        act.designated = lx.expect_ident("state");
        lx.expect_punct(";");
      } else if (key == "pre") {
        lx.expect_punct(":");
        do {
          std::string st = lx.expect_ident("state");
          lx.expect_punct("=");
          if (lx.peek().kind != Tok::DQuoted)
            lx.fail("expected quoted precondition formula", lx.peek().span);
          pre_raw.emplace_back(act.base + "/" + st, lx.next().text);
        } while (lx.eat_punct(","));
        lx.expect_punct(";");
      } else if (key == "rel") {
        std::string agent = lx.expect_ident("agent name");
        lx.expect_punct(":");
        do {
          std::string from = lx.expect_ident("state");
          lx.expect_punct("->");
          std::string to = lx.expect_ident("state");
          act.rels[agent].emplace_back(from, to);
        } while (lx.eat_punct(","));
        lx.expect_punct(";");
      } else {
        lx.fail("unknown declaration item '" + key + "'", kt.span);
      }
    }
    std::sort(act.states.begin(), act.states.end());
    act.states.erase(std::unique(act.states.begin(), act.states.end()),
                     act.states.end());
    if (act.states.empty()) lx.fail("action has no states", name_tok.span);
    if (std::find(act.states.begin(), act.states.end(), act.designated) ==
        act.states.end())
      lx.fail("designated state is not a state", name_tok.span);
    decls.actions[act.base] = act;
    lx.skip_ws();
    if (consumed) *consumed = lx.pos;
  }
  for (const auto& [key, txt] : pre_raw) {
    auto slash = key.find('/');
    std::string base = key.substr(0, slash), st = key.substr(slash + 1);
    decls.actions.at(base).pre[st] = parse_formula_full(txt, decls);
  }
  // Every state needs a precondition.
  for (const auto& [base, act] : decls.actions)
    for (const auto& st : act.states)
      if (!act.pre.count(st))
        lx.fail_here("action '" + base + "' state '" + st +
                     "' has no precondition");
  return decls;
}

// ---------------------------------------------------------------------------
// Rendering helpers

std::string label_str(const Agent& a) { return a.name; }

std::string label_str(const ActionLabel& l, const Declarations* decls) {
  if (l.state.empty()) return l.base;
  if (decls) {
    const ActionStructure* a = decls->find_action(l.base);
    if (a && a->designated == l.state) return l.base;
  }
  return l.base + "@" + l.state;
}

// Formula precedence levels: arrows 1, | 2, & 3, modalities 4, primary 5.
int flevel(FK k) {
  switch (k) {
    case FK::Imp: case FK::LImp: case FK::CoImp: case FK::LCoImp: return 1;
    case FK::Or: return 2;
    case FK::And: return 3;
    case FK::Dia: case FK::Box: case FK::AdjDia: case FK::AdjBox:
    case FK::DDia: case FK::DBox: case FK::AdjDDia: case FK::AdjDBox:
      return 4;
    default: return 5;
  }
}

void rf(const FormulaPtr& f, const Declarations* decls, int min,
        std::string& out) {
  int lv = flevel(f->kind);
  bool paren = lv < min;
  if (paren) out += "(";
  switch (f->kind) {
    case FK::Atom: out += f->name; break;
    case FK::FVar: out += f->name; break;
    case FK::Top: out += "T"; break;
    case FK::Bot: out += "F"; break;
    case FK::One: out += "1[" + label_str(f->act, decls) + "]"; break;
    case FK::PreOf: out += "Pre[" + label_str(f->act, decls) + "]"; break;
    case FK::And:
      rf(f->lhs, decls, 3, out);
      out += " & ";
      rf(f->rhs, decls, 4, out);
      break;
    case FK::Or:
      rf(f->lhs, decls, 2, out);
      out += " | ";
      rf(f->rhs, decls, 3, out);
      break;
    case FK::Imp: case FK::LImp: case FK::CoImp: case FK::LCoImp: {
      const char* op = f->kind == FK::Imp ? " -> "
                       : f->kind == FK::LImp ? " <- "
                       : f->kind == FK::CoImp ? " *> "
                                              : " <* ";
      rf(f->lhs, decls, 2, out);
      out += op;
      rf(f->rhs, decls, 1, out);
      break;
    }
    case FK::Dia: case FK::AdjDia:
      out += "<" + label_str(f->agent) + ">";
      if (f->kind == FK::AdjDia) out += "^";
      rf(f->lhs, decls, 4, out);
      break;
    case FK::Box: case FK::AdjBox:
      out += "[" + label_str(f->agent) + "]";
      if (f->kind == FK::AdjBox) out += "^";
      rf(f->lhs, decls, 4, out);
      break;
    case FK::DDia: case FK::AdjDDia:
      out += "<" + label_str(f->act, decls) + ">";
      if (f->kind == FK::AdjDDia) out += "^";
      rf(f->lhs, decls, 4, out);
      break;
    case FK::DBox: case FK::AdjDBox:
      out += "[" + label_str(f->act, decls) + "]";
      if (f->kind == FK::AdjDBox) out += "^";
      rf(f->lhs, decls, 4, out);
      break;
  }
  if (paren) out += ")";
}

// Structure levels: > and < 0, ; 1, proxies 2, leaves 3.
int slevel(SK k) {
  switch (k) {
    case SK::Gt: case SK::Lt: return 0;
    case SK::Semi: return 1;
    case SK::Prox: case SK::AdjProx: case SK::DProx: case SK::AdjDProx:
      return 2;
    default: return 3;
  }
}

void rs(const StructurePtr& s, const Declarations* decls, int min,
        std::string& out) {
  int lv = slevel(s->kind);
  bool paren = lv < min;
  if (paren) out += "(";
  switch (s->kind) {
    case SK::Fm: {
      // Quote every formula leaf; the boundary stays unambiguous.
      out += "'";
      rf(s->fm, decls, 0, out);
      out += "'";
      break;
    }
    case SK::I: out += "I"; break;
    case SK::Phi: out += "Phi[" + label_str(s->act, decls) + "]"; break;
    case SK::SVar: out += s->name; break;
    case SK::Semi:
      rs(s->lhs, decls, 1, out);
      out += " ; ";
      rs(s->rhs, decls, 2, out);
      break;
    case SK::Gt: case SK::Lt:
      rs(s->lhs, decls, 1, out);
      out += s->kind == SK::Gt ? " > " : " < ";
      rs(s->rhs, decls, 1, out);
      break;
    case SK::Prox: case SK::AdjProx:
      out += "{" + label_str(s->agent) + "}";
      if (s->kind == SK::AdjProx) out += "^";
      rs(s->lhs, decls, 2, out);
      break;
    case SK::DProx: case SK::AdjDProx:
      out += "{" + label_str(s->act, decls) + "}";
      if (s->kind == SK::AdjDProx) out += "^";
      rs(s->lhs, decls, 2, out);
      break;
  }
  if (paren) out += ")";
}

void rp(const ProofTree& p, const Declarations* decls, int indent,
        std::string& out) {
  out.append(static_cast<size_t>(indent), ' ');
  out += "(" + p.rule + " \"" + render(p.conclusion, decls) + "\"";
  for (const auto& c : p.children) {
    out += "\n";
    rp(*c, decls, indent + 2, out);
  }
  out += ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

FormulaPtr parse_formula(const std::string& text, const Declarations& decls) {
  return parse_formula_full(text, decls);
}

StructurePtr parse_structure(const std::string& text,
                             const Declarations& decls) {
  Lexer lx(text);
  StructurePtr s = p_structure(lx, decls);
  if (lx.peek().kind != Tok::End) lx.fail_here("trailing input");
  return s;
}

Sequent parse_sequent(const std::string& text, const Declarations& decls) {
  Lexer lx(text);
  Sequent s = p_sequent(lx, decls);
  if (lx.peek().kind != Tok::End) lx.fail_here("trailing input");
  return s;
}

ProofTreePtr parse_proof(const std::string& text, const Declarations& decls) {
  Lexer lx(text);
  ProofTreePtr p = p_proof(lx, decls);
  if (lx.peek().kind != Tok::End) lx.fail_here("trailing input");
  return p;
}

Declarations parse_declarations(const std::string& text, size_t* consumed) {
  Lexer lx(text);
  return p_declarations(lx, consumed);
}

CorpusFile parse_corpus_file(const std::string& text) {
  CorpusFile out;
  size_t consumed = 0;
  out.decls = parse_declarations(text, &consumed);
  Lexer lx(text);
  lx.advance(consumed);
  for (;;) {
    lx.skip_ws();
    if (lx.pos >= text.size()) break;
    const Token& t = lx.peek();
    if (t.kind == Tok::Ident && t.text == "tags") {
      lx.next();
      lx.expect_punct(":");
      for (;;) {
        lx.skip_ws();
        char c = lx.pos < text.size() ? text[lx.pos] : ';';
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
        out.tags.push_back(lx.lex_rule_name());
      }
      lx.expect_punct(";");
      continue;
    }
    if (t.kind == Tok::Ident && t.text == "expect") {
      lx.next();
      lx.expect_punct(":");
      // The sequent occupies the rest of the line.
      lx.skip_ws();
      size_t start = lx.pos;
      while (lx.pos < text.size() && text[lx.pos] != '\n') lx.advance(1);
      Sequent seq =
          parse_sequent(text.substr(start, lx.pos - start), out.decls);
      lx.has_look = false;
      ProofTreePtr p = p_proof(lx, out.decls);
      out.items.push_back({seq, p});
      continue;
    }
    lx.fail("expected 'tags:', 'expect:' or end of file", t.span);
  }
  return out;
}

std::string render(const FormulaPtr& f, const Declarations* decls) {
  std::string out;
  rf(f, decls, 0, out);
  return out;
}

std::string render(const StructurePtr& s, const Declarations* decls) {
  std::string out;
  rs(s, decls, 0, out);
  return out;
}

std::string render(const Sequent& seq, const Declarations* decls) {
  return render(seq.ante, decls) + " |- " + render(seq.succ, decls);
}

std::string render(const ProofTree& p, const Declarations* decls) {
  std::string out;
  rp(p, decls, 0, out);
  return out;
}

std::string render_declarations(const Declarations& decls) {
  std::string out;
  for (const auto& a : decls.agents) out += "agent " + a.name + ";\n";
  for (const auto& [base, act] : decls.actions) {
    out += "action " + base + " { states:";
    for (const auto& st : act.states) out += " " + st;
    out += "; designated: " + act.designated + "; pre: ";
    bool first = true;
    for (const auto& st : act.states) {
      if (!first) out += ", ";
      first = false;
      out += st + " = \"" + render(act.pre.at(st)) + "\"";
    }
    out += ";";
    for (const auto& [agent, pairs] : act.rels) {
      out += " rel " + agent + ":";
      first = true;
      for (const auto& [from, to] : pairs) {
        out += first ? " " : ", ";
        first = false;
        out += from + "->" + to;
      }
      out += ";";
    }
    out += " }\n";
  }
  return out;
}

}  // namespace deak
