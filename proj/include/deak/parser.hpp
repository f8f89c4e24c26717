#ifndef DEAK_PARSER_HPP
#define DEAK_PARSER_HPP

// Bidirectional concrete syntax: formulas, structures, sequents, declaration
// preambles, s-expression proof files, and renderers (round-trip inverses).

#include "deak/proofs.hpp"

namespace deak {

struct SourceSpan {
  size_t start = 0, end = 0;
  int line = 1, col = 1;
};

struct ParseError : std::runtime_error {
  SourceSpan span;
  ParseError(const std::string& msg, SourceSpan s)
      : std::runtime_error(msg), span(s) {}
};

// ---------------------------------------------------------------------------
// Parsing (context-aware: needs the declared agents/actions to resolve
// modality and proxy indices)

FormulaPtr parse_formula(const std::string& text, const Declarations& decls);
StructurePtr parse_structure(const std::string& text,
                             const Declarations& decls);
Sequent parse_sequent(const std::string& text, const Declarations& decls);

// One s-expression `(<RuleName> "<sequent>" <child>*)`.
ProofTreePtr parse_proof(const std::string& text, const Declarations& decls);

// Preamble of `agent <id>;` and `action <id> { ... }` items; parses until the
// first token that starts neither, returning the consumed byte count.
Declarations parse_declarations(const std::string& text,
                                size_t* consumed = nullptr);

// A corpus file: declarations preamble, optional `tags: <id>+;` line, then
// one or more proof items each introduced by an `expect:` line holding the
// end sequent (to end of line) and followed by the proof s-expression.
struct CorpusFile {
  Declarations decls;
  std::vector<std::string> tags;
  struct Item {
    Sequent expect;
    ProofTreePtr proof;
  };
  std::vector<Item> items;
};

CorpusFile parse_corpus_file(const std::string& text);

// ---------------------------------------------------------------------------
// Rendering (canonical spacing; parse(render(v)) == v). When `decls` is
// given, action labels designating the default state render without the
// `@state` suffix.

std::string render(const FormulaPtr& f, const Declarations* decls = nullptr);
std::string render(const StructurePtr& s, const Declarations* decls = nullptr);
std::string render(const Sequent& seq, const Declarations* decls = nullptr);
std::string render(const ProofTree& p, const Declarations* decls = nullptr);
std::string render_declarations(const Declarations& decls);

}  // namespace deak

#endif  // DEAK_PARSER_HPP
