#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "deak/parser.hpp"

using namespace deak;

namespace {

Declarations test_decls() {
  return parse_declarations(
      "agent a;\n"
      "action alpha { states: k; designated: k; pre: k = \"p\"; "
      "rel a: k->k; }\n"
      "action m { states: k l; designated: k; pre: k = \"p\", l = \"q\"; "
      "rel a: k->k, k->l; }\n");
}

// Random formula generator for the round-trip property.
FormulaPtr random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 13);
  switch (pick(rng)) {
    case 0: return fAtom("p");
    case 1: return fAtom("q");
    case 2: return fTop();
    case 3: return fBot();
    case 4: return fOne({"alpha", "k"});
    case 5: return fAnd(random_formula(rng, depth - 1),
                        random_formula(rng, depth - 1));
    case 6: return fOr(random_formula(rng, depth - 1),
                       random_formula(rng, depth - 1));
    case 7: return fImp(random_formula(rng, depth - 1),
                        random_formula(rng, depth - 1));
    case 8: return fLImp(random_formula(rng, depth - 1),
                         random_formula(rng, depth - 1));
    case 9: return fCoImp(random_formula(rng, depth - 1),
                          random_formula(rng, depth - 1));
    case 10: return fLCoImp(random_formula(rng, depth - 1),
                            random_formula(rng, depth - 1));
    case 11: return fDia(Agent{"a"}, random_formula(rng, depth - 1));
    case 12: return fAdjBox(Agent{"a"}, random_formula(rng, depth - 1));
    default: return fDDia({"m", "l"}, random_formula(rng, depth - 1));
  }
}

StructurePtr random_structure(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  switch (pick(rng)) {
    case 0: return sI();
    case 1: return sFm(random_formula(rng, 1));
    case 2: return sPhi({"alpha", "k"});
    case 3: return sSemi(random_structure(rng, depth - 1),
                         random_structure(rng, depth - 1));
    case 4: return sGt(random_structure(rng, depth - 1),
                       random_structure(rng, depth - 1));
    case 5: return sLt(random_structure(rng, depth - 1),
                       random_structure(rng, depth - 1));
    case 6: return sProx(Agent{"a"}, random_structure(rng, depth - 1));
    case 7: return sAdjProx(Agent{"a"}, random_structure(rng, depth - 1));
    case 8: return sDProx({"alpha", "k"}, random_structure(rng, depth - 1));
    default: return sAdjDProx({"m", "k"}, random_structure(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("formula precedence") {
  auto d = test_decls();
  CHECK(equal(parse_formula("p & q | r", d),
              fOr(fAnd(fAtom("p"), fAtom("q")), fAtom("r"))));
  CHECK(equal(parse_formula("p -> q -> r", d),
              fImp(fAtom("p"), fImp(fAtom("q"), fAtom("r")))));
  CHECK(equal(parse_formula("<alpha>[a]p", d),
              fDDia({"alpha", "k"}, fBox(Agent{"a"}, fAtom("p")))));
  CHECK(equal(parse_formula("(p | q) & r", d),
              fAnd(fOr(fAtom("p"), fAtom("q")), fAtom("r"))));
  CHECK(parse_formula("<a>^p", d)->kind == FK::AdjDia);
  CHECK(parse_formula("[m@l]^p", d)->kind == FK::AdjDBox);
  CHECK(parse_formula("[m@l]^p", d)->act == ActionLabel{"m", "l"});
  // Omitted state resolves to the designated state.
  CHECK(parse_formula("<m>p", d)->act == ActionLabel{"m", "k"});
}

TEST_CASE("structure grammar") {
  auto d = test_decls();
  CHECK(equal(parse_structure("I ; {a} 'p'", d),
              sSemi(sI(), sProx(Agent{"a"}, sFm(fAtom("p"))))));
  CHECK(equal(parse_structure("Phi[alpha] > 'p'", d),
              sGt(sPhi({"alpha", "k"}), sFm(fAtom("p")))));
  CHECK(equal(parse_structure("X ; Y ; Z", d),
              sSemi(sSemi(sVar("X"), sVar("Y")), sVar("Z"))));
  // Bare connective-free formulas are Fm leaves.
  CHECK(equal(parse_structure("p", d), sFm(fAtom("p"))));
  CHECK(equal(parse_structure("1[alpha]", d), sFm(fOne({"alpha", "k"}))));
}

TEST_CASE("sequents") {
  auto d = test_decls();
  Sequent s = parse_sequent("'p' |- 'p'", d);
  CHECK(equal(s.ante, sFm(fAtom("p"))));
  Sequent at = parse_sequent("{alpha}'p' |- {alpha}'p'", d);
  CHECK(at.ante->kind == SK::DProx);
  Sequent ii = parse_sequent("I |- I", d);
  CHECK(ii.ante->kind == SK::I);
}

TEST_CASE("parse errors carry spans") {
  auto d = test_decls();
  CHECK_THROWS_AS(parse_formula("p &", d), ParseError);
  CHECK_THROWS_AS(parse_formula("<bogus>p", d), ParseError);
  CHECK_THROWS_AS(parse_sequent("'p' |- ", d), ParseError);
  CHECK_THROWS_AS(parse_formula("p q", d), ParseError);
  try {
    parse_formula("p &\n& q", d);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.span.line == 2);
  }
}

TEST_CASE("proof s-expressions") {
  auto d = test_decls();
  auto leaf = parse_proof("(Id \"'p' |- 'p'\")", d);
  CHECK(leaf->rule == "Id");
  CHECK(leaf->children.empty());
  auto one = parse_proof(
      "(W1_L \"'q' |- 'p' < 'p'\" (Id \"'p' |- 'p'\"))", d);
  CHECK(one->rule == "W1_L");
  REQUIRE(one->children.size() == 1);
  CHECK(one->children[0]->rule == "Id");
  auto hyphen = parse_proof(
      "(swap-in_L \"X |- Y\" (balance \"X |- Y\"))", d);
  CHECK(hyphen->rule == "swap-in_L");
}

TEST_CASE("round-trip: golden strings") {
  auto d = test_decls();
  CHECK(render(parse_formula("p&q", d)) == "p & q");
  CHECK(render(sPhi({"alpha", "k"}), &d) == "Phi[alpha]");
  CHECK(render(parse_sequent("{alpha}'p' |- {alpha}'p'", d), &d) ==
        "{alpha}'p' |- {alpha}'p'");
  // Without declarations the designated state is spelled out.
  CHECK(render(sPhi({"alpha", "k"})) == "Phi[alpha@k]");
}

TEST_CASE("round-trip: random formulas and structures") {
  auto d = test_decls();
  std::mt19937 rng(20240817);
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = random_formula(rng, 4);
    CHECK(equal(parse_formula(render(f, &d), d), f));
  }
  for (int i = 0; i < 300; ++i) {
    StructurePtr s = random_structure(rng, 4);
    CHECK(equal(parse_structure(render(s, &d), d), s));
    Sequent seq{s, random_structure(rng, 3)};
    CHECK(equal(parse_sequent(render(seq, &d), d), seq));
  }
}

TEST_CASE("declarations round-trip") {
  auto d = test_decls();
  auto d2 = parse_declarations(render_declarations(d));
  CHECK(d2.agents.size() == 1);
  REQUIRE(d2.find_action("m") != nullptr);
  CHECK(d2.find_action("m")->states == d.find_action("m")->states);
  CHECK(equal(d2.pre_of({"m", "l"}), d.pre_of({"m", "l"})));
  CHECK(d2.successors({"m", "k"}, Agent{"a"}).size() == 2);
}

TEST_CASE("corpus file layout") {
  std::string text =
      "# comment line\n"
      "agent a;\n"
      "action alpha { states: k; designated: k; pre: k = \"p\"; "
      "rel a: k->k; }\n"
      "tags: display-example;\n"
      "expect: 'p' |- 'p'\n"
      "(Id \"'p' |- 'p'\")\n"
      "expect: I |- 'T'\n"
      "(top_R \"I |- 'T'\")\n";
  CorpusFile f = parse_corpus_file(text);
  CHECK(f.tags == std::vector<std::string>{"display-example"});
  REQUIRE(f.items.size() == 2);
  CHECK(equal(f.items[0].expect, parse_sequent("'p' |- 'p'", f.decls)));
  CHECK(f.items[1].proof->rule == "top_R");
}
