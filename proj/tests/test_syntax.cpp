#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deak/parser.hpp"
#include "deak/syntax.hpp"

using namespace deak;

namespace {

Declarations test_decls() {
  return parse_declarations(
      "agent a;\n"
      "action alpha { states: k; designated: k; pre: k = \"p\"; "
      "rel a: k->k; }\n");
}

}  // namespace

TEST_CASE("polarity: root positions") {
  auto d = test_decls();
  Sequent s = parse_sequent("X |- Y > Z", d);
  CHECK(polarity_of(s, {Path::Ante, {}}) == Polarity::Precedent);
  CHECK(polarity_of(s, {Path::Succ, {}}) == Polarity::Succedent);
  // Left child of > flips: Y is in precedent position.
  CHECK(polarity_of(s, {Path::Succ, {0}}) == Polarity::Precedent);
  CHECK(polarity_of(s, {Path::Succ, {1}}) == Polarity::Succedent);
}

TEST_CASE("polarity: flip rules along a path") {
  auto d = test_decls();
  Sequent s = parse_sequent("{alpha}('a0' > 'b0') |- I", d);
  // Proxy preserves, left child of > flips precedent to succedent.
  CHECK(polarity_of(s, {Path::Ante, {0, 0}}) == Polarity::Succedent);
  CHECK(polarity_of(s, {Path::Ante, {0, 1}}) == Polarity::Precedent);
  CHECK_THROWS_AS(polarity_of(s, {Path::Succ, {0}}), InvalidPath);
}

TEST_CASE("polarity: left child of < flips") {
  auto d = test_decls();
  Sequent s = parse_sequent("X < Y |- Z", d);
  CHECK(polarity_of(s, {Path::Ante, {0}}) == Polarity::Precedent);
  CHECK(polarity_of(s, {Path::Ante, {1}}) == Polarity::Succedent);
}

TEST_CASE("translate: Table rows") {
  auto d = test_decls();
  StructurePtr s = parse_structure("'p' ; 'q'", d);
  CHECK(equal(translate(s, Polarity::Precedent),
              parse_formula("p & q", d)));
  CHECK(equal(translate(s, Polarity::Succedent),
              parse_formula("p | q", d)));
  CHECK(equal(translate(sI(), Polarity::Precedent), fTop()));
  CHECK(equal(translate(sI(), Polarity::Succedent), fBot()));
  StructurePtr adj = parse_structure("{alpha}^'p'", d);
  CHECK(translate(adj, Polarity::Succedent)->kind == FK::AdjDBox);
  CHECK(translate(adj, Polarity::Precedent)->kind == FK::AdjDDia);
}

TEST_CASE("translate: arrows and Phi") {
  auto d = test_decls();
  StructurePtr s = parse_structure("'p' > 'q'", d);
  CHECK(equal(translate(s, Polarity::Succedent), parse_formula("p -> q", d)));
  CHECK(translate(s, Polarity::Precedent)->kind == FK::CoImp);
  StructurePtr l = parse_structure("'p' < 'q'", d);
  CHECK(translate(l, Polarity::Succedent)->kind == FK::LImp);
  CHECK(translate(l, Polarity::Precedent)->kind == FK::LCoImp);
  CHECK(equal(translate(sPhi(ActionLabel{"alpha", "k"}), Polarity::Precedent),
              fOne(ActionLabel{"alpha", "k"})));
  CHECK_THROWS_AS(translate(sPhi(ActionLabel{"alpha", "k"}),
                            Polarity::Succedent),
                  PhiInSuccedent);
}

TEST_CASE("substitute: leaves") {
  auto d = test_decls();
  StructurePtr s = parse_structure("'p' ; 'p'", d);
  StructurePtr r = substitute(s, {{0}}, sI());
  CHECK(equal(r, parse_structure("I ; 'p'", d)));
  // Root replacement.
  StructurePtr root = substitute(parse_structure("'p'", d), {{}},
                                 parse_structure("X ; Y", d));
  CHECK(equal(root, parse_structure("X ; Y", d)));
  // Targeted leaves must all hold the same formula.
  StructurePtr two = parse_structure("{alpha}('p' ; 'q')", d);
  CHECK_THROWS_AS(substitute(two, {{0, 0}, {0, 1}}, sI()), NonFormulaTarget);
  // Identity cases.
  CHECK(equal(substitute(s, {}, sI()), s));
  CHECK(equal(substitute(s, {{0}}, sFm(fAtom("p"))), s));
}

TEST_CASE("subformulas") {
  auto d = test_decls();
  auto p = parse_formula("p", d);
  CHECK(subformulas(p).size() == 1);
  auto pq = parse_formula("p & q", d);
  auto set = subformulas(pq);
  CHECK(set.size() == 3);
  CHECK(set.count(parse_formula("p", d)));
  auto md = parse_formula("<alpha>(p -> q)", d);
  auto set2 = subformulas(md);
  CHECK(set2.size() == 4);
  CHECK(set2.count(parse_formula("p -> q", d)));
  CHECK(set2.count(md));
  // Purely syntactic: 1[alpha] is a leaf.
  CHECK(subformulas(parse_formula("1[alpha]", d)).size() == 1);
}

TEST_CASE("size_of bounds subformulas") {
  auto d = test_decls();
  for (const char* txt : {"p", "p & q", "<a>p | [a]q", "1[alpha] -> p"}) {
    auto f = parse_formula(txt, d);
    CHECK(static_cast<int>(subformulas(f).size()) <= size_of(f));
  }
}

TEST_CASE("paths: at and enumeration") {
  auto d = test_decls();
  Sequent s = parse_sequent("'p' ; I |- {a}'q'", d);
  CHECK(at(s, {Path::Ante, {0}})->kind == SK::Fm);
  CHECK(at(s, {Path::Succ, {0}})->kind == SK::Fm);
  CHECK_THROWS_AS(at(s, Path{Path::Succ, {0, 0}}), InvalidPath);
  auto leaves = formula_leaf_paths(s);
  CHECK(leaves.size() == 2);
  auto all = all_structure_paths(s);
  CHECK(all.size() == 5);  // Semi, p, I, proxy, q
}

TEST_CASE("successors and variants") {
  auto d = parse_declarations(
      "agent a;\n"
      "action m { states: k l; designated: k; pre: k = \"p\", l = \"q\"; "
      "rel a: k->l, k->k; }\n");
  const ActionStructure* m = d.find_action("m");
  REQUIRE(m != nullptr);
  auto succ = d.successors(m->label(), Agent{"a"});
  REQUIRE(succ.size() == 2);
  CHECK(succ[0].state == "k");  // sorted by state id
  CHECK(succ[1].state == "l");
  CHECK(d.all_variants().size() == 2);
  CHECK(equal(d.pre_of({"m", "l"}), fAtom("q")));
}
