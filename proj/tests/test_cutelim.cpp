#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deak/cutelim.hpp"
#include "deak/parser.hpp"

using namespace deak;

namespace {

Declarations test_decls() {
  return parse_declarations(
      "agent a;\n"
      "action alpha { states: k; designated: k; pre: k = \"p\"; "
      "rel a: k->k; }\n");
}

int count_cuts(const ProofTree& p) {
  int n = p.rule == "Cut" ? 1 : 0;
  for (const auto& c : p.children) n += count_cuts(*c);
  return n;
}

// A principal conjunction cut: both premises introduce p & q.
ProofTreePtr and_cut(const Declarations& d) {
  return parse_proof(
      "(Cut \"'p' ; 'q' |- 'p'\"\n"
      "  (and_R \"'p' ; 'q' |- 'p & q'\"\n"
      "    (Id \"'p' |- 'p'\") (Id \"'q' |- 'q'\"))\n"
      "  (and_L \"'p & q' |- 'p'\"\n"
      "    (E_L \"'p' ; 'q' |- 'p'\"\n"
      "      (disp1_rev \"'q' ; 'p' |- 'p'\"\n"
      "        (W1_L \"'q' |- 'p' < 'p'\"\n"
      "          (Id \"'p' |- 'p'\"))))))",
      d);
}

}  // namespace

TEST_CASE("principal reduction: conjunction splits into two smaller cuts") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  auto cut = and_cut(d);
  REQUIRE(check(*cut, c, d).ok);
  auto red = reduce_principal(*cut, c, d);
  CHECK(check(*red, c, d).ok);
  CHECK(equal(red->conclusion, cut->conclusion));
  // Exactly two residual cuts, both on atoms (proper subformulas of p & q).
  CHECK(count_cuts(*red) == 2);
  std::function<void(const ProofTree&)> scan = [&](const ProofTree& n) {
    if (n.rule == "Cut") {
      REQUIRE(n.children[0]->conclusion.succ->kind == SK::Fm);
      CHECK(n.children[0]->conclusion.succ->fm->kind == FK::Atom);
    }
    for (const auto& ch : n.children) scan(*ch);
  };
  scan(*red);
}

TEST_CASE("principal reduction: shortcut and axiom closure") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  // Identity-against-identity closes to a single axiom.
  auto idcut = parse_proof(
      "(Cut \"'p' |- 'p'\" (Id \"'p' |- 'p'\") (Id \"'p' |- 'p'\"))", d);
  REQUIRE(check(*idcut, c, d).ok);
  auto red = reduce_principal(*idcut, c, d);
  CHECK(red->children.empty());
  CHECK(equal(red->conclusion, idcut->conclusion));
  // Atom-axiom against atom-axiom closes to the combined proxy string.
  auto atomcut = parse_proof(
      "(Cut \"{alpha}'p' |- {alpha}^'p'\"\n"
      "  (atom \"{alpha}'p' |- 'p'\")\n"
      "  (atom \"'p' |- {alpha}^'p'\"))",
      d);
  REQUIRE(check(*atomcut, c, d).ok);
  auto red2 = reduce_principal(*atomcut, c, d);
  CHECK(red2->rule == "atom");
  CHECK(check(*red2, c, d).ok);
  CHECK(equal(red2->conclusion, atomcut->conclusion));
}

TEST_CASE("eliminate: principal cut becomes cut-free") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  auto cut = and_cut(d);
  EliminateResult res = eliminate(*cut, c, d);
  CHECK(res.complete);
  CHECK(is_cut_free(*res.proof));
  CHECK(equal(res.proof->conclusion, cut->conclusion));
  CHECK(check(*res.proof, c, d).ok);
  CHECK(res.max_complexity == 3);  // p & q
}

TEST_CASE("eliminate: cut-free input is returned unchanged") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  auto proof = parse_proof("(Id \"'p' |- 'p'\")", d);
  EliminateResult res = eliminate(*proof, c, d);
  CHECK(res.complete);
  CHECK(res.cuts_eliminated == 0);
  CHECK(equal(res.proof->conclusion, proof->conclusion));
}

TEST_CASE("eliminate: parametric cut against a weakened premise") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  // The right occurrence of p is introduced by weakening; elimination pushes
  // the cut away entirely.
  auto cut = parse_proof(
      "(Cut \"'p' |- 'T'\"\n"
      "  (Id \"'p' |- 'p'\")\n"
      "  (IW_L \"'p' |- 'T'\" (top_R \"I |- 'T'\")))",
      d);
  REQUIRE(check(*cut, c, d).ok);
  EliminateResult res = eliminate(*cut, c, d);
  CHECK(res.complete);
  CHECK(is_cut_free(*res.proof));
  CHECK(equal(res.proof->conclusion, cut->conclusion));
  CHECK(check(*res.proof, c, d).ok);
}

TEST_CASE("eliminate: undisplayed axiom occurrence uses a display-equivalent "
          "axiom") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  // The succedent p of the left premise traces into an atom axiom where it
  // sits under a dynamic proxy; the parametric stage swaps in the displayed
  // variant of the axiom.
  auto cut = parse_proof(
      "(Cut \"{alpha}^{alpha}{alpha}^'p' |- {alpha}^'p'\"\n"
      "  (disp_d2 \"{alpha}^{alpha}{alpha}^'p' |- 'p'\"\n"
      "    (atom \"{alpha}{alpha}^'p' |- {alpha}'p'\"))\n"
      "  (atom \"'p' |- {alpha}^'p'\"))",
      d);
  REQUIRE(check(*cut, c, d).ok);
  EliminateResult res = eliminate(*cut, c, d);
  CHECK(res.complete);
  CHECK(is_cut_free(*res.proof));
  CHECK(equal(res.proof->conclusion, cut->conclusion));
  CHECK(check(*res.proof, c, d).ok);
}

TEST_CASE("eliminate: nested cuts through modal introductions") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  auto cut = parse_proof(
      "(Cut \"{a}'p' |- '<a>p'\"\n"
      "  (dia_R \"{a}'p' |- '<a>p'\" (Id \"'p' |- 'p'\"))\n"
      "  (dia_L \"'<a>p' |- '<a>p'\"\n"
      "    (dia_R \"{a}'p' |- '<a>p'\" (Id \"'p' |- 'p'\"))))",
      d);
  REQUIRE(check(*cut, c, d).ok);
  EliminateResult res = eliminate(*cut, c, d);
  CHECK(res.complete);
  CHECK(is_cut_free(*res.proof));
  CHECK(equal(res.proof->conclusion, cut->conclusion));
}

TEST_CASE("eliminate: fuel exhaustion reports incompleteness") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  auto cut = and_cut(d);
  EliminateResult res = eliminate(*cut, c, d, 1);
  CHECK(!res.complete);
  CHECK(!res.diagnostics.empty());
}

TEST_CASE("lint: the primary calculus is quasi proper") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  LintReport rep = lint(c, d);
  for (const char* cond :
       {"C1", "C2", "C3", "C4", "C5'", "C5''", "C6", "C7", "C8", "C8'"}) {
    const Verdict* v = rep.find(cond);
    REQUIRE(v != nullptr);
    CHECK(v->state != Verdict::Fail);
  }
  CHECK(rep.find("C8")->state == Verdict::Certified);
  CHECK(rep.find("C8'")->state == Verdict::Certified);
  CHECK(rep.quasi_proper());
  // Wansing criteria: everything holds except segregation, whose witness is
  // the atom axiom (principal atoms inside proxy strings).
  CHECK(rep.find("separation")->state == Verdict::Pass);
  CHECK(rep.find("weak-symmetry")->state == Verdict::Pass);
  CHECK(rep.find("symmetry")->state == Verdict::Pass);
  CHECK(rep.find("weak-explicitness")->state == Verdict::Pass);
  CHECK(rep.find("explicitness")->state == Verdict::Pass);
  const Verdict* seg = rep.find("segregation");
  REQUIRE(seg != nullptr);
  CHECK(seg->state == Verdict::Fail);
  REQUIRE(!seg->witnesses.empty());
  CHECK(seg->witnesses.front().first == "atom");
}

TEST_CASE("lint: the legacy calculus violates the conditions") {
  auto d = test_decls();
  Calculus c = builtin_deak_legacy(d);
  LintReport rep = lint(c, d);
  CHECK(!rep.quasi_proper());
  // C1 fails: the precondition formula in the premise of the old reduction
  // rule is not a subformula of its conclusion.
  const Verdict* c1 = rep.find("C1");
  REQUIRE(c1 != nullptr);
  REQUIRE(c1->state == Verdict::Fail);
  CHECK(c1->witnesses.front().first.find("reduce") != std::string::npos);
  // C6/C7 fail: the swap rules carry a restricted (non-schematic) parameter.
  const Verdict* c6 = rep.find("C6");
  REQUIRE(c6->state == Verdict::Fail);
  CHECK(c6->witnesses.front().first.find("swap-in") != std::string::npos);
  CHECK(rep.find("C7")->state == Verdict::Fail);
  // C5' fails: the reverse rules do not display their principal formula.
  const Verdict* c5 = rep.find("C5'");
  REQUIRE(c5->state == Verdict::Fail);
  CHECK(c5->witnesses.front().first.find("reverse") != std::string::npos);
}

TEST_CASE("lint: report text has one line per condition") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  LintReport rep = lint(c, d);
  std::string text = rep.to_text();
  CHECK(std::count(text.begin(), text.end(), '\n') == 16);
  CHECK(text.find("C1 PASS") != std::string::npos);
  CHECK(text.find("segregation FAIL atom") != std::string::npos);
}
