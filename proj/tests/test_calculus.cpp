#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "deak/calculus.hpp"
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

}  // namespace

TEST_CASE("rule set sanity") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  CHECK(c.find("Cut") != nullptr);
  CHECK(c.find("Id") != nullptr);
  CHECK(c.find("atom") != nullptr);
  CHECK(c.find("balance") != nullptr);
  CHECK(c.find("swap-out_L") != nullptr);
  CHECK(c.find("disp1_rev") != nullptr);  // invertible twin
  CHECK(c.find("gri_L") != nullptr);
  CHECK(c.find("old_reduce_L") == nullptr);
  Calculus ni = builtin_deak_prime(d, /*classical=*/false);
  CHECK(ni.find("gri_L") == nullptr);
  Calculus legacy = builtin_deak_legacy(d);
  CHECK(legacy.find("old_reduce_L") != nullptr);
  CHECK(legacy.find("reverse_R") != nullptr);
  CHECK(legacy.find("comp_L") == nullptr);
  CHECK(legacy.find("one_R") == nullptr);
  // Rule names unique.
  std::set<std::string> names;
  for (const auto& r : c.rules) CHECK(names.insert(r.name).second);
}

TEST_CASE("instantiate: structural shapes") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  Assignment a;
  a.svars["X"] = parse_structure("'p'", d);
  a.svars["Y"] = parse_structure("'q'", d);
  a.svars["Z"] = parse_structure("'p'", d);
  Inference w1 = instantiate(*c.find("W1_L"), a, d);
  CHECK(render(w1.premises.at(0), &d) == "'p' |- 'p'");
  CHECK(render(w1.conclusion, &d) == "'q' |- 'p' < 'p'");

  Assignment ac;
  ac.svars["X"] = parse_structure("'p'", d);
  ac.svars["Y"] = parse_structure("'p'", d);
  Inference cl = instantiate(*c.find("C_L"), ac, d);
  CHECK(render(cl.premises.at(0), &d) == "'p' ; 'p' |- 'p'");
  CHECK(render(cl.conclusion, &d) == "'p' |- 'p'");

  Assignment ab = ac;
  ab.dvars["?alpha"] = ActionLabel{"alpha", "k"};
  Inference bal = instantiate(*c.find("balance"), ab, d);
  CHECK(render(bal.premises.at(0), &d) == "'p' |- 'p'");
  CHECK(render(bal.conclusion, &d) == "{alpha}'p' |- {alpha}'p'");
}

TEST_CASE("axiom matching") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  CHECK(match_rule(*c.find("Id"), parse_sequent("'p' |- 'p'", d), d).size() ==
        1);
  // Id is atomic only.
  CHECK(match_rule(*c.find("Id"), parse_sequent("'p & q' |- 'p & q'", d), d)
            .empty());
  // atom accepts proxy-string-decorated atoms.
  CHECK(!match_rule(*c.find("atom"),
                    parse_sequent("{alpha}'p' |- {alpha}'p'", d), d)
             .empty());
  CHECK(!match_rule(*c.find("atom"),
                    parse_sequent("{alpha}{m}^'p' |- 'p'", d), d)
             .empty());
  // Mismatched atoms or non-action proxies are rejected.
  CHECK(match_rule(*c.find("atom"), parse_sequent("{alpha}'p' |- 'q'", d), d)
            .empty());
  CHECK(match_rule(*c.find("atom"), parse_sequent("{a}'p' |- 'p'", d), d)
            .empty());
  // One_R axiom.
  CHECK(!match_rule(*c.find("one_R"),
                    parse_sequent("Phi[alpha] |- '1[alpha]'", d), d)
             .empty());
}

TEST_CASE("match_rule: worked examples") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  auto asgs =
      match_rule(*c.find("E_L"), parse_sequent("'p' ; 'q' |- 'r'", d), d);
  REQUIRE(asgs.size() == 1);
  Inference inf = instantiate(*c.find("E_L"), asgs.front(), d);
  CHECK(render(inf.premises.at(0), &d) == "'q' ; 'p' |- 'r'");
  CHECK(match_rule(*c.find("and_R"), parse_sequent("'p' |- 'p'", d), d)
            .empty());
}

TEST_CASE("per-beta expansion") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  // Action m has two successors under agent a: m@k and m@l.
  Sequent concl = parse_sequent("{m}{a}X |- Y ; Y", d);
  auto asgs = match_rule(*c.find("swap-out_L"), concl, d);
  REQUIRE(asgs.size() == 1);
  Inference inf = instantiate(*c.find("swap-out_L"), asgs.front(), d);
  REQUIRE(inf.premises.size() == 2);
  CHECK(render(inf.premises[0], &d) == "{a}{m}X |- Y");
  CHECK(render(inf.premises[1], &d) == "{a}{m@l}X |- Y");
  CHECK(equal(inf.conclusion, concl));
  // The single-successor action yields one premise.
  Sequent concl1 = parse_sequent("{alpha}{a}X |- Y", d);
  auto asgs1 = match_rule(*c.find("swap-out_L"), concl1, d);
  REQUIRE(asgs1.size() == 1);
  Inference inf1 = instantiate(*c.find("swap-out_L"), asgs1.front(), d);
  REQUIRE(inf1.premises.size() == 1);
  CHECK(render(inf1.premises[0], &d) == "{a}{alpha}X |- Y");
}

TEST_CASE("swap-in binds beta in the conclusion") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  // swap-in_L conclusion: Phi_alpha ; {a}{beta}X |- Y with m a beta.
  Sequent concl = parse_sequent("Phi[m] ; {a}{m@l}X |- Y", d);
  auto asgs = match_rule(*c.find("swap-in_L"), concl, d);
  REQUIRE(asgs.size() == 1);
  Inference inf = instantiate(*c.find("swap-in_L"), asgs.front(), d);
  CHECK(render(inf.premises.at(0), &d) == "{m}{a}X |- Y");
  // A non-successor beta is rejected: alpha's relation never reaches m.
  Sequent bad = parse_sequent("Phi[alpha] ; {a}{m@l}X |- Y", d);
  CHECK(match_rule(*c.find("swap-in_L"), bad, d).empty());
}

TEST_CASE("Cut leaves its formula unbound at the conclusion") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  auto asgs = match_rule(*c.find("Cut"), parse_sequent("'p' |- 'q'", d), d);
  REQUIRE(asgs.size() == 1);
  CHECK(!asgs.front().fvars.count("A"));
  // match_inference binds it from the premises.
  std::vector<Sequent> prems{parse_sequent("'p' |- 'r'", d),
                             parse_sequent("'r' |- 'q'", d)};
  auto full = match_inference(*c.find("Cut"), parse_sequent("'p' |- 'q'", d),
                              prems, d);
  REQUIRE(full.size() == 1);
  CHECK(equal(full.front().fvars.at("A"), fAtom("r")));
}

TEST_CASE("legacy rules resolve Pre(alpha)") {
  auto d = test_decls();
  Calculus legacy = builtin_deak_legacy(d);
  // old_reduce_L premise: Pre(alpha) ; {alpha}A |- X. Pre(alpha) = p.
  Sequent concl = parse_sequent("{alpha}'q' |- X", d);
  auto asgs = match_rule(*legacy.find("old_reduce_L"), concl, d);
  REQUIRE(asgs.size() == 1);
  Inference inf = instantiate(*legacy.find("old_reduce_L"), asgs.front(), d);
  CHECK(render(inf.premises.at(0), &d) == "'p' ; {alpha}'q' |- X");
  // Matching a premise pins the action by its precondition formula.
  std::vector<Sequent> prems{parse_sequent("'p' ; {alpha}'q' |- X", d)};
  CHECK(match_inference(*legacy.find("old_reduce_L"), concl, prems, d).size() ==
        1);
  std::vector<Sequent> wrong{parse_sequent("'r' ; {alpha}'q' |- X", d)};
  CHECK(match_inference(*legacy.find("old_reduce_L"), concl, wrong, d)
            .empty());
  CHECK(!legacy.find("old_swap-in_L")->restricted.empty());
}

TEST_CASE("property: match after instantiate recovers the assignment") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  std::mt19937 rng(7);
  std::vector<StructurePtr> pool{
      parse_structure("'p'", d), parse_structure("I", d),
      parse_structure("'p' ; 'q'", d), parse_structure("{a}'p'", d),
      parse_structure("Phi[alpha] > 'q'", d)};
  for (const char* name :
       {"W1_L", "C_L", "E_R", "disp1", "disp3_rev", "mon_a_L", "comp_L",
        "reduce_R", "balance", "gri_L", "fs_d_R"}) {
    const RuleSchema* r = c.find(name);
    REQUIRE(r != nullptr);
    for (int trial = 0; trial < 20; ++trial) {
      Assignment a;
      for (const char* v : {"X", "Y", "Z", "W"})
        a.svars[v] = pool[rng() % pool.size()];
      a.avars["?a"] = Agent{"a"};
      a.dvars["?alpha"] = ActionLabel{"alpha", "k"};
      Inference inf = instantiate(*r, a, d);
      auto asgs = match_rule(*r, inf.conclusion, d);
      bool found = false;
      for (const auto& got : asgs) {
        bool same = true;
        for (const auto& [k, v] : got.svars)
          if (!equal(a.svars.at(k), v)) same = false;
        if (same) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("property: parametric re-instantiation never fails (C6/C7)") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  std::mt19937 rng(11);
  std::vector<StructurePtr> pool{
      parse_structure("'q'", d), parse_structure("I ; I", d),
      parse_structure("{m}^('p' < I)", d)};
  for (const auto& r : c.rules) {
    if (r.special != SpecialForm::None || r.name == "Cut") continue;
    // Build a canonical assignment, instantiate, then replace every
    // structure metavariable by a random structure and re-instantiate.
    Assignment a;
    for (const char* v : {"X", "Y", "Z", "W"})
      a.svars[v] = parse_structure("'p'", d);
    a.fvars["A"] = fAtom("p");
    a.fvars["B"] = fAtom("q");
    a.fvars["p"] = fAtom("p");
    a.avars["?a"] = Agent{"a"};
    a.dvars["?alpha"] = ActionLabel{"m", "k"};
    a.dvars["?beta"] = ActionLabel{"m", "l"};
    Inference base = instantiate(r, a, d);
    for (auto& [k, v] : a.svars) v = pool[rng() % pool.size()];
    Inference again = instantiate(r, a, d);
    // Same shape, still matched by its own schema.
    CHECK(match_rule(r, again.conclusion, d).size() >= 1);
    CHECK(base.premises.size() == again.premises.size());
  }
}

TEST_CASE("congruent occurrences") {
  auto d = test_decls();
  Calculus c = builtin_deak_prime(d);
  // Contraction: the conclusion's X maps to both premise copies.
  Sequent concl = parse_sequent("'p' |- 'q'", d);
  auto asgs = match_rule(*c.find("C_L"), concl, d);
  REQUIRE(asgs.size() == 1);
  auto occs = congruent_occurrences(*c.find("C_L"), asgs.front(), d,
                                    {Path::Ante, {}});
  REQUIRE(occs.size() == 2);
  CHECK(occs[0].second.steps == std::vector<int>{0});
  CHECK(occs[1].second.steps == std::vector<int>{1});
  // Weakening: the fresh Y has no ancestors.
  auto w = match_rule(*c.find("W1_L"), parse_sequent("'q' |- 'p' < 'r'", d),
                      d);
  REQUIRE(w.size() == 1);
  CHECK(congruent_occurrences(*c.find("W1_L"), w.front(), d, {Path::Ante, {}})
            .empty());
  CHECK(congruent_occurrences(*c.find("W1_L"), w.front(), d,
                              {Path::Succ, {1}})
            .size() == 1);
  // Principal formulas have no congruent premise occurrences.
  auto ar = match_rule(*c.find("and_R"),
                       parse_sequent("'p' ; 'q' |- 'p & q'", d), d);
  REQUIRE(ar.size() == 1);
  CHECK(congruent_occurrences(*c.find("and_R"), ar.front(), d,
                              {Path::Succ, {}})
            .empty());
  CHECK(is_principal(*c.find("and_R"), ar.front(), d,
                     parse_sequent("'p' ; 'q' |- 'p & q'", d),
                     {Path::Succ, {}}));
}
