#include "deak/cutelim.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "deak/parser.hpp"

namespace deak {

// ---------------------------------------------------------------------------
// Principal reduction templates

namespace {

ProofTreePtr step(const char* rule, Sequent concl, ProofTreePtr child) {
  return mk_proof(rule, std::move(concl), {std::move(child)});
}

ProofTreePtr cut2(Sequent concl, ProofTreePtr l, ProofTreePtr r) {
  return mk_proof("Cut", std::move(concl), {std::move(l), std::move(r)});
}

// The binary-connective reductions: two smaller cuts threaded through
// exchange and the display postulates.

ProofTreePtr reduce_and(const ProofTree& pi1, const ProofTree& pi2,
                        const Sequent&) {
  FormulaPtr f = pi1.conclusion.succ->fm;
  StructurePtr A = sFm(f->lhs), B = sFm(f->rhs);
  StructurePtr X1 = pi1.children[0]->conclusion.ante;
  StructurePtr Y1 = pi1.children[1]->conclusion.ante;
  StructurePtr Z = pi2.children[0]->conclusion.succ;
  auto t = clone_proof(*pi2.children[0]);                   // A ; B |- Z
  t = step("E_L", {sSemi(B, A), Z}, t);
  t = step("disp3", {A, sGt(B, Z)}, t);
  t = cut2({X1, sGt(B, Z)}, clone_proof(*pi1.children[0]), t);
  t = step("disp3_rev", {sSemi(B, X1), Z}, t);
  t = step("E_L", {sSemi(X1, B), Z}, t);
  t = step("disp3", {B, sGt(X1, Z)}, t);
  t = cut2({Y1, sGt(X1, Z)}, clone_proof(*pi1.children[1]), t);
  return step("disp3_rev", {sSemi(X1, Y1), Z}, t);
}

ProofTreePtr reduce_or(const ProofTree& pi1, const ProofTree& pi2,
                       const Sequent&) {
  FormulaPtr f = pi2.conclusion.ante->fm;
  StructurePtr A = sFm(f->lhs), B = sFm(f->rhs);
  StructurePtr Z = pi1.children[0]->conclusion.ante;
  StructurePtr X1 = pi2.children[0]->conclusion.succ;
  StructurePtr Y1 = pi2.children[1]->conclusion.succ;
  auto t = clone_proof(*pi1.children[0]);                   // Z |- A ; B
  t = step("E_R", {Z, sSemi(B, A)}, t);
  t = step("disp4", {sGt(B, Z), A}, t);
  t = cut2({sGt(B, Z), X1}, t, clone_proof(*pi2.children[0]));
  t = step("disp4_rev", {Z, sSemi(B, X1)}, t);
  t = step("E_R", {Z, sSemi(X1, B)}, t);
  t = step("disp4", {sGt(X1, Z), B}, t);
  t = cut2({sGt(X1, Z), Y1}, t, clone_proof(*pi2.children[1]));
  return step("disp4_rev", {Z, sSemi(X1, Y1)}, t);
}

ProofTreePtr reduce_imp(const ProofTree& pi1, const ProofTree& pi2,
                        const Sequent&) {
  FormulaPtr f = pi2.conclusion.ante->fm;
  StructurePtr A = sFm(f->lhs), B = sFm(f->rhs);
  StructurePtr Yc = pi1.children[0]->conclusion.ante;
  StructurePtr X1 = pi2.children[0]->conclusion.ante;
  StructurePtr Y1 = pi2.children[1]->conclusion.succ;
  auto t = clone_proof(*pi1.children[0]);                   // Yc |- A > B
  t = step("disp3_rev", {sSemi(A, Yc), B}, t);
  t = cut2({sSemi(A, Yc), Y1}, t, clone_proof(*pi2.children[1]));
  t = step("E_L", {sSemi(Yc, A), Y1}, t);
  t = step("disp3", {A, sGt(Yc, Y1)}, t);
  t = cut2({X1, sGt(Yc, Y1)}, clone_proof(*pi2.children[0]), t);
  t = step("disp3_rev", {sSemi(Yc, X1), Y1}, t);
  t = step("E_L", {sSemi(X1, Yc), Y1}, t);
  return step("disp3", {Yc, sGt(X1, Y1)}, t);
}

ProofTreePtr reduce_coimp(const ProofTree& pi1, const ProofTree& pi2,
                          const Sequent&) {
  FormulaPtr f = pi1.conclusion.succ->fm;
  StructurePtr A = sFm(f->lhs), B = sFm(f->rhs);
  StructurePtr X1 = pi1.children[0]->conclusion.succ;
  StructurePtr Y1 = pi1.children[1]->conclusion.ante;
  StructurePtr Zo = pi2.children[0]->conclusion.succ;
  auto t = clone_proof(*pi2.children[0]);                   // A > B |- Zo
  t = step("disp4_rev", {B, sSemi(A, Zo)}, t);
  t = cut2({Y1, sSemi(A, Zo)}, clone_proof(*pi1.children[1]), t);
  t = step("E_R", {Y1, sSemi(Zo, A)}, t);
  t = step("disp4", {sGt(Zo, Y1), A}, t);
  t = cut2({sGt(Zo, Y1), X1}, t, clone_proof(*pi1.children[0]));
  t = step("disp4_rev", {Y1, sSemi(Zo, X1)}, t);
  t = step("E_R", {Y1, sSemi(X1, Zo)}, t);
  return step("disp4", {sGt(X1, Y1), Zo}, t);
}

ProofTreePtr reduce_limp(const ProofTree& pi1, const ProofTree& pi2,
                         const Sequent&) {
  FormulaPtr f = pi2.conclusion.ante->fm;
  StructurePtr B = sFm(f->lhs), A = sFm(f->rhs);
  StructurePtr Zo = pi1.children[0]->conclusion.ante;
  StructurePtr Y1 = pi2.children[0]->conclusion.succ;
  StructurePtr X1 = pi2.children[1]->conclusion.ante;
  auto t = clone_proof(*pi1.children[0]);                   // Zo |- B < A
  t = step("disp1_rev", {sSemi(Zo, A), B}, t);
  t = cut2({sSemi(Zo, A), Y1}, t, clone_proof(*pi2.children[0]));
  t = step("E_L", {sSemi(A, Zo), Y1}, t);
  t = step("disp1", {A, sLt(Y1, Zo)}, t);
  t = cut2({X1, sLt(Y1, Zo)}, clone_proof(*pi2.children[1]), t);
  t = step("disp1_rev", {sSemi(X1, Zo), Y1}, t);
  t = step("E_L", {sSemi(Zo, X1), Y1}, t);
  return step("disp1", {Zo, sLt(Y1, X1)}, t);
}

ProofTreePtr reduce_lcoimp(const ProofTree& pi1, const ProofTree& pi2,
                           const Sequent&) {
  FormulaPtr f = pi1.conclusion.succ->fm;
  StructurePtr B = sFm(f->lhs), A = sFm(f->rhs);
  StructurePtr Y1 = pi1.children[0]->conclusion.ante;
  StructurePtr X1 = pi1.children[1]->conclusion.succ;
  StructurePtr Zo = pi2.children[0]->conclusion.succ;
  auto t = clone_proof(*pi2.children[0]);                   // B < A |- Zo
  t = step("disp2_rev", {B, sSemi(Zo, A)}, t);
  t = cut2({Y1, sSemi(Zo, A)}, clone_proof(*pi1.children[0]), t);
  t = step("E_R", {Y1, sSemi(A, Zo)}, t);
  t = step("disp2", {sLt(Y1, Zo), A}, t);
  t = cut2({sLt(Y1, Zo), X1}, t, clone_proof(*pi1.children[1]));
  t = step("disp2_rev", {Y1, sSemi(X1, Zo)}, t);
  t = step("E_R", {Y1, sSemi(Zo, X1)}, t);
  return step("disp2", {sLt(Y1, X1), Zo}, t);
}

// Modal reductions, parameterized by the proxy constructors and display
// postulates of the diamond/box family at hand.
struct ModalKit {
  std::function<StructurePtr(StructurePtr)> prox, adj;
  const char* disp_up;    // prox(X) |- Y  =>  X |- adj(Y)  (or its mirror)
  const char* disp_down;
};

ProofTreePtr reduce_dia_like(const ProofTree& pi1, const ProofTree& pi2,
                             const ModalKit& k) {
  StructurePtr A = sFm(pi1.conclusion.succ->fm->lhs);
  StructurePtr X1 = pi1.children[0]->conclusion.ante;
  StructurePtr Y1 = pi2.conclusion.succ;
  auto t = clone_proof(*pi2.children[0]);                   // prox(A) |- Y1
  t = step(k.disp_up, {A, k.adj(Y1)}, t);
  t = cut2({X1, k.adj(Y1)}, clone_proof(*pi1.children[0]), t);
  return step(k.disp_down, {k.prox(X1), Y1}, t);
}

ProofTreePtr reduce_box_like(const ProofTree& pi1, const ProofTree& pi2,
                             const ModalKit& k) {
  StructurePtr X1 = pi1.conclusion.ante;
  StructurePtr Y1 = pi2.children[0]->conclusion.succ;
  auto t = clone_proof(*pi1.children[0]);                   // X1 |- prox(A)
  t = step(k.disp_up, {k.adj(X1), sFm(pi1.conclusion.succ->fm->lhs)}, t);
  t = cut2({k.adj(X1), Y1}, t, clone_proof(*pi2.children[0]));
  return step(k.disp_down, {X1, k.prox(Y1)}, t);
}

ModalKit agent_kit(const Agent& a, bool adjoint, bool box) {
  ModalKit k;
  auto pr = [a](StructurePtr s) { return sProx(a, std::move(s)); };
  auto ap = [a](StructurePtr s) { return sAdjProx(a, std::move(s)); };
  if (!adjoint) {
    k.prox = pr;
    k.adj = ap;
    k.disp_up = box ? "disp_a2" : "disp_a1";
    k.disp_down = box ? "disp_a2_rev" : "disp_a1_rev";
  } else {
    k.prox = ap;
    k.adj = pr;
    k.disp_up = box ? "disp_a1_rev" : "disp_a2_rev";
    k.disp_down = box ? "disp_a1" : "disp_a2";
  }
  return k;
}

ModalKit action_kit(const ActionLabel& l, bool adjoint, bool box) {
  ModalKit k;
  auto dp = [l](StructurePtr s) { return sDProx(l, std::move(s)); };
  auto ad = [l](StructurePtr s) { return sAdjDProx(l, std::move(s)); };
  if (!adjoint) {
    k.prox = dp;
    k.adj = ad;
    k.disp_up = box ? "disp_d2" : "disp_d1";
    k.disp_down = box ? "disp_d2_rev" : "disp_d1_rev";
  } else {
    k.prox = ad;
    k.adj = dp;
    k.disp_up = box ? "disp_d1_rev" : "disp_d2_rev";
    k.disp_down = box ? "disp_d1" : "disp_d2";
  }
  return k;
}

ProofTreePtr reduce_modal(const ProofTree& pi1, const ProofTree& pi2,
                          const Sequent&) {
  FormulaPtr f = pi1.conclusion.succ->fm;
  bool box = f->kind == FK::Box || f->kind == FK::AdjBox ||
             f->kind == FK::DBox || f->kind == FK::AdjDBox;
  bool adjoint = f->kind == FK::AdjDia || f->kind == FK::AdjBox ||
                 f->kind == FK::AdjDDia || f->kind == FK::AdjDBox;
  bool dynamic = f->kind == FK::DDia || f->kind == FK::DBox ||
                 f->kind == FK::AdjDDia || f->kind == FK::AdjDBox;
  ModalKit k = dynamic ? action_kit(f->act, adjoint, box)
                       : agent_kit(f->agent, adjoint, box);
  return box ? reduce_box_like(pi1, pi2, k) : reduce_dia_like(pi1, pi2, k);
}

std::vector<ReductionTemplate> make_reductions() {
  std::vector<ReductionTemplate> t;
  auto add = [&](FK k, const char* l, const char* r, auto fn) {
    t.push_back({k, l, r, fn});
  };
  add(FK::Top, "top_L", "top_R",
      [](const ProofTree&, const ProofTree& pi2, const Sequent&) {
        return clone_proof(*pi2.children[0]);
      });
  add(FK::Bot, "bot_L", "bot_R",
      [](const ProofTree& pi1, const ProofTree&, const Sequent&) {
        return clone_proof(*pi1.children[0]);
      });
  add(FK::One, "one_L", "one_R",
      [](const ProofTree&, const ProofTree& pi2, const Sequent&) {
        return clone_proof(*pi2.children[0]);
      });
  add(FK::And, "and_L", "and_R", reduce_and);
  add(FK::Or, "or_L", "or_R", reduce_or);
  add(FK::Imp, "imp_L", "imp_R", reduce_imp);
  add(FK::CoImp, "coimp_L", "coimp_R", reduce_coimp);
  add(FK::LImp, "limp_L", "limp_R", reduce_limp);
  add(FK::LCoImp, "lcoimp_L", "lcoimp_R", reduce_lcoimp);
  add(FK::Dia, "dia_L", "dia_R", reduce_modal);
  add(FK::Box, "box_L", "box_R", reduce_modal);
  add(FK::AdjDia, "adj_dia_L", "adj_dia_R", reduce_modal);
  add(FK::AdjBox, "adj_box_L", "adj_box_R", reduce_modal);
  add(FK::DDia, "ddia_L", "ddia_R", reduce_modal);
  add(FK::DBox, "dbox_L", "dbox_R", reduce_modal);
  add(FK::AdjDDia, "adj_ddia_L", "adj_ddia_R", reduce_modal);
  add(FK::AdjDBox, "adj_dbox_L", "adj_dbox_R", reduce_modal);
  // Atomic cut formulas close via the axiom schemas (C8' closure); the
  // rewrite is realized inside reduce_principal.
  add(FK::Atom, "atom", "atom", nullptr);
  return t;
}

}  // namespace

const std::vector<ReductionTemplate>& builtin_reductions() {
  static const std::vector<ReductionTemplate> table = make_reductions();
  return table;
}

ProofTreePtr reduce_principal(const ProofTree& cut, const Calculus& calc,
                              const Declarations& decls) {
  if (cut.rule != "Cut" || cut.children.size() != 2)
    throw CutElimError("reduce_principal: not a Cut node");
  const ProofTree& pi1 = *cut.children[0];
  const ProofTree& pi2 = *cut.children[1];
  // (a) one premise already proves the conclusion.
  if (equal(pi1.conclusion, cut.conclusion)) return clone_proof(pi1);
  if (equal(pi2.conclusion, cut.conclusion)) return clone_proof(pi2);
  // (b) axiom-axiom closure.
  const RuleSchema* r1 = calc.find(pi1.rule);
  const RuleSchema* r2 = calc.find(pi2.rule);
  if (r1 && r2 && r1->family == RuleFamily::Axiom &&
      r2->family == RuleFamily::Axiom) {
    for (const RuleSchema* ax : calc.axioms())
      if (!match_rule(*ax, cut.conclusion, decls).empty())
        return mk_proof(ax->name, cut.conclusion);
    throw CutElimError("axiom closure failed for " +
                       render(cut.conclusion, nullptr));
  }
  // (c) the reduction template of the cut formula's head.
  if (pi1.conclusion.succ->kind != SK::Fm)
    throw CutElimError("reduce_principal: malformed cut premise");
  FK head = pi1.conclusion.succ->fm->kind;
  for (const auto& t : builtin_reductions()) {
    if (t.connective != head || !t.rewrite) continue;
    if (pi1.rule != t.right_rule || pi2.rule != t.left_rule)
      throw CutElimError("no-template: principal cut on unexpected rules " +
                         pi1.rule + "/" + pi2.rule);
    return t.rewrite(pi1, pi2, cut.conclusion);
  }
  throw CutElimError("no-template for cut formula head");
}

// ---------------------------------------------------------------------------
// Parametric stage

namespace {

struct ParamCtx {
  const Calculus& calc;
  const Declarations& decls;
  bool right;              // traversing the right premise (precedent side)
  StructurePtr repl;       // structure substituted for the cut formula
  const ProofTree* other;  // the premise kept intact
};

ProofTreePtr leaf_cut(const ParamCtx& cx, const ProofTree& node,
                      Sequent subbed) {
  if (cx.right)
    return mk_proof("Cut", std::move(subbed),
                    {clone_proof(*cx.other), clone_proof(node)});
  return mk_proof("Cut", std::move(subbed),
                  {clone_proof(node), clone_proof(*cx.other)});
}

// C5''-leaf: the occurrence is principal in an axiom but not displayed.
// Swap in the display-equivalent axiom, cut against it, and replay the
// display chain with the substituted structure.
ProofTreePtr c5pp_leaf(const ParamCtx& cx, const ProofTree& node,
                       const Path& occ) {
  DisplayResult dr = display_at(node.conclusion, occ, cx.calc, cx.decls);
  std::string axname;
  for (const RuleSchema* ax : cx.calc.axioms()) {
    if (!match_rule(*ax, dr.displayed, cx.decls).empty()) {
      axname = ax->name;
      break;
    }
  }
  if (axname.empty())
    throw CutElimError(
        "internal-invariant-violation: display-equivalent sequent is not an "
        "axiom: " +
        render(dr.displayed, nullptr));
  ProofTree axleaf;
  axleaf.rule = axname;
  axleaf.conclusion = dr.displayed;
  Path rootocc{cx.right ? Path::Ante : Path::Succ, {}};
  ProofTreePtr cur =
      leaf_cut(cx, axleaf, substitute(dr.displayed, {rootocc}, cx.repl));
  // Track the occurrence down the display chain and rebuild it substituted.
  std::vector<const ProofTree*> chain;
  for (const ProofTree* t = dr.derivation.get();; t = t->children[0].get()) {
    chain.push_back(t);
    if (t->children.empty()) break;
  }
  std::vector<Path> paths(chain.size());
  paths[0] = occ;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    const RuleSchema* r = cx.calc.find(chain[i]->rule);
    auto asgs = match_inference(*r, chain[i]->conclusion,
                                {chain[i + 1]->conclusion}, cx.decls);
    if (asgs.empty())
      throw CutElimError("internal: display chain does not re-check");
    auto cong =
        congruent_occurrences(*r, asgs.front(), cx.decls, paths[i]);
    if (cong.empty())
      throw CutElimError("internal: display chain loses the occurrence");
    paths[i + 1] = cong.front().second;
  }
  for (size_t i = chain.size() - 1; i-- > 0;) {
    cur = mk_proof(chain[i]->rule,
                   substitute(chain[i]->conclusion, {paths[i]}, cx.repl),
                   {cur});
  }
  return cur;
}

ProofTreePtr transform(const ParamCtx& cx, const ProofTree& node,
                       const std::set<Path>& occs) {
  if (occs.empty()) return clone_proof(node);
  const RuleSchema* rule = cx.calc.find(node.rule);
  if (!rule || !node.assignment)
    throw CutElimError("internal: unchecked node in parametric stage");
  std::map<int, std::set<Path>> up;
  std::vector<Path> principal_leaves;
  for (const Path& occ : occs) {
    auto cong =
        congruent_occurrences(*rule, *node.assignment, cx.decls, occ);
    if (!cong.empty()) {
      for (const auto& [i, q] : cong) up[i].insert(q);
      continue;
    }
    if (is_principal(*rule, *node.assignment, cx.decls, node.conclusion, occ))
      principal_leaves.push_back(occ);
    // else: introduced-parametric; plain substitution suffices.
  }
  if (!principal_leaves.empty()) {
    if (occs.size() != 1)
      throw CutElimError(
          "internal-invariant-violation: mixed principal and parametric "
          "occurrences in one sequent");
    const Path& occ = principal_leaves.front();
    if (occ.steps.empty())
      return leaf_cut(cx, node, substitute(node.conclusion, {occ}, cx.repl));
    if (rule->family != RuleFamily::Axiom)
      throw CutElimError(
          "internal-invariant-violation: undisplayed principal occurrence "
          "in a non-axiom rule");
    return c5pp_leaf(cx, node, occ);
  }
  std::vector<ProofTreePtr> kids;
  for (size_t i = 0; i < node.children.size(); ++i) {
    auto it = up.find(static_cast<int>(i));
    kids.push_back(it == up.end()
                       ? clone_proof(*node.children[i])
                       : transform(cx, *node.children[i], it->second));
  }
  return mk_proof(node.rule, substitute(node.conclusion, occs, cx.repl),
                  std::move(kids));
}

}  // namespace

ProofTreePtr parametric_step(const ProofTree& cut, const Calculus& calc,
                             const Declarations& decls) {
  if (cut.rule != "Cut" || cut.children.size() != 2)
    throw CutElimError("parametric_step: not a Cut node");
  const ProofTree& pi1 = *cut.children[0];
  const ProofTree& pi2 = *cut.children[1];
  const RuleSchema* r2 = calc.find(pi2.rule);
  if (!r2 || !pi2.assignment || !pi1.assignment)
    throw CutElimError("internal: unchecked cut premises");
  bool right_par = !is_principal(*r2, *pi2.assignment, decls, pi2.conclusion,
                                 {Path::Ante, {}});
  if (right_par) {
    ParamCtx cx{calc, decls, true, pi1.conclusion.ante, &pi1};
    return transform(cx, pi2, {Path{Path::Ante, {}}});
  }
  ParamCtx cx{calc, decls, false, pi2.conclusion.succ, &pi2};
  return transform(cx, pi1, {Path{Path::Succ, {}}});
}

// ---------------------------------------------------------------------------
// The elimination loop

namespace {

ProofTreePtr* find_topmost_cut(ProofTreePtr& p) {
  for (auto& c : p->children)
    if (ProofTreePtr* r = find_topmost_cut(c)) return r;
  return p->rule == "Cut" ? &p : nullptr;
}

int count_cuts(const ProofTree& p) {
  int n = p.rule == "Cut" ? 1 : 0;
  for (const auto& c : p.children) n += count_cuts(*c);
  return n;
}

}  // namespace

EliminateResult eliminate(const ProofTree& proof, const Calculus& calc,
                          const Declarations& decls, int fuel) {
  EliminateResult res;
  res.proof = clone_proof(proof);
  CheckReport rep = check(*res.proof, calc, decls);
  if (!rep.ok)
    throw CutElimError("eliminate: input does not check: " + rep.to_text());
  int initial_cuts = count_cuts(*res.proof);
  long long budget = fuel;
  int steps = 0;
  for (;;) {
    ProofTreePtr* slot = find_topmost_cut(res.proof);
    if (!slot) {
      res.complete = true;
      break;
    }
    const ProofTree& cut = **slot;
    const ProofTree& pi1 = *cut.children.at(0);
    const ProofTree& pi2 = *cut.children.at(1);
    if (pi1.conclusion.succ->kind == SK::Fm)
      res.max_complexity =
          std::max(res.max_complexity, size_of(pi1.conclusion.succ->fm));
    const RuleSchema* r1 = calc.find(pi1.rule);
    const RuleSchema* r2 = calc.find(pi2.rule);
    if (!r1 || !r2 || !pi1.assignment || !pi2.assignment)
      throw CutElimError("internal: cut premises not checked");
    bool shortcut = equal(pi1.conclusion, cut.conclusion) ||
                    equal(pi2.conclusion, cut.conclusion);
    bool both_axioms = r1->family == RuleFamily::Axiom &&
                       r2->family == RuleFamily::Axiom;
    bool lp = is_principal(*r1, *pi1.assignment, decls, pi1.conclusion,
                           {Path::Succ, {}});
    bool rp = is_principal(*r2, *pi2.assignment, decls, pi2.conclusion,
                           {Path::Ante, {}});
    ProofTreePtr replacement;
    if (shortcut || both_axioms || (lp && rp))
      replacement = reduce_principal(cut, calc, decls);
    else
      replacement = parametric_step(cut, calc, decls);
    budget -= proof_size(*replacement);
    ++steps;
    if (budget < 0) {
      res.complete = false;
      res.diagnostics = "fuel-exhausted after " + std::to_string(steps) +
                        " steps; " + std::to_string(count_cuts(*res.proof)) +
                        " cuts remain";
      return res;
    }
    *slot = replacement;
    CheckReport r = check(*res.proof, calc, decls);
    if (!r.ok)
      throw CutElimError("internal: rewritten proof does not check: " +
                         r.to_text());
  }
  res.cuts_eliminated = initial_cuts;
  res.diagnostics = std::to_string(steps) + " rewrite steps";
  return res;
}

// ---------------------------------------------------------------------------
// Linter

namespace {

// Occurrences of metavariables and formula leaves in a pattern sequent,
// together with their precedent/succedent polarity.
struct PatternOccs {
  std::vector<std::pair<std::string, Polarity>> svars;
  std::vector<std::pair<std::string, Polarity>> fvars;  // bare Fm(FVar) leaves
  std::vector<std::pair<FormulaPtr, Polarity>> fms;     // all Fm leaves
};

void walk_pattern(const StructurePtr& s, Polarity pol, PatternOccs& out) {
  switch (s->kind) {
    case SK::SVar:
      out.svars.emplace_back(s->name, pol);
      return;
    case SK::Fm:
      out.fms.emplace_back(s->fm, pol);
      if (s->fm->kind == FK::FVar) out.fvars.emplace_back(s->fm->name, pol);
      return;
    case SK::Gt:
      walk_pattern(s->lhs, pol == Polarity::Precedent ? Polarity::Succedent
                                                      : Polarity::Precedent,
                   out);
      walk_pattern(s->rhs, pol, out);
      return;
    case SK::Lt:
      walk_pattern(s->lhs, pol, out);
      walk_pattern(s->rhs, pol == Polarity::Precedent ? Polarity::Succedent
                                                      : Polarity::Precedent,
                   out);
      return;
    case SK::Semi:
      walk_pattern(s->lhs, pol, out);
      walk_pattern(s->rhs, pol, out);
      return;
    case SK::Prox: case SK::AdjProx: case SK::DProx: case SK::AdjDProx:
      walk_pattern(s->lhs, pol, out);
      return;
    case SK::I: case SK::Phi:
      return;
  }
}

PatternOccs pattern_occs(const Sequent& seq) {
  PatternOccs out;
  walk_pattern(seq.ante, Polarity::Precedent, out);
  walk_pattern(seq.succ, Polarity::Succedent, out);
  return out;
}

FormulaPtr principal_formula(const RuleSchema& r) {
  if (r.principal.empty()) return nullptr;
  const Path& p = r.principal.front();
  StructurePtr s =
      p.side == Path::Ante ? r.conclusion.ante : r.conclusion.succ;
  for (int st : p.steps) {
    if (!s) return nullptr;
    s = st == 0 ? s->lhs : s->rhs;
  }
  return s && s->kind == SK::Fm ? s->fm : nullptr;
}

bool counts_as_intro(const RuleSchema& r) {
  if (r.family == RuleFamily::OperationalLeft ||
      r.family == RuleFamily::OperationalRight)
    return true;
  if (r.family != RuleFamily::Axiom) return false;
  FormulaPtr f = principal_formula(r);
  // Id / atom introduce atoms, not connectives.
  return f && f->kind != FK::FVar;
}

int count_head(const FormulaPtr& f, FK head) {
  if (!f) return 0;
  return (f->kind == head ? 1 : 0) + count_head(f->lhs, head) +
         count_head(f->rhs, head);
}

// Sample proofs for the C8 check. Built programmatically from the shared
// weakening chains; every sample is itself checked before use.
struct SampleKit {
  Agent ag;
  ActionLabel al;
  bool has_action = false;

  static StructurePtr P(const char* n) { return sFm(fAtom(n)); }
  static ProofTreePtr id(const char* n) {
    return mk_proof("Id", {P(n), P(n)});
  }
  // fresh ; a |- a
  static ProofTreePtr ctxw_l(const char* fresh, const char* a) {
    auto t = id(a);
    t = step("W1_L", {P(fresh), sLt(P(a), P(a))}, t);
    return step("disp1_rev", {sSemi(P(fresh), P(a)), P(a)}, t);
  }
  // a |- fresh ; a
  static ProofTreePtr ctxw_r(const char* fresh, const char* a) {
    auto t = id(a);
    t = step("W1_R", {sLt(P(a), P(a)), P(fresh)}, t);
    return step("disp2_rev", {P(a), sSemi(P(fresh), P(a))}, t);
  }

  std::vector<ProofTreePtr> cuts(const Calculus& calc) const {
    std::vector<ProofTreePtr> out;
    auto have = [&](const char* r) { return calc.find(r) != nullptr; };
    FormulaPtr p = fAtom("p"), q = fAtom("q");
    if (have("and_R")) {
      auto pi1 = mk_proof("and_R", {sSemi(P("p"), P("q")), sFm(fAnd(p, q))},
                          {id("p"), id("q")});
      auto body = step("E_L", {sSemi(P("p"), P("q")), P("p")},
                       ctxw_l("q", "p"));
      auto pi2 = mk_proof("and_L", {sFm(fAnd(p, q)), P("p")}, {body});
      out.push_back(cut2({sSemi(P("p"), P("q")), P("p")}, pi1, pi2));
    }
    if (have("or_L")) {
      auto body = step("E_R", {P("p"), sSemi(P("p"), P("q"))},
                       ctxw_r("q", "p"));
      auto pi1 = mk_proof("or_R", {P("p"), sFm(fOr(p, q))}, {body});
      auto pi2 = mk_proof("or_L", {sFm(fOr(p, q)), sSemi(P("p"), P("q"))},
                          {id("p"), id("q")});
      out.push_back(cut2({P("p"), sSemi(P("p"), P("q"))}, pi1, pi2));
    }
    if (have("imp_R")) {
      auto body = step("disp3", {P("q"), sGt(P("p"), P("q"))},
                       ctxw_l("p", "q"));
      auto pi1 = mk_proof("imp_R", {P("q"), sFm(fImp(p, q))}, {body});
      auto pi2 = mk_proof("imp_L", {sFm(fImp(p, q)), sGt(P("p"), P("q"))},
                          {id("p"), id("q")});
      out.push_back(cut2({P("q"), sGt(P("p"), P("q"))}, pi1, pi2));
    }
    if (have("coimp_L")) {
      auto pi1 = mk_proof("coimp_R", {sGt(P("p"), P("q")), sFm(fCoImp(p, q))},
                          {id("p"), id("q")});
      auto body = step("disp4", {sGt(P("p"), P("q")), P("q")},
                       ctxw_r("p", "q"));
      auto pi2 = mk_proof("coimp_L", {sFm(fCoImp(p, q)), P("q")}, {body});
      out.push_back(cut2({sGt(P("p"), P("q")), P("q")}, pi1, pi2));
    }
    if (have("limp_R")) {
      auto body = step("disp1", {P("q"), sLt(P("q"), P("p"))},
                       step("E_L", {sSemi(P("q"), P("p")), P("q")},
                            ctxw_l("p", "q")));
      auto pi1 = mk_proof("limp_R", {P("q"), sFm(fLImp(q, p))}, {body});
      auto pi2 = mk_proof("limp_L", {sFm(fLImp(q, p)), sLt(P("q"), P("p"))},
                          {id("q"), id("p")});
      out.push_back(cut2({P("q"), sLt(P("q"), P("p"))}, pi1, pi2));
    }
    if (have("lcoimp_L")) {
      auto pi1 = mk_proof("lcoimp_R",
                          {sLt(P("q"), P("p")), sFm(fLCoImp(q, p))},
                          {id("q"), id("p")});
      auto body = step("disp2", {sLt(P("q"), P("p")), P("q")},
                       step("E_R", {P("q"), sSemi(P("q"), P("p"))},
                            ctxw_r("p", "q")));
      auto pi2 = mk_proof("lcoimp_L", {sFm(fLCoImp(q, p)), P("q")}, {body});
      out.push_back(cut2({sLt(P("q"), P("p")), P("q")}, pi1, pi2));
    }
    if (have("top_L")) {
      auto pi1 = mk_proof("top_R", {sI(), sFm(fTop())});
      auto pi2 = mk_proof("top_L", {sFm(fTop()), sFm(fTop())},
                          {mk_proof("top_R", {sI(), sFm(fTop())})});
      out.push_back(cut2({sI(), sFm(fTop())}, pi1, pi2));
    }
    if (have("bot_R")) {
      auto pi1 = mk_proof("bot_R", {sFm(fBot()), sFm(fBot())},
                          {mk_proof("bot_L", {sFm(fBot()), sI()})});
      auto pi2 = mk_proof("bot_L", {sFm(fBot()), sI()});
      out.push_back(cut2({sFm(fBot()), sI()}, pi1, pi2));
    }
    // Diamond/box families feed their own introduction rules.
    auto dia_sample = [&](const char* rrule, const char* lrule, FormulaPtr f,
                          StructurePtr prx) {
      auto pi1 = mk_proof(rrule, {prx, sFm(f)}, {id("p")});
      auto pi2 = mk_proof(lrule, {sFm(f), sFm(f)}, {clone_proof(*pi1)});
      out.push_back(cut2({prx, sFm(f)}, pi1, pi2));
    };
    auto box_sample = [&](const char* rrule, const char* lrule, FormulaPtr f,
                          StructurePtr prx) {
      auto pi2 = mk_proof(lrule, {sFm(f), prx}, {id("p")});
      auto pi1 = mk_proof(rrule, {sFm(f), sFm(f)}, {clone_proof(*pi2)});
      out.push_back(cut2({sFm(f), prx}, pi1, pi2));
    };
    if (have("dia_R"))
      dia_sample("dia_R", "dia_L", fDia(ag, p), sProx(ag, P("p")));
    if (have("box_L"))
      box_sample("box_R", "box_L", fBox(ag, p), sProx(ag, P("p")));
    if (have("adj_dia_R"))
      dia_sample("adj_dia_R", "adj_dia_L", fAdjDia(ag, p),
                 sAdjProx(ag, P("p")));
    if (have("adj_box_L"))
      box_sample("adj_box_R", "adj_box_L", fAdjBox(ag, p),
                 sAdjProx(ag, P("p")));
    if (has_action && have("ddia_R"))
      dia_sample("ddia_R", "ddia_L", fDDia(al, p), sDProx(al, P("p")));
    if (has_action && have("dbox_L"))
      box_sample("dbox_R", "dbox_L", fDBox(al, p), sDProx(al, P("p")));
    if (has_action && have("adj_ddia_R"))
      dia_sample("adj_ddia_R", "adj_ddia_L", fAdjDDia(al, p),
                 sAdjDProx(al, P("p")));
    if (has_action && have("adj_dbox_L"))
      box_sample("adj_dbox_R", "adj_dbox_L", fAdjDBox(al, p),
                 sAdjDProx(al, P("p")));
    if (has_action && have("one_L")) {
      auto pi1 = mk_proof("one_R", {sPhi(al), sFm(fOne(al))});
      auto pi2 = mk_proof("one_L", {sFm(fOne(al)), sFm(fOne(al))},
                          {mk_proof("one_R", {sPhi(al), sFm(fOne(al))})});
      out.push_back(cut2({sPhi(al), sFm(fOne(al))}, pi1, pi2));
    }
    return out;
  }

  // Axiom-axiom cuts for the C8' check.
  std::vector<ProofTreePtr> axiom_cuts(const Calculus& calc) const {
    std::vector<ProofTreePtr> out;
    out.push_back(cut2({P("p"), P("p")}, id("p"), id("p")));
    if (has_action && calc.find("atom")) {
      auto l = mk_proof("atom", {sDProx(al, P("p")), P("p")});
      auto r = mk_proof("atom", {P("p"), sAdjDProx(al, P("p"))});
      out.push_back(cut2({sDProx(al, P("p")), sAdjDProx(al, P("p"))},
                         clone_proof(*l), clone_proof(*r)));
      out.push_back(cut2({P("p"), sAdjDProx(al, P("p"))}, id("p"), r));
      out.push_back(cut2({sDProx(al, P("p")), P("p")}, l, id("p")));
    }
    return out;
  }
};

void add_cond(LintReport& rep, const std::string& name, Verdict v) {
  rep.conditions.emplace_back(name, std::move(v));
}

Verdict pass() { return {}; }

}  // namespace

const Verdict* LintReport::find(const std::string& cond) const {
  for (const auto& [n, v] : conditions)
    if (n == cond) return &v;
  return nullptr;
}

bool LintReport::quasi_proper() const {
  for (const auto& [n, v] : conditions) {
    if (n.size() >= 1 && n[0] == 'C' && v.state == Verdict::Fail)
      return false;
  }
  return true;
}

std::string LintReport::to_text() const {
  std::string out;
  for (const auto& [n, v] : conditions) {
    out += n;
    out += v.state == Verdict::Fail ? " FAIL" : " PASS";
    if (v.state == Verdict::Fail && !v.witnesses.empty()) {
      out += " " + v.witnesses.front().first;
      if (!v.witnesses.front().second.empty())
        out += " " + v.witnesses.front().second;
    }
    out += "\n";
  }
  return out;
}

LintReport lint(const Calculus& calc, const Declarations& decls) {
  LintReport rep;

  // C1: premise formulas are subformulas of conclusion formulas.
  {
    Verdict v;
    for (const auto& r : calc.rules) {
      if (r.family == RuleFamily::Axiom || r.name == "Cut") continue;
      PatternOccs co = pattern_occs(r.conclusion);
      FormulaSet allowed;
      for (const auto& [f, pol] : co.fms) {
        auto subs = subformulas(f);
        allowed.insert(subs.begin(), subs.end());
      }
      for (const auto& prem : r.premises) {
        for (const auto& [f, pol] : pattern_occs(prem).fms) {
          if (!allowed.count(f)) {
            v.state = Verdict::Fail;
            v.witnesses.emplace_back(
                r.name, render(f) + " not a subformula of the conclusion");
          }
        }
      }
    }
    add_cond(rep, "C1", v);
  }

  // C2: congruent occurrences carry the same metavariable — true by the
  // schema representation (parameters are metavariable regions).
  add_cond(rep, "C2", pass());

  // C3: each metavariable occurs at most once in the conclusion.
  {
    Verdict v;
    for (const auto& r : calc.rules) {
      // Formula occurrences in axioms are principal, not parametric.
      if (r.family == RuleFamily::Axiom) continue;
      std::map<std::string, int> counts;
      PatternOccs co = pattern_occs(r.conclusion);
      for (const auto& [n, pol] : co.svars) ++counts[n];
      for (const auto& [n, pol] : co.fvars) ++counts[n];
      for (const auto& [n, c] : counts) {
        if (c > 1) {
          v.state = Verdict::Fail;
          v.witnesses.emplace_back(r.name, n + " occurs " +
                                               std::to_string(c) +
                                               " times in the conclusion");
        }
      }
    }
    add_cond(rep, "C3", v);
  }

  // C4: congruent occurrences have equal polarity. Only variables present
  // in the conclusion participate in congruence.
  {
    Verdict v;
    for (const auto& r : calc.rules) {
      std::map<std::string, Polarity> concl_pol;
      PatternOccs co = pattern_occs(r.conclusion);
      for (const auto& [n, pol] : co.svars) concl_pol.emplace(n, pol);
      for (const auto& [n, pol] : co.fvars) concl_pol.emplace(n, pol);
      for (const auto& prem : r.premises) {
        PatternOccs po = pattern_occs(prem);
        auto check_var = [&](const std::string& n, Polarity pol) {
          auto it = concl_pol.find(n);
          if (it != concl_pol.end() && it->second != pol) {
            v.state = Verdict::Fail;
            v.witnesses.emplace_back(r.name, n + " changes polarity");
          }
        };
        for (const auto& [n, pol] : po.svars) check_var(n, pol);
        for (const auto& [n, pol] : po.fvars) check_var(n, pol);
      }
    }
    add_cond(rep, "C4", v);
  }

  // C5': principal formulas of non-axiom rules are displayed (whole side).
  {
    Verdict v;
    for (const auto& r : calc.rules) {
      if (r.family != RuleFamily::OperationalLeft &&
          r.family != RuleFamily::OperationalRight)
        continue;
      for (const Path& p : r.principal) {
        if (!p.steps.empty()) {
          v.state = Verdict::Fail;
          v.witnesses.emplace_back(r.name,
                                   "principal occurrence not displayed");
        }
      }
    }
    add_cond(rep, "C5'", v);
  }

  // C5'': axioms are display-invariant. Explore sample instances under the
  // display postulates and demand that every reachable sequent is an axiom.
  {
    Verdict v;
    SampleKit kit;
    if (!decls.agents.empty()) kit.ag = decls.agents.front();
    if (!decls.actions.empty()) {
      kit.al = decls.actions.begin()->second.label();
      kit.has_action = true;
    }
    std::vector<std::pair<std::string, Sequent>> samples;
    auto P = [](const char* n) { return sFm(fAtom(n)); };
    if (calc.find("Id")) samples.push_back({"Id", {P("p"), P("p")}});
    if (calc.find("atom") && kit.has_action) {
      samples.push_back({"atom", {sDProx(kit.al, P("p")), P("p")}});
      samples.push_back({"atom", {P("p"), sAdjDProx(kit.al, P("p"))}});
      samples.push_back(
          {"atom",
           {sDProx(kit.al, sAdjDProx(kit.al, P("p"))), sDProx(kit.al, P("p"))}});
    }
    if (calc.find("one_R") && kit.has_action)
      samples.push_back({"one_R", {sPhi(kit.al), sFm(fOne(kit.al))}});
    if (calc.find("bot_L")) samples.push_back({"bot_L", {sFm(fBot()), sI()}});
    if (calc.find("top_R")) samples.push_back({"top_R", {sI(), sFm(fTop())}});
    std::vector<const RuleSchema*> moves;
    for (const auto& r : calc.rules)
      if (r.display_move) moves.push_back(&r);
    auto is_axiom_instance = [&](const Sequent& s) {
      for (const RuleSchema* ax : calc.axioms())
        if (!match_rule(*ax, s, decls).empty()) return true;
      return false;
    };
    for (const auto& [name, seq] : samples) {
      std::deque<Sequent> queue{seq};
      std::set<std::string> seen{render(seq)};
      int explored = 0;
      while (!queue.empty() && explored < 64) {
        Sequent cur = queue.front();
        queue.pop_front();
        ++explored;
        for (const RuleSchema* m : moves) {
          for (const auto& asg : match_rule(*m, cur, decls)) {
            Inference inf = instantiate(*m, asg, decls);
            const Sequent& nxt = inf.premises.at(0);
            if (!seen.insert(render(nxt)).second) continue;
            if (!is_axiom_instance(nxt)) {
              v.state = Verdict::Fail;
              v.witnesses.emplace_back(
                  name, "display-equivalent " + render(nxt) +
                            " is not an axiom");
            } else {
              queue.push_back(nxt);
            }
          }
        }
      }
    }
    add_cond(rep, "C5''", v);
  }

  // C6/C7: every parametric metavariable occurs unrestricted. Rules carrying
  // a concrete restricted parameter (the legacy Pre(alpha)) fail.
  {
    Verdict v;
    for (const auto& r : calc.rules) {
      if (!r.restricted.empty()) {
        v.state = Verdict::Fail;
        v.witnesses.emplace_back(r.name,
                                 "restricted parameter " +
                                     render(r.restricted.front()));
      }
    }
    add_cond(rep, "C6", v);
    add_cond(rep, "C7", v);
  }

  // C8 / C8': template coverage plus sample-cut validation.
  {
    Verdict v8, v8p;
    SampleKit kit;
    if (!decls.agents.empty()) kit.ag = decls.agents.front();
    if (!decls.actions.empty()) {
      kit.al = decls.actions.begin()->second.label();
      kit.has_action = true;
    }
    // Coverage: every connective with intro rules on both sides has a
    // template.
    std::map<FK, int> left, right;
    for (const auto& r : calc.rules) {
      if (!counts_as_intro(r)) continue;
      FormulaPtr f = principal_formula(r);
      if (!f || f->kind == FK::FVar) continue;
      bool on_left = r.principal.front().side == Path::Ante;
      (on_left ? left : right)[f->kind]++;
    }
    for (const auto& [k, n] : left) {
      if (!right.count(k)) continue;
      bool found = false;
      for (const auto& t : builtin_reductions())
        if (t.connective == k) found = true;
      if (!found) {
        v8.state = Verdict::Fail;
        v8.witnesses.emplace_back("<table>", "no template for a connective");
      }
    }
    auto validate = [&](const std::vector<ProofTreePtr>& cuts, Verdict& v) {
      for (const auto& cut : cuts) {
        auto probe = clone_proof(*cut);
        CheckReport cr = check(*probe, calc, decls);
        if (!cr.ok) {
          v.state = Verdict::Fail;
          v.witnesses.emplace_back("<sample>", "sample cut does not check: " +
                                                   cr.to_text());
          continue;
        }
        try {
          ProofTreePtr red = reduce_principal(*probe, calc, decls);
          CheckReport rr = check(*red, calc, decls);
          if (!rr.ok || !equal(red->conclusion, probe->conclusion)) {
            v.state = Verdict::Fail;
            v.witnesses.emplace_back("<sample>", "reduced proof invalid");
            continue;
          }
          // Residual cuts act on proper subformulas.
          int orig = size_of(probe->children[0]->conclusion.succ->fm);
          std::function<void(const ProofTree&)> scan =
              [&](const ProofTree& n) {
                if (n.rule == "Cut" &&
                    size_of(n.children[0]->conclusion.succ->fm) >= orig) {
                  v.state = Verdict::Fail;
                  v.witnesses.emplace_back("<sample>",
                                           "residual cut not smaller");
                }
                for (const auto& c : n.children) scan(*c);
              };
          scan(*red);
        } catch (const std::exception& e) {
          v.state = Verdict::Fail;
          v.witnesses.emplace_back("<sample>", e.what());
        }
      }
    };
    validate(kit.cuts(calc), v8);
    validate(kit.axiom_cuts(calc), v8p);
    if (v8.state == Verdict::Pass) v8.state = Verdict::Certified;
    if (v8p.state == Verdict::Pass) v8p.state = Verdict::Certified;
    add_cond(rep, "C8", v8);
    add_cond(rep, "C8'", v8p);
  }

  // Wansing criteria (informational).
  {
    Verdict sep, wsym, sym, wexp, expl, seg;
    std::map<FK, int> left, right;
    for (const auto& r : calc.rules) {
      if (!counts_as_intro(r)) continue;
      FormulaPtr pf = principal_formula(r);
      if (!pf || pf->kind == FK::FVar) continue;
      FK head = pf->kind;
      bool on_left = r.principal.front().side == Path::Ante;
      (on_left ? left : right)[head]++;

      // Separation: no foreign connective in the rule's formula patterns.
      // Arguments of the principal connective must be bare metavariables.
      bool sep_ok = !pf->lhs || pf->lhs->kind == FK::FVar;
      if (pf->rhs && pf->rhs->kind != FK::FVar) sep_ok = false;
      auto leaves_ok = [&](const Sequent& s) {
        for (const auto& [f, pol] : pattern_occs(s).fms)
          if (f->kind != FK::FVar && !equal(f, pf)) return false;
        return true;
      };
      if (!leaves_ok(r.conclusion)) sep_ok = false;
      for (const auto& p : r.premises)
        if (!leaves_ok(p)) sep_ok = false;
      if (!sep_ok) {
        sep.state = Verdict::Fail;
        sep.witnesses.emplace_back(r.name, "foreign material in intro rule");
      }

      // Weak symmetry: one rule never introduces on both sides.
      bool both_sides = false;
      for (const Path& p : r.principal)
        if ((p.side == Path::Ante) != on_left) both_sides = true;
      if (both_sides) {
        wsym.state = Verdict::Fail;
        wsym.witnesses.emplace_back(r.name, "introduces on both sides");
      }

      // Weak explicitness: the connective only appears in the conclusion.
      for (const auto& p : r.premises)
        for (const auto& [f, pol] : pattern_occs(p).fms)
          if (count_head(f, head) > 0) {
            wexp.state = Verdict::Fail;
            wexp.witnesses.emplace_back(r.name, "connective in premise");
          }
      // Explicitness: exactly one occurrence in the conclusion.
      int n = 0;
      for (const auto& [f, pol] : pattern_occs(r.conclusion).fms)
        n += count_head(f, head);
      if (n != 1) {
        expl.state = Verdict::Fail;
        expl.witnesses.emplace_back(r.name, "connective occurs " +
                                                std::to_string(n) +
                                                " times in conclusion");
      }
    }

    // Symmetry: both intro directions exist per connective.
    for (const auto& [k, n] : left)
      if (!right.count(k)) {
        sym.state = Verdict::Fail;
        sym.witnesses.emplace_back("<connective>", "left intro only");
      }
    for (const auto& [k, n] : right)
      if (!left.count(k)) {
        sym.state = Verdict::Fail;
        sym.witnesses.emplace_back("<connective>", "right intro only");
      }

    // Segregation: active formulas appear in an empty context. The atom
    // axiom offends: its principal atoms may sit inside nonempty proxy
    // strings.
    for (const auto& r : calc.rules) {
      if (r.special == SpecialForm::AtomAxiom) {
        seg.state = Verdict::Fail;
        seg.witnesses.emplace_back(
            r.name, "principal atom may occur inside a proxy string");
        continue;
      }
      if (r.family != RuleFamily::OperationalLeft &&
          r.family != RuleFamily::OperationalRight &&
          r.family != RuleFamily::Axiom)
        continue;
      FormulaPtr pf = principal_formula(r);
      if (!pf || pf->kind == FK::FVar) continue;
      FormulaSet active;
      active.insert(pf);
      if (pf->lhs && pf->lhs->kind == FK::FVar) active.insert(pf->lhs);
      if (pf->rhs && pf->rhs->kind == FK::FVar) active.insert(pf->rhs);
      auto side_ok = [&](const StructurePtr& s, Polarity pol) {
        PatternOccs o;
        walk_pattern(s, pol, o);
        bool has_active = false;
        for (const auto& [f, p] : o.fms)
          if (active.count(f)) has_active = true;
        if (!has_active) return true;
        if (!o.svars.empty()) return false;
        for (const auto& [f, p] : o.fms)
          if (!active.count(f)) return false;
        return true;
      };
      auto seq_ok = [&](const Sequent& s) {
        return side_ok(s.ante, Polarity::Precedent) &&
               side_ok(s.succ, Polarity::Succedent);
      };
      bool ok = seq_ok(r.conclusion);
      for (const auto& p : r.premises) ok = ok && seq_ok(p);
      if (!ok) {
        seg.state = Verdict::Fail;
        seg.witnesses.emplace_back(r.name,
                                   "active formula in nonempty context");
      }
    }
    add_cond(rep, "separation", sep);
    add_cond(rep, "weak-symmetry", wsym);
    add_cond(rep, "symmetry", sym);
    add_cond(rep, "weak-explicitness", wexp);
    add_cond(rep, "explicitness", expl);
    add_cond(rep, "segregation", seg);
  }

  return rep;
}

}  // namespace deak
