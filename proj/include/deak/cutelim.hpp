#ifndef DEAK_CUTELIM_HPP
#define DEAK_CUTELIM_HPP

// Belnap-style cut elimination (principal reductions + parametric stage) and
// the condition linter for quasi proper display calculi.

#include "deak/proofs.hpp"

namespace deak {

// ---------------------------------------------------------------------------
// Principal reduction templates

struct ReductionTemplate {
  FK connective;            // operational head of the eliminated cut formula
  std::string left_rule;    // rule introducing it on the left (in pi2)
  std::string right_rule;   // rule introducing it on the right (in pi1)
  // Rewrites Cut(pi1, pi2) into a proof of the same conclusion whose
  // residual cuts act on proper subformulas.
  std::function<ProofTreePtr(const ProofTree& pi1, const ProofTree& pi2,
                             const Sequent& concl)>
      rewrite;
};

const std::vector<ReductionTemplate>& builtin_reductions();

struct CutElimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rewrite a Cut node whose cut-formula occurrences are both principal (or
// which admits a premise-identical shortcut / axiom-axiom closure).
ProofTreePtr reduce_principal(const ProofTree& cut, const Calculus& calc,
                              const Declarations& decls);

// Push a parametric cut upward through the parametric premise's subproof:
// substitution along the history tree, with fresh (smaller-rank) cuts at
// principal leaves and display-equivalent axioms at undisplayed axiom leaves.
ProofTreePtr parametric_step(const ProofTree& cut, const Calculus& calc,
                             const Declarations& decls);

struct EliminateResult {
  ProofTreePtr proof;
  bool complete = false;   // false iff the fuel budget ran out
  int cuts_eliminated = 0;
  int max_complexity = 0;  // largest cut-formula size encountered
  std::string diagnostics;
};

// Repeatedly reduce the topmost-leftmost Cut. `fuel` bounds the number of
// generated proof nodes.
EliminateResult eliminate(const ProofTree& proof, const Calculus& calc,
                          const Declarations& decls, int fuel = 100000);

// ---------------------------------------------------------------------------
// Linter

struct Verdict {
  enum State { Pass, Fail, Certified };
  State state = Pass;
  // (rule, detail) pairs for failures; first entry is the reported witness.
  std::vector<std::pair<std::string, std::string>> witnesses;
};

struct LintReport {
  // Fixed order: C1 C2 C3 C4 C5' C5'' C6 C7 C8 C8' separation
  // weak-symmetry symmetry weak-explicitness explicitness segregation.
  std::vector<std::pair<std::string, Verdict>> conditions;

  const Verdict* find(const std::string& cond) const;
  // True iff every C-condition passes (Wansing criteria are informational).
  bool quasi_proper() const;
  // One line per condition: `<cond> PASS|FAIL <rule> <witness>`.
  std::string to_text() const;
};

LintReport lint(const Calculus& calc, const Declarations& decls);

}  // namespace deak

#endif  // DEAK_CUTELIM_HPP
